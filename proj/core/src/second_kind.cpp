#include "catqi/second_kind.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "catqi/factorials.hpp"

namespace catqi {

namespace {

void require_order(int n) {
  if (n < 0) throw DomainError("series index must be nonnegative, got " + std::to_string(n));
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be positive and finite, got " + std::to_string(v));
  }
}

}  // namespace

RationalParams::RationalParams(BigRat a, BigRat b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.sign() <= 0) throw DomainError("a must be positive, got " + a_.to_string());
  if (b_.sign() <= 0) throw DomainError("b must be positive, got " + b_.to_string());
}

Params::Params(double a, double b) : a_(a), b_(b) {
  require_positive(a, "a");
  require_positive(b, "b");
}

QuadExt cq2_explicit(const RationalParams& p, int n) {
  require_order(n);
  const BigRat& b = p.b();
  // 1/(1 + a/sqrt(b)) with a/sqrt(b) = (a/b) sqrt(b)
  const QuadExt ratio = QuadExt(BigRat(1), p.a() / b, b).inv();
  QuadExt sum = QuadExt::rational(BigRat{}, b);
  QuadExt ratio_pow = ratio;  // ratio^{k+1}
  for (int k = 0; k <= n; ++k) {
    const BigRat c = binomial(2 * n - k - 1, 2 * (n - k));
    if (!c.is_zero()) {
      sum += ratio_pow * (c * BigRat(factorial(k)) * double_factorial(2 * (n - k) - 1));
    }
    ratio_pow *= ratio;
  }
  // 1/((2n)!! b^{n+1/2}) = sqrt(b) / ((2n)!! b^{n+1})
  const BigRat scale = BigRat(1) / (double_factorial(2 * n) * pow(b, n + 1));
  return sum * QuadExt(BigRat{}, scale, b);
}

double cq2_explicit_float(const Params& p, int n) {
  require_order(n);
  const double a = p.a();
  const double b = p.b();
  const double root_b = std::sqrt(b);
  const double rho = root_b / (a + root_b);  // 1/(1 + a/sqrt(b))

  // Term j = n - k relative to the j = 0 term 2^{-n} rho^{n+1}; the ratios
  // T_{j+1}/T_j = (n+j)(n-j-1) / (2(j+1)(n-j) rho) decrease in j, so the
  // terms are unimodal and never underflow before the peak.
  constexpr int kRescaleBits = 800;
  constexpr double kRescaleAt = 0x1p+200;
  double sum = 1.0;
  double term = 1.0;
  long scale_bits = 0;
  for (int j = 0; j + 1 < n; ++j) {
    term *= (static_cast<double>(n + j) * static_cast<double>(n - j - 1)) /
            (2.0 * static_cast<double>(j + 1) * static_cast<double>(n - j) * rho);
    sum += term;
    if (sum > kRescaleAt) {
      sum = std::ldexp(sum, -kRescaleBits);
      term = std::ldexp(term, -kRescaleBits);
      scale_bits += kRescaleBits;
    }
  }

  // C_n = sum * 2^{scale - n} * rho^{n+1} b^{-(n+1/2)} = sum * 2^{scale - n} (rho/b)^{n+1} sqrt(b)
  int sum_exp = 0;
  const double sum_mant = std::frexp(sum, &sum_exp);
  const double power = std::pow(rho / b, n + 1);
  double result = 0.0;
  if (std::isnormal(power)) {
    int pow_exp = 0;
    const double pow_mant = std::frexp(power, &pow_exp);
    const long total = static_cast<long>(sum_exp) + pow_exp + scale_bits - n;
    if (total > 4096 || total < -4096) {
      result = total > 0 ? HUGE_VAL : 0.0;
    } else {
      result = std::ldexp(sum_mant * pow_mant * root_b, static_cast<int>(total));
    }
  } else {
    const double log_value = std::log(sum) + static_cast<double>(scale_bits - n) * std::log(2.0) +
                             static_cast<double>(n + 1) * std::log(rho / b) + 0.5 * std::log(b);
    result = std::exp(log_value);
  }
  if (!std::isfinite(result)) {
    throw std::overflow_error("C_" + std::to_string(n) + "(a, b) overflows double precision");
  }
  return result;
}

ExactSeries cq2_series(const RationalParams& p, int order) {
  require_order(order);
  const BigRat& b = p.b();
  const BigRat half(BigInt(1), BigInt(2));
  const BigRat minus_inv_b = -(BigRat(1) / b);
  std::vector<QuadExt> root;  // sqrt(b - x)
  root.reserve(static_cast<std::size_t>(order) + 1);
  BigRat coeff(1);  // binom(1/2, n) (-1/b)^n
  for (int n = 0; n <= order; ++n) {
    if (n > 0) coeff *= (half - BigRat(n - 1)) / BigRat(n) * minus_inv_b;
    root.emplace_back(BigRat{}, coeff, b);
  }
  root[0] += QuadExt::rational(p.a(), b);
  return ExactSeries(std::move(root), b.to_double()).reciprocal();
}

FloatSeries cq2_series_float(const Params& p, int order) {
  require_order(order);
  const double b = p.b();
  std::vector<double> root;
  root.reserve(static_cast<std::size_t>(order) + 1);
  double coeff = std::sqrt(b);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) coeff *= (0.5 - (n - 1)) / n * (-1.0 / b);
    root.push_back(coeff);
  }
  root[0] += p.a();
  return FloatSeries(std::move(root), b).reciprocal();
}

double gen_func_eval(const Params& p, double x) {
  if (!(x <= p.b())) {
    throw DomainError("G_{a,b}(x) needs x <= b; got x = " + std::to_string(x) +
                      ", b = " + std::to_string(p.b()));
  }
  return 1.0 / (p.a() + std::sqrt(p.b() - x));
}

QuadExt cq2_limit_a0(const BigRat& b, int n) {
  require_order(n);
  if (b.sign() <= 0) throw DomainError("b must be positive, got " + b.to_string());
  BigRat coeff = falling_factorial(BigRat(BigInt(-1), BigInt(2)), n) / BigRat(factorial(n));
  if (n % 2 == 1) coeff = -coeff;
  // b^{-(2n+1)/2} = sqrt(b) / b^{n+1}
  return {BigRat{}, coeff / pow(b, n + 1), b};
}

GabcReduction gabc_reduce(double a, double b, double c) {
  require_positive(c, "c");
  const double root_c = std::sqrt(c);
  return {Params(a / root_c, b / c), 1.0 / root_c};
}

}  // namespace catqi
