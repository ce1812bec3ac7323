#include "catqi/catalan.hpp"

#include <cmath>
#include <string>

#include "catqi/errors.hpp"
#include "catqi/factorials.hpp"

namespace catqi {

namespace {

void require_index(int n) {
  if (n < 0) throw DomainError("Catalan index must be nonnegative, got " + std::to_string(n));
}

void require_abscissa(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("Catalan-Qi argument must be a finite x >= 0, got " + std::to_string(x));
  }
}

void require_ordered(const CQ1Params& p) {
  if (!(p.b.value() > p.a.value())) {
    throw DomainError("integral representation needs b > a > 0");
  }
}

}  // namespace

BigInt catalan_exact(int n) {
  require_index(n);
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), 2UL * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  c /= n + 1;
  return c;
}

BigInt catalan_corollary(int n) {
  require_index(n);
  BigRat sum;
  BigInt pow2 = 1;
  for (int l = 0; l <= n; ++l) {
    const BigRat b = binomial(n + l - 1, 2 * l);
    if (!b.is_zero()) {
      sum += b * BigRat(pow2) * BigRat(factorial(n - l)) * double_factorial(2 * l - 1);
    }
    pow2 <<= 1;
  }
  sum /= BigRat(factorial(n));
  if (!sum.is_integer()) throw DomainError("Catalan sum is not an integer at n = " + std::to_string(n));
  return sum.num();
}

std::vector<CatalanValue> catalan_table(int n_max) {
  require_index(n_max);
  std::vector<CatalanValue> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  BigInt c = 1;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back({n, c});
    // C_{n+1} = 2(2n+1)/(n+2) C_n
    c *= 2 * (2 * n + 1);
    c /= n + 2;
  }
  return out;
}

double cq1_eval(const CQ1Params& p, double x) {
  require_abscissa(x);
  const double a = p.a.value();
  const double b = p.b.value();
  if (a == b) return 1.0;
  const double log_value = log_gamma(p.b) - log_gamma(p.a) + x * std::log(b / a) +
                           log_gamma(PosReal(x + a)) - log_gamma(PosReal(x + b));
  return std::exp(log_value);
}

QuadResult cq1_integral_finite(const CQ1Params& p, double x, QuadOptions opts) {
  require_abscissa(x);
  require_ordered(p);
  const double a = p.a.value();
  const double b = p.b.value();
  const double upper = b / a;
  const double log_norm = (b - 1.0) * std::log(a / b) - log_beta(p.a, PosReal(b - a));
  const double lo_power = x + a - 1.0;
  const double hi_power = b - a - 1.0;
  const auto integrand = [=](double from_lo, double from_hi) {
    return std::exp(log_norm + hi_power * std::log(from_hi) + lo_power * std::log(from_lo));
  };
  return integrate_tanh_sinh(integrand, 0.0, upper, opts);
}

QuadResult cq1_integral_infinite(const CQ1Params& p, double x, QuadOptions opts) {
  require_abscissa(x);
  require_ordered(p);
  const double a = p.a.value();
  const double b = p.b.value();
  const double shift = a / b;
  const double log_norm = a * std::log(a / b) - log_beta(p.a, PosReal(b - a));
  const double power = b - a - 1.0;
  const double decay = x + b;
  const double norm = std::exp(log_norm);
  Integrand f(
      [=](double t) {
        return std::exp(log_norm + power * std::log(t) - decay * std::log(t + shift));
      },
      power, x + a + 1.0,
      // (t + a/b)^{-(x+b)} <= t^{-(x+b)}, so the tail is below norm * T^{-(x+a)} / (x+a).
      [=](double t) { return norm * std::pow(t, -(x + a)) / (x + a); });
  return integrate_semi_infinite(f, opts);
}

}  // namespace catqi
