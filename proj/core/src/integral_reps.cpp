#include "catqi/integral_reps.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "catqi/errors.hpp"

namespace catqi {

namespace {

constexpr double kInvPi = std::numbers::inv_pi;

void require_real_exponent(double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw DomainError("exponent z must be finite and >= 0, got " + std::to_string(z));
  }
}

QuadResult scaled(QuadResult r, double factor) {
  r.value *= factor;
  r.abs_error *= std::fabs(factor);
  return r;
}

}  // namespace

QuadResult cq2_kernel_integral(const Params& p, double z, QuadOptions opts) {
  require_real_exponent(z);
  const double a2 = p.a() * p.a();
  const double b = p.b();
  const double power = z + 1.0;
  Integrand f(
      [=](double t) { return std::sqrt(t) / (a2 + t) * std::exp(-power * std::log(b + t)); },
      0.5, z + 1.5,
      // sqrt(t)/(a^2+t) <= t^{-1/2} and (b+t)^{-(z+1)} <= t^{-(z+1)}
      [=](double t) { return std::pow(t, -(z + 0.5)) / (z + 0.5); });
  return integrate_semi_infinite(f, opts);
}

QuadResult gen_func_integral(const Params& p, double x, QuadOptions opts) {
  if (!(x <= p.b()) || !std::isfinite(x)) {
    throw DomainError("integral representation of G_{a,b}(x) needs finite x <= b, got x = " +
                      std::to_string(x));
  }
  const double a2 = p.a() * p.a();
  const double gap = p.b() - x;  // >= 0
  Integrand f([=](double t) { return std::sqrt(t) / ((a2 + t) * (gap + t)); },
              gap > 0.0 ? 0.5 : -0.5, 1.5,
              // gap + t >= t, so the integrand is below t^{-3/2}
              [](double t) { return 2.0 / std::sqrt(t); });
  return scaled(integrate_semi_infinite(f, opts), kInvPi);
}

QuadResult cq2_integral(const Params& p, int n, QuadOptions opts) {
  if (n < 0) throw DomainError("C_n(a, b) needs n >= 0, got " + std::to_string(n));
  return cq2_function(p, static_cast<double>(n), opts);
}

QuadResult cq2_function(const Params& p, double z, QuadOptions opts) {
  return scaled(cq2_kernel_integral(p, z, opts), kInvPi);
}

QuadResult cq2_function_db(const Params& p, double z, int m, QuadOptions opts) {
  require_real_exponent(z);
  if (m < 0) throw DomainError("derivative order must be >= 0, got " + std::to_string(m));
  double rising = 1.0;  // (z+1)_m
  for (int l = 0; l < m; ++l) rising *= z + 1.0 + l;
  const double sign = m % 2 == 0 ? 1.0 : -1.0;
  return scaled(cq2_kernel_integral(p, z + m, opts), sign * rising * kInvPi);
}

QuadResult central_binomial_integral(int n, QuadOptions opts) {
  if (n < 0) throw DomainError("central binomial needs n >= 0, got " + std::to_string(n));
  const double power = n + 1.0;
  Integrand f([=](double t) { return std::exp(-power * std::log1p(t * t)); }, 0.0, 2.0 * power,
              [=](double t) { return std::pow(t, -(2.0 * n + 1.0)) / (2.0 * n + 1.0); });
  return scaled(integrate_semi_infinite(f, opts), std::ldexp(kInvPi, 2 * n + 1));
}

}  // namespace catqi
