#include "catqi/gamma_beta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "catqi/errors.hpp"

namespace catqi {

PosReal::PosReal(double v) : v_(v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError("expected a positive finite real, got " + std::to_string(v));
  }
}

namespace {

constexpr double kShiftThreshold = 15.0;

// B_{2k} / (2k (2k-1)) for k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,     1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};

double stirling(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) series = series * inv2 + *it;
  series *= inv;
  constexpr double half_log_2pi = 0.91893853320467274178032973640562;
  return (x - 0.5) * std::log(x) - x + half_log_2pi + series;
}

}  // namespace

double log_gamma(PosReal x) {
  double v = x.value();
  if (v >= kShiftThreshold) return stirling(v);
  double product = 1.0;
  while (v < kShiftThreshold) {
    product *= v;
    v += 1.0;
  }
  return stirling(v) - std::log(product);
}

double log_beta(PosReal z, PosReal w) {
  const double lo = std::fmin(z.value(), w.value());
  const double hi = std::fmax(z.value(), w.value());
  return log_gamma(PosReal(lo)) + log_gamma(PosReal(hi)) - log_gamma(PosReal(lo + hi));
}

double beta(PosReal z, PosReal w) { return std::exp(log_beta(z, w)); }

}  // namespace catqi
