#pragma once

namespace catqi {

/// Strictly positive, finite double. Construction throws DomainError otherwise.
class PosReal {
 public:
  explicit PosReal(double v);
  double value() const { return v_; }
  operator double() const { return v_; }  // NOLINT(google-explicit-constructor)

 private:
  double v_;
};

/// ln Gamma(x) for x > 0.
///
/// Arguments below 15 are shifted up with Gamma(x+1) = x Gamma(x); the shifted
/// value goes through the Stirling series truncated after the B_16 term, whose
/// remainder is below 1e-22 there.
double log_gamma(PosReal x);

/// B(z, w) = exp(ln Gamma(z) + ln Gamma(w) - ln Gamma(z + w)); symmetric bit for bit.
double beta(PosReal z, PosReal w);

/// ln B(z, w), for callers that stay in log space.
double log_beta(PosReal z, PosReal w);

}  // namespace catqi
