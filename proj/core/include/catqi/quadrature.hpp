#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace catqi {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct QuadOptions {
  double tol = 1e-10;  ///< relative
  std::size_t max_evaluations = 200000;
};

/// Reads CATALANQI_EVAL_BUDGET when set to a positive integer, else the default budget.
std::size_t eval_budget_from_env(std::size_t fallback = QuadOptions{}.max_evaluations);

/// A non-negative-weight integrand on (0, inf) with its algebraic behaviour:
/// f(t) ~ t^exponent_at_zero near 0 and f(t) ~ t^-decay_exponent at infinity.
/// Integrability requires exponent_at_zero > -1 and decay_exponent > 1; the
/// constructor throws DomainError otherwise.
///
/// tail_bound(T), when supplied, must bound the integral of |f| over [T, inf).
class Integrand {
 public:
  Integrand(std::function<double(double)> f, double exponent_at_zero, double decay_exponent,
            std::function<double(double)> tail_bound = {});

  double operator()(double t) const { return f_(t); }
  double exponent_at_zero() const { return exponent_at_zero_; }
  double decay_exponent() const { return decay_exponent_; }
  const std::function<double(double)>& tail_bound() const { return tail_bound_; }

 private:
  std::function<double(double)> f_;
  double exponent_at_zero_;
  double decay_exponent_;
  std::function<double(double)> tail_bound_;
};

/// One 21-point Kronrod panel and its embedded 10-point Gauss estimate.
struct KronrodPanel {
  double kronrod = 0.0;
  double gauss = 0.0;
};
KronrodPanel gauss_kronrod_21(const std::function<double(double)>& f, double lo, double hi);

/// Globally adaptive Gauss-Kronrod on a finite [lo, hi]; always bisects the
/// panel with the largest |K21 - G10|. Converged once the summed panel error is
/// within tol * |value|.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              QuadOptions opts = {});

/// Integral of f over (0, inf).
///
/// Works in s with t = s^2 (dt = 2s ds) so that the sqrt(t) behaviour at the
/// origin becomes analytic. The s-range [0, S] is integrated adaptively; with a
/// tail bound the split T = S^2 is pushed outward until bound(T) fits in the
/// error budget, and whatever tail remains past T = 1e16 (or every tail, when
/// no bound is known) is folded onto (0, 1] by s = S / v.
QuadResult integrate_semi_infinite(const Integrand& f, QuadOptions opts = {});

/// Tanh-sinh (double exponential) quadrature on [lo, hi] for integrands with
/// algebraic endpoint singularities. The integrand receives the distances
/// (t - lo, hi - t), each computed without cancellation near its endpoint.
QuadResult integrate_tanh_sinh(const std::function<double(double, double)>& f, double lo,
                               double hi, QuadOptions opts = {});

}  // namespace catqi
