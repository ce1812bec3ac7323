#pragma once

#include <string>
#include <vector>

#include "catqi/bigrat.hpp"

namespace catqi {

struct IdentityFailure {
  long n = 0;
  std::string expected;
  std::string got;
};

/// Outcome of one identity suite. Exact suites compare rationals and leave
/// tol and max_float_deviation at 0; float suites record the relative
/// tolerance they used and the worst relative deviation seen.
struct IdentityReport {
  std::string suite;
  int n_max = 0;
  std::vector<IdentityFailure> failures;
  double max_float_deviation = 0.0;
  double tol = 0.0;
  bool exact = true;

  bool passed() const { return failures.empty(); }
};

/// {suite, n_max, passed, exact, tol, failures: [{n, expected, got}], max_float_deviation}
std::string to_json(const IdentityReport& report);

/// sum_{l=0}^{n} binom(n+l-1, 2l) (n-l)! (2l-1)!! = (2n-1)!! for 0 <= n <= n_max.
IdentityReport verify_double_factorial_sum(int n_max);

/// sum_{l=0}^{n} binom(n+l-1, 2l) (n-l)! (2l-1)!! 2^l = n!/(n+1) binom(2n, n).
IdentityReport verify_central_binomial_sum(int n_max);

/// sum_{l=0}^{n} binom(n+l-1, 2l) (n-l)! (2l-1)!! t^l; the t = 1 and t = 2
/// cases are the two suites above, other t have no known closed form.
BigRat power_sum_query(int n, const BigRat& t);

/// For 1 <= n <= n_max:
///   sum_{k<n} binom(2k,k) / ((k+1) 4^k) = 2 (1 - binom(2n,n)/4^n)
///   sum_{k<n} binom(2k,k) 4^{n-k}/(n-k) = 2 binom(2n,n) sum_{k=1}^{n} 1/(2k-1)
IdentityReport verify_lemma3_sums(int n_max);

/// C_n(1/2, 1/4) = C_n exactly and C(1/2, 2; n) = C_n to relative tol.
IdentityReport verify_reductions(int n_max, double tol);

/// Quadrature of int_0^inf sqrt(t)/(a^2+t) (b+t)^{-(n+1)} dt against
/// pi * (explicit sum) for 0 <= n <= n_max, relative tol. Non-convergent
/// quadrature counts as a failure.
IdentityReport verify_integral_identity(double a, double b, int n_max, double tol);

}  // namespace catqi
