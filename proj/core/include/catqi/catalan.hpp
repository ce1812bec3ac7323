#pragma once

#include <vector>

#include "catqi/bigrat.hpp"
#include "catqi/gamma_beta.hpp"
#include "catqi/quadrature.hpp"

namespace catqi {

struct CatalanValue {
  int n = 0;
  BigInt value;
};

/// C_n = binom(2n, n) / (n + 1).
BigInt catalan_exact(int n);

/// C_n = (1/n!) sum_{l=0}^{n} binom(n+l-1, 2l) 2^l (n-l)! (2l-1)!!, evaluated exactly.
BigInt catalan_corollary(int n);

/// C_0 .. C_{n_max} through the binomial formula.
std::vector<CatalanValue> catalan_table(int n_max);

/// Parameters (a, b) of the first-kind Catalan-Qi function. The integral
/// representations additionally need b > a; they check that themselves.
struct CQ1Params {
  PosReal a;
  PosReal b;
};

/// C(a, b; x) = Gamma(b)/Gamma(a) (b/a)^x Gamma(x+a)/Gamma(x+b), evaluated in log space.
double cq1_eval(const CQ1Params& p, double x);

/// (a/b)^{b-1} / B(a, b-a) * int_0^{b/a} (b/a - t)^{b-a-1} t^{x+a-1} dt by tanh-sinh.
QuadResult cq1_integral_finite(const CQ1Params& p, double x, QuadOptions opts = {});

/// (a/b)^a / B(a, b-a) * int_0^inf t^{b-a-1} / (t + a/b)^{x+b} dt.
QuadResult cq1_integral_infinite(const CQ1Params& p, double x, QuadOptions opts = {});

}  // namespace catqi
