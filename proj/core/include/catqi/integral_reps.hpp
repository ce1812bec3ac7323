#pragma once

#include "catqi/quadrature.hpp"
#include "catqi/second_kind.hpp"

namespace catqi {

/// (1/pi) int_0^inf sqrt(t)/(a^2 + t) / (b + t - x) dt, valid for real x <= b
/// (including the endpoint x = b, where it equals 1/a).
QuadResult gen_func_integral(const Params& p, double x, QuadOptions opts = {});

/// C_n(a, b) = (1/pi) int_0^inf sqrt(t)/(a^2 + t) (b + t)^{-(n+1)} dt.
QuadResult cq2_integral(const Params& p, int n, QuadOptions opts = {});

/// The second Catalan-Qi function: the same integral with real exponent z >= 0.
QuadResult cq2_function(const Params& p, double z, QuadOptions opts = {});

/// m-th derivative in b of cq2_function:
/// (-1)^m (z+1)_m / pi * int_0^inf sqrt(t)/(a^2 + t) (b + t)^{-(z+m+1)} dt.
QuadResult cq2_function_db(const Params& p, double z, int m, QuadOptions opts = {});

/// binom(2n, n) = 2^{2n+1}/pi int_0^inf (1 + t^2)^{-(n+1)} dt.
QuadResult central_binomial_integral(int n, QuadOptions opts = {});

/// Plain integral int_0^inf sqrt(t)/(a^2 + t) (b + t)^{-(z+1)} dt without the 1/pi.
QuadResult cq2_kernel_integral(const Params& p, double z, QuadOptions opts = {});

}  // namespace catqi
