#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "catqi/bigrat.hpp"
#include "catqi/errors.hpp"
#include "catqi/quadext.hpp"

namespace catqi {

/// (a, b) with exact rational entries, both > 0.
class RationalParams {
 public:
  RationalParams(BigRat a, BigRat b);
  const BigRat& a() const { return a_; }
  const BigRat& b() const { return b_; }

 private:
  BigRat a_;
  BigRat b_;
};

/// (a, b) as doubles, both positive and finite.
class Params {
 public:
  Params(double a, double b);
  explicit Params(const RationalParams& p) : Params(p.a().to_double(), p.b().to_double()) {}
  double a() const { return a_; }
  double b() const { return b_; }

 private:
  double a_;
  double b_;
};

inline double inverse(double x) { return 1.0 / x; }

/// Coefficients c_0 .. c_N of a power series truncated after x^N.
/// Binary operations demand equal truncation orders.
template <class T>
class TruncatedSeries {
 public:
  TruncatedSeries(std::vector<T> coeffs, double radius_hint)
      : coeffs_(std::move(coeffs)), radius_hint_(radius_hint) {
    if (coeffs_.empty()) throw UsageError("truncated series needs at least c_0");
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const T& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<T>& coeffs() const { return coeffs_; }
  double radius_hint() const { return radius_hint_; }

  friend TruncatedSeries operator+(TruncatedSeries x, const TruncatedSeries& y) {
    x.require_same_order(y);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    x.require_same_order(y);
    std::vector<T> out;
    out.reserve(x.coeffs_.size());
    for (std::size_t n = 0; n < x.coeffs_.size(); ++n) {
      T acc = x.coeffs_[0] * y.coeffs_[n];
      for (std::size_t j = 1; j <= n; ++j) acc += x.coeffs_[j] * y.coeffs_[n - j];
      out.push_back(std::move(acc));
    }
    return {std::move(out), x.radius_hint_};
  }

  /// 1/f via d_0 = 1/e_0, d_n = -d_0 sum_{j=1}^{n} e_j d_{n-j}.
  TruncatedSeries reciprocal() const {
    std::vector<T> d;
    d.reserve(coeffs_.size());
    const T d0 = inverse(coeffs_[0]);
    d.push_back(d0);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
      T acc = coeffs_[1] * d[n - 1];
      for (std::size_t j = 2; j <= n; ++j) acc += coeffs_[j] * d[n - j];
      d.push_back(-(d0 * acc));
    }
    return {std::move(d), radius_hint_};
  }

 private:
  void require_same_order(const TruncatedSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw UsageError("series truncation orders differ");
  }

  std::vector<T> coeffs_;
  double radius_hint_;
};

using ExactSeries = TruncatedSeries<QuadExt>;
using FloatSeries = TruncatedSeries<double>;

/// C_n(a, b) = 1/((2n)!! b^{n+1/2}) sum_{k=0}^{n} binom(2n-k-1, 2(n-k)) k! [2(n-k)-1]!!
///             / (1 + a/sqrt(b))^{k+1},
/// computed exactly in Q(sqrt(b)).
QuadExt cq2_explicit(const RationalParams& p, int n);

/// The same sum in double precision. Terms are generated from the k = n end by
/// their ratios and accumulated with a running binary exponent, so no
/// factorial is ever formed. Throws std::overflow_error when the final value
/// does not fit a double.
double cq2_explicit_float(const Params& p, int n);

/// Taylor coefficients of 1/(a + sqrt(b - x)) up to x^N: sqrt(b - x) from the
/// binomial series sqrt(b) sum binom(1/2, n)(-x/b)^n, plus a, then reciprocal.
ExactSeries cq2_series(const RationalParams& p, int order);
FloatSeries cq2_series_float(const Params& p, int order);

/// G_{a,b}(x) = 1/(a + sqrt(b - x)) for x <= b.
double gen_func_eval(const Params& p, double x);

/// lim_{a -> 0+} C_n(a, b) = ((-1)^n / n!) <-1/2>_n b^{-(2n+1)/2}.
QuadExt cq2_limit_a0(const BigRat& b, int n);

struct GabcReduction {
  Params params;
  double scale;
};

/// G_{a,b,c}(x) = G_{a/sqrt(c), b/c}(x) / sqrt(c).
GabcReduction gabc_reduce(double a, double b, double c);

}  // namespace catqi
