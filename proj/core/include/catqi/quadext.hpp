#pragma once

#include <string>
#include <string_view>

#include "catqi/bigrat.hpp"

namespace catqi {

/// Exact element p + q*sqrt(disc) of Q(sqrt(disc)), disc >= 0 rational.
///
/// Canonical form: when disc is the square of a rational r, the irrational
/// part is folded (p += q*r, q = 0) while disc itself is kept so that values
/// built over the same radicand stay combinable. Binary operations require
/// equal radicands and throw UsageError otherwise.
class QuadExt {
 public:
  QuadExt(BigRat p, BigRat q, BigRat disc);

  static QuadExt rational(BigRat p, BigRat disc) { return {std::move(p), BigRat{}, std::move(disc)}; }
  /// sqrt(disc) itself.
  static QuadExt root(BigRat disc) { return {BigRat{}, BigRat{1}, std::move(disc)}; }

  /// Parses the text form produced by to_string(); bare integers are allowed
  /// for each component ("42 + 0*sqrt(1/4)").
  static QuadExt parse(std::string_view text);

  const BigRat& p() const { return p_; }
  const BigRat& q() const { return q_; }
  const BigRat& disc() const { return disc_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  bool is_rational() const { return q_.is_zero(); }

  /// Within one ulp of the exact value; precision is raised until the
  /// cancellation between p and q*sqrt(disc) is resolved.
  double to_double() const;

  /// "p/q + r/s*sqrt(u/v)" with every component in lowest terms.
  std::string to_string() const;

  QuadExt inv() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator*=(const BigRat& s);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inv(); }

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator*(QuadExt a, const BigRat& s) { return a *= s; }
  friend QuadExt operator*(const BigRat& s, QuadExt a) { return a *= s; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  QuadExt operator-() const { return {-p_, -q_, disc_}; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) = default;

 private:
  void require_same_disc(const QuadExt& o) const;
  void canonicalize();

  BigRat p_;
  BigRat q_;
  BigRat disc_;
  bool square_disc_ = false;
};

inline QuadExt inverse(const QuadExt& x) { return x.inv(); }

}  // namespace catqi
