#include "catqi/quadext.hpp"

#include <cmath>
#include <string>

#include "catqi/errors.hpp"

namespace catqi {

QuadExt::QuadExt(BigRat p, BigRat q, BigRat disc)
    : p_(std::move(p)), q_(std::move(q)), disc_(std::move(disc)) {
  if (disc_.sign() < 0) throw DomainError("negative radicand " + disc_.to_string());
  canonicalize();
}

void QuadExt::canonicalize() {
  if (auto r = disc_.exact_sqrt()) {
    square_disc_ = true;
    if (!q_.is_zero()) {
      p_ += q_ * *r;
      q_ = BigRat{};
    }
  }
}

void QuadExt::require_same_disc(const QuadExt& o) const {
  if (disc_ != o.disc_) {
    throw UsageError("radicand mismatch: sqrt(" + disc_.to_string() + ") vs sqrt(" +
                     o.disc_.to_string() + ")");
  }
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  require_same_disc(o);
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  require_same_disc(o);
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  require_same_disc(o);
  // (p + q r)(s + t r) = (ps + qt d) + (pt + qs) r
  BigRat np = p_ * o.p_ + q_ * o.q_ * disc_;
  BigRat nq = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(np);
  q_ = std::move(nq);
  return *this;
}

QuadExt& QuadExt::operator*=(const BigRat& s) {
  p_ *= s;
  q_ *= s;
  return *this;
}

QuadExt QuadExt::inv() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(sqrt(" + disc_.to_string() + "))");
  // Canonical form guarantees q = 0 whenever sqrt(disc) is rational, so the
  // norm below vanishes only for the zero element.
  const BigRat norm = p_ * p_ - q_ * q_ * disc_;
  return {p_ / norm, -q_ / norm, disc_};
}

double QuadExt::to_double() const {
  if (q_.is_zero()) return p_.to_double();
  if (p_.is_zero()) {
    mpf_class s(0, 128);
    mpf_class d(disc_.raw(), 128);
    mpf_sqrt(s.get_mpf_t(), d.get_mpf_t());
    mpf_class v(q_.raw(), 128);
    v *= s;
    return v.get_d();
  }
  for (mp_bitcnt_t prec = 128;; prec *= 2) {
    mpf_class d(disc_.raw(), prec);
    mpf_class s(0, prec);
    mpf_sqrt(s.get_mpf_t(), d.get_mpf_t());
    mpf_class qs(q_.raw(), prec);
    qs *= s;
    mpf_class pp(p_.raw(), prec);
    mpf_class sum(0, prec);
    sum = pp + qs;
    // Accept once at least 64 significant bits survive the cancellation.
    long e_sum = 0;
    long e_big = 0;
    mpf_get_d_2exp(&e_sum, sum.get_mpf_t());
    mpf_class big(abs(pp) > abs(qs) ? pp : qs, prec);
    mpf_get_d_2exp(&e_big, big.get_mpf_t());
    if (sgn(sum) != 0 && e_big - e_sum + 64 < static_cast<long>(prec)) return sum.get_d();
    if (prec > (1u << 20)) return sum.get_d();
  }
}

std::string QuadExt::to_string() const {
  return p_.to_fraction_string() + " + " + q_.to_fraction_string() + "*sqrt(" +
         disc_.to_fraction_string() + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

QuadExt QuadExt::parse(std::string_view text) {
  const auto bad = [&] { return UsageError("malformed quadratic-extension value '" + std::string(text) + "'"); };
  const auto plus = text.find(" + ");
  const auto star = text.find("*sqrt(");
  if (plus == std::string_view::npos || star == std::string_view::npos || star < plus ||
      text.back() != ')') {
    throw bad();
  }
  const auto p = trim(text.substr(0, plus));
  const auto q = trim(text.substr(plus + 3, star - plus - 3));
  const auto disc = text.substr(star + 6, text.size() - star - 7);
  if (p.empty() || q.empty() || disc.empty()) throw bad();
  return {BigRat::parse(p), BigRat::parse(q), BigRat::parse(disc)};
}

}  // namespace catqi
