#include "catqi/bigrat.hpp"

#include <cctype>

#include "catqi/errors.hpp"

namespace catqi {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw UsageError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw UsageError("malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

}  // namespace

BigRat::BigRat(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw UsageError("malformed rational '" + std::string(text) + "'");
  }
  return BigRat(num, parse_integer(den_text, text));
}

std::string BigRat::to_string() const { return v_.get_str(10); }

std::string BigRat::to_fraction_string() const {
  return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::optional<BigRat> BigRat::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  auto n = exact_isqrt(v_.get_num());
  if (!n) return std::nullopt;
  auto d = exact_isqrt(v_.get_den());
  if (!d) return std::nullopt;
  return BigRat(*n, *d);
}

std::optional<BigInt> exact_isqrt(const BigInt& v) {
  if (v < 0) return std::nullopt;
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

BigRat pow(const BigRat& x, std::int64_t e) {
  if (e < 0) {
    if (x.is_zero()) throw DomainError("negative power of zero");
    return BigRat(1) / pow(x, -e);
  }
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return BigRat(num, den);
}

}  // namespace catqi
