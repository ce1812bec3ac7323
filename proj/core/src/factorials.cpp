#include "catqi/factorials.hpp"

#include <string>

#include "catqi/errors.hpp"

namespace catqi {

namespace {

void require_nonnegative(std::int64_t n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": negative order " + std::to_string(n));
}

BigInt odd_double_factorial_positive(std::int64_t m) {
  BigInt r = 1;
  for (std::int64_t i = 3; i <= m; i += 2) r *= static_cast<long>(i);
  return r;
}

}  // namespace

BigInt factorial(std::int64_t n) {
  require_nonnegative(n, "factorial");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigRat factorial(FactorialKind kind, std::int64_t n) {
  switch (kind) {
    case FactorialKind::kPlain:
      return BigRat(factorial(n));
    case FactorialKind::kEvenDouble:
      require_nonnegative(n, "(2n)!!");
      return double_factorial(2 * n);
    case FactorialKind::kOddDouble:
      return double_factorial(2 * n - 1);
  }
  throw UsageError("unknown factorial kind");
}

BigRat double_factorial(std::int64_t m) {
  if (m >= 0) {
    if (m % 2 == 0) {
      BigInt r;
      // (2k)!! = 2^k k!
      mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m / 2));
      r <<= static_cast<mp_bitcnt_t>(m / 2);
      return BigRat(r);
    }
    return BigRat(odd_double_factorial_positive(m));
  }
  if (-m % 2 == 0) throw DomainError("double factorial of negative even " + std::to_string(m));
  const std::int64_t l = (-m - 1) / 2;  // m = -(2l+1)
  const BigInt d = l == 0 ? BigInt(1) : odd_double_factorial_positive(2 * l - 1);
  return BigRat(l % 2 == 0 ? BigInt(1) : BigInt(-1), d);
}

BigRat falling_factorial(const BigRat& alpha, std::int64_t n) {
  require_nonnegative(n, "falling factorial");
  BigRat r(1);
  for (std::int64_t k = 0; k < n; ++k) r *= alpha - BigRat(static_cast<long>(k));
  return r;
}

BigRat rising_factorial(const BigRat& z, std::int64_t n) {
  require_nonnegative(n, "rising factorial");
  BigRat r(1);
  for (std::int64_t l = 0; l < n; ++l) r *= z + BigRat(static_cast<long>(l));
  return r;
}

BigRat binomial(std::int64_t m, std::int64_t k) {
  require_nonnegative(k, "binomial");
  if (m >= 0) {
    if (k > m) return BigRat{};
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return BigRat(r);
  }
  return binomial_rat(BigRat(static_cast<long>(m)), k);
}

BigRat binomial_rat(const BigRat& alpha, std::int64_t k) {
  require_nonnegative(k, "binomial");
  return falling_factorial(alpha, k) / BigRat(factorial(k));
}

}  // namespace catqi
