#pragma once

#include <cstdint>

#include "catqi/bigrat.hpp"

namespace catqi {

enum class FactorialKind {
  kPlain,       ///< n!
  kEvenDouble,  ///< (2n)!!
  kOddDouble,   ///< (2n-1)!!, continued to negative odd arguments
};

/// n! for n >= 0.
BigInt factorial(std::int64_t n);

/// Dispatches on kind with the index convention of FactorialKind:
/// kEvenDouble gives (2n)!!, kOddDouble gives (2n-1)!! (so n = 0 -> (-1)!! = 1,
/// negative n reaches the negative odd arguments).
BigRat factorial(FactorialKind kind, std::int64_t n);

/// m!! for even m >= 0, odd m >= 1, and negative odd m = -(2l+1) where
/// (-2l-1)!! = (-1)^l / (2l-1)!!. Negative even m throws DomainError.
BigRat double_factorial(std::int64_t m);

/// <alpha>_n = alpha (alpha-1) ... (alpha-n+1); 1 when n = 0.
BigRat falling_factorial(const BigRat& alpha, std::int64_t n);

/// (z)_n = z (z+1) ... (z+n-1); 1 when n = 0.
BigRat rising_factorial(const BigRat& z, std::int64_t n);

/// <m>_k / k! for any integer m; so binomial(-1, 0) = 1 and binomial(1, 2) = 0.
BigRat binomial(std::int64_t m, std::int64_t k);

/// <alpha>_k / k! for rational alpha, e.g. binom(1/2, k) for the sqrt series.
BigRat binomial_rat(const BigRat& alpha, std::int64_t k);

}  // namespace catqi
