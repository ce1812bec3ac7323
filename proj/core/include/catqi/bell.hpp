#pragma once

#include <span>
#include <vector>

#include "catqi/bigrat.hpp"

namespace catqi {

/// Largest n accepted by bell_partitions; beyond this the partition count
/// makes the enumeration pointless next to the recurrence.
inline constexpr int kBellPartitionMaxN = 25;

/// B_{n,k}(x_1, ..., x_{n-k+1}) by direct enumeration of the multiplicities
/// l_i with sum i*l_i = n and sum l_i = k, each weighted by
/// n! / prod l_i! * prod (x_i / i!)^{l_i}. Test oracle only; n <= 25.
///
/// x[0] holds x_1. Conventions: B_{0,0} = 1, B_{n,0} = 0 for n >= 1.
BigRat bell_partitions(std::span<const BigRat> x, int n, int k);

/// Same value through B_{n,k} = sum_i binom(n-1, i-1) x_i B_{n-i,k-1},
/// memoized in a per-call table.
BigRat bell_recurrence(std::span<const BigRat> x, int n, int k);

/// Closed form of B_{n,k}(<1/2>_1, ..., <1/2>_{n-k+1}):
/// (-1)^{n+k} [2(n-k)-1]!! (1/2)^n binom(2n-k-1, 2(n-k)).
BigRat bell_half_closed(int n, int k);

/// <1/2>_1, ..., <1/2>_count, the argument vector bell_half_closed stands for.
std::vector<BigRat> half_falling_args(int count);

}  // namespace catqi
