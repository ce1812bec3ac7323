#include "catqi/bell.hpp"

#include <string>

#include "catqi/errors.hpp"
#include "catqi/factorials.hpp"

namespace catqi {

namespace {

void check_indices(std::span<const BigRat> x, int n, int k) {
  if (k < 0 || n < 0) throw DomainError("Bell polynomial with negative index");
  if (k > n) {
    throw DomainError("Bell polynomial B_{" + std::to_string(n) + "," + std::to_string(k) +
                      "} needs k <= n");
  }
  if (n >= 1 && k >= 1 && x.size() < static_cast<std::size_t>(n - k + 1)) {
    throw UsageError("Bell polynomial B_{" + std::to_string(n) + "," + std::to_string(k) +
                     "} needs " + std::to_string(n - k + 1) + " arguments, got " +
                     std::to_string(x.size()));
  }
}

struct PartitionWalk {
  std::span<const BigRat> x;
  std::vector<BigRat> scaled;  // x_i / i!
  std::vector<BigInt> fact;    // 0! .. n!
  BigRat total;

  // Chooses l_i for i = part, part-1, ..., 1 with `left` still to cover and
  // `count` parts remaining; `acc` carries prod (x_i/i!)^{l_i} / prod l_i!.
  void walk(int part, int left, int count, const BigRat& acc) {
    if (part == 0) {
      if (left == 0 && count == 0) total += acc;
      return;
    }
    if (left > part * count) return;  // even all-largest parts can't reach n
    BigRat term = acc;
    for (int l = 0; l * part <= left && l <= count; ++l) {
      if (l > 0) term *= scaled[part - 1] / BigRat(static_cast<long>(l));
      walk(part - 1, left - l * part, count - l, term);
    }
  }
};

}  // namespace

BigRat bell_partitions(std::span<const BigRat> x, int n, int k) {
  check_indices(x, n, k);
  if (n > kBellPartitionMaxN) {
    throw UsageError("partition enumeration is capped at n <= " + std::to_string(kBellPartitionMaxN));
  }
  if (n == 0) return BigRat(1);
  if (k == 0) return BigRat{};
  const int parts = n - k + 1;
  PartitionWalk w{x, {}, {}, BigRat{}};
  w.scaled.reserve(parts);
  for (int i = 1; i <= parts; ++i) w.scaled.push_back(x[i - 1] / BigRat(factorial(i)));
  w.walk(parts, n, k, BigRat(1));
  return w.total * BigRat(factorial(n));
}

BigRat bell_recurrence(std::span<const BigRat> x, int n, int k) {
  check_indices(x, n, k);
  // table[m][j] = B_{m,j}; only j <= k and m - j <= n - k are ever needed.
  std::vector<std::vector<BigRat>> table(n + 1, std::vector<BigRat>(k + 1));
  table[0][0] = BigRat(1);
  for (int j = 1; j <= k; ++j) {
    for (int m = j; m <= n; ++m) {
      BigRat s;
      for (int i = 1; i <= m - j + 1; ++i) {
        const BigRat& prev = table[m - i][j - 1];
        if (prev.is_zero()) continue;
        s += binomial(m - 1, i - 1) * x[i - 1] * prev;
      }
      table[m][j] = std::move(s);
    }
  }
  return table[n][k];
}

BigRat bell_half_closed(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    throw DomainError("Bell polynomial B_{" + std::to_string(n) + "," + std::to_string(k) +
                      "} needs 0 <= k <= n");
  }
  BigRat r = double_factorial(2 * (n - k) - 1) * pow(BigRat(BigInt(1), BigInt(2)), n) *
             binomial(2 * n - k - 1, 2 * (n - k));
  return (n + k) % 2 == 0 ? r : -r;
}

std::vector<BigRat> half_falling_args(int count) {
  std::vector<BigRat> out;
  out.reserve(count > 0 ? count : 0);
  const BigRat half(BigInt(1), BigInt(2));
  BigRat running(1);
  for (int i = 1; i <= count; ++i) {
    running *= half - BigRat(static_cast<long>(i - 1));
    out.push_back(running);
  }
  return out;
}

}  // namespace catqi
