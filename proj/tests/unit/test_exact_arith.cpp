#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "catqi/bigrat.hpp"
#include "catqi/errors.hpp"
#include "catqi/factorials.hpp"
#include "catqi/quadext.hpp"

using namespace catqi;

namespace {

BigRat rat(long p, long q = 1) { return BigRat(BigInt(p), BigInt(q)); }

BigRat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  return rat(num(rng), den(rng));
}

double ulp_distance(double x, double y) {
  if (x == y) return 0.0;
  const double scale = std::fmax(std::fabs(x), std::fabs(y));
  return std::fabs(x - y) / (std::nextafter(scale, INFINITY) - scale);
}

}  // namespace

TEST_CASE("BigRat keeps lowest terms") {
  CHECK(rat(6, 4).num() == 3);
  CHECK(rat(6, 4).den() == 2);
  CHECK(rat(3, -6) == rat(-1, 2));
  CHECK(rat(0, 7).den() == 1);
  CHECK(BigRat::parse("-10/4") == rat(-5, 2));
  CHECK(BigRat::parse("42").to_string() == "42");
  CHECK(rat(42).to_fraction_string() == "42/1");
  CHECK_THROWS_AS(BigRat::parse("0.5"), UsageError);
  CHECK_THROWS_AS(BigRat::parse("1/"), UsageError);
  CHECK_THROWS_AS(BigRat::parse("1/-2"), UsageError);
  CHECK_THROWS_AS(BigRat::parse("1/0"), DomainError);
  CHECK_THROWS_AS(rat(1) / BigRat{}, DomainError);
  CHECK(rat(9, 4).exact_sqrt() == rat(3, 2));
  CHECK_FALSE(rat(2).exact_sqrt().has_value());
  CHECK(pow(rat(2, 3), -2) == rat(9, 4));
}

TEST_CASE("binomial examples and errors") {
  CHECK(binomial(6, 3) == rat(20));
  CHECK(binomial(-1, 0) == rat(1));
  CHECK(binomial(1, 2) == rat(0));
  CHECK(binomial(-3, 2) == rat(6));  // (-3)(-4)/2
  CHECK_THROWS_AS(binomial(5, -1), DomainError);
}

TEST_CASE("binomial matches the Pascal triangle for m <= 60") {
  std::vector<std::vector<BigInt>> pascal{{1}};
  for (int m = 1; m <= 60; ++m) {
    std::vector<BigInt> row(m + 1);
    row[0] = row[m] = 1;
    for (int k = 1; k < m; ++k) row[k] = pascal[m - 1][k - 1] + pascal[m - 1][k];
    pascal.push_back(row);
  }
  for (int m = 0; m <= 60; ++m) {
    for (int k = 0; k <= m; ++k) REQUIRE(binomial(m, k) == BigRat(pascal[m][k]));
  }
}

TEST_CASE("double factorial including negative odd arguments") {
  CHECK(double_factorial(-1) == rat(1));
  CHECK(double_factorial(5) == rat(15));
  CHECK(double_factorial(-3) == rat(-1));
  CHECK(double_factorial(-5) == rat(1, 3));
  CHECK(double_factorial(0) == rat(1));
  CHECK(double_factorial(8) == rat(384));
  CHECK_THROWS_AS(double_factorial(-2), DomainError);

  CHECK(factorial(FactorialKind::kOddDouble, 0) == rat(1));
  CHECK(factorial(FactorialKind::kOddDouble, -1) == rat(-1));
  CHECK(factorial(FactorialKind::kEvenDouble, 3) == rat(48));
  CHECK(factorial(FactorialKind::kPlain, 5) == rat(120));

  for (int l = 0; l <= 100; ++l) {
    const BigRat even = double_factorial(2 * l);
    CAPTURE(l);
    if (l > 0) REQUIRE(even * double_factorial(2 * l - 1) == BigRat(factorial(2 * l)));
    const BigRat sign = l % 2 == 0 ? rat(1) : rat(-1);
    REQUIRE(double_factorial(-2 * l - 1) == sign * even / BigRat(factorial(2 * l)));
  }
}

TEST_CASE("falling and rising factorials") {
  CHECK(falling_factorial(rat(1, 2), 2) == rat(-1, 4));
  CHECK(falling_factorial(rat(7, 3), 0) == rat(1));
  CHECK(falling_factorial(rat(-1, 2), 1) == rat(-1, 2));
  CHECK(rising_factorial(rat(5, 7), 0) == rat(1));
  CHECK(rising_factorial(rat(3), 2) == rat(12));
  CHECK(rising_factorial(rat(1), 4) == rat(24));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const BigRat alpha = random_rat(rng);
    const int n = static_cast<int>(rng() % 51);
    CAPTURE(alpha.to_string());
    CAPTURE(n);
    REQUIRE(falling_factorial(alpha, n) * (alpha - rat(n)) == falling_factorial(alpha, n + 1));
    const BigRat sign = n % 2 == 0 ? rat(1) : rat(-1);
    REQUIRE(rising_factorial(alpha, n) == sign * falling_factorial(-alpha, n));
  }
}

TEST_CASE("quadratic extension examples") {
  const QuadExt root2 = QuadExt::root(rat(2));
  CHECK(root2 * root2 == QuadExt(rat(2), rat(0), rat(2)));
  CHECK(QuadExt(rat(1), rat(1), rat(2)).inv() == QuadExt(rat(-1), rat(1), rat(2)));

  const QuadExt folded(rat(0), rat(1), rat(4));
  CHECK(folded.p() == rat(2));
  CHECK(folded.q() == rat(0));
  CHECK(folded.disc() == rat(4));

  CHECK_THROWS_AS(QuadExt::rational(rat(0), rat(3)).inv(), DomainError);
  CHECK_THROWS_AS(root2 + QuadExt::root(rat(3)), UsageError);
  CHECK_THROWS_AS(QuadExt(rat(1), rat(1), rat(-2)), DomainError);
}

TEST_CASE("quadratic extension text form") {
  const QuadExt x(rat(-3, 4), rat(5, 6), rat(7, 2));
  CHECK(x.to_string() == "-3/4 + 5/6*sqrt(7/2)");
  CHECK(QuadExt::parse(x.to_string()) == x);
  CHECK(QuadExt::parse("42 + 0*sqrt(1/4)") == QuadExt::rational(rat(42), rat(1, 4)));
  CHECK(QuadExt::rational(rat(42), rat(1, 4)).to_string() == "42/1 + 0/1*sqrt(1/4)");
  CHECK_THROWS_AS(QuadExt::parse("1 + 2"), UsageError);
}

TEST_CASE("quadratic extension field laws on random elements") {
  std::mt19937_64 rng(11);
  const std::vector<BigRat> discs = {rat(2), rat(1, 2), rat(9, 4), rat(5, 3)};
  for (int trial = 0; trial < 200; ++trial) {
    const BigRat& d = discs[trial % discs.size()];
    const QuadExt x(random_rat(rng), random_rat(rng), d);
    const QuadExt y(random_rat(rng), random_rat(rng), d);
    CAPTURE(x.to_string());
    CAPTURE(y.to_string());
    if (!x.is_zero()) REQUIRE(x * x.inv() == QuadExt::rational(rat(1), d));
    const double fx = x.to_double();
    const double fy = y.to_double();
    // Sums are compared on the operands' ulp scale since fx + fy itself may cancel.
    const double operand_ulp = ulp_distance(std::fmax(std::fabs(fx), std::fabs(fy)), 0.0) > 0
                                   ? std::fmax(std::fabs(fx), std::fabs(fy)) *
                                         std::numeric_limits<double>::epsilon()
                                   : 0.0;
    REQUIRE(std::fabs((x + y).to_double() - (fx + fy)) <= 4.0 * operand_ulp);
    REQUIRE(ulp_distance((x * y).to_double(), fx * fy) <= 4.0);
  }
}

TEST_CASE("to_double resolves cancellation") {
  // (1 + sqrt 2)^{-20} = (sqrt 2 - 1)^{20} is tiny but p and q*sqrt 2 are huge.
  QuadExt x = QuadExt(rat(-1), rat(1), rat(2));
  QuadExt acc = QuadExt::rational(rat(1), rat(2));
  for (int i = 0; i < 20; ++i) acc *= x;
  const double expected = std::pow(std::sqrt(2.0) - 1.0, 20);
  CHECK(acc.to_double() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::fabs(acc.p().to_double()) > 1e7);
}
