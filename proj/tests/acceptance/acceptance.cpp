// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "catqi/bell.hpp"
#include "catqi/catalan.hpp"
#include "catqi/factorials.hpp"
#include "catqi/identities.hpp"
#include "catqi/integral_reps.hpp"
#include "catqi/second_kind.hpp"

using namespace catqi;

namespace {

BigRat rat(long p, long q = 1) { return BigRat(BigInt(p), BigInt(q)); }

double rel_dev(double got, double want) {
  if (got == want) return 0.0;
  return std::fabs(got - want) / std::fabs(want);
}

struct Check {
  bool ok = true;
  std::ostringstream note;  // first failure, or a summary

  void fail(const std::string& what) {
    if (ok) note << what;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit;  // seconds; 0 = none
  std::function<void(Check&)> body;
};

const std::vector<BigRat> kGrid5 = {rat(1, 4), rat(1, 2), rat(1), rat(2), rat(9, 4)};

void corollary_matches_exact(Check& c) {
  for (int n = 0; n <= 500; ++n) {
    if (catalan_corollary(n) != catalan_exact(n)) return c.fail("mismatch at n=" + std::to_string(n));
  }
  c.note << "n <= 500 exact";
}

void three_routes_agree(Check& c) {
  double worst = 0.0;
  for (const auto& a : kGrid5) {
    for (const auto& b : kGrid5) {
      const RationalParams p(a, b);
      const ExactSeries s = cq2_series(p, 60);
      for (int n = 0; n <= 60; ++n) {
        const QuadExt e = cq2_explicit(p, n);
        if (!(e == s[n])) {
          return c.fail("explicit != series at a=" + a.to_string() + " b=" + b.to_string() +
                        " n=" + std::to_string(n));
        }
        if (n > 20) continue;
        QuadOptions q;
        q.tol = 1e-11;
        const QuadResult r = cq2_integral(Params(p), n, q);
        const double d = rel_dev(r.value, e.to_double());
        worst = std::max(worst, d);
        if (!r.converged || d > 1e-8) {
          return c.fail("integral off by " + std::to_string(d) + " at a=" + a.to_string() +
                        " b=" + b.to_string() + " n=" + std::to_string(n));
        }
      }
    }
  }
  c.note << "25 pairs, max integral rel dev " << worst;
}

void reductions_hold(Check& c) {
  const RationalParams half_quarter(rat(1, 2), rat(1, 4));
  for (int n = 0; n <= 200; ++n) {
    if (!(cq2_explicit(half_quarter, n) == QuadExt::rational(BigRat(catalan_exact(n)), rat(1, 4)))) {
      return c.fail("second-kind mismatch at n=" + std::to_string(n));
    }
  }
  double worst = 0.0;
  for (int n = 0; n <= 100; ++n) {
    const double want = BigRat(catalan_exact(n)).to_double();
    const double d = rel_dev(cq1_eval({PosReal(0.5), PosReal(2.0)}, n), want);
    worst = std::max(worst, d);
    if (d > 1e-10) return c.fail("gamma-ratio off by " + std::to_string(d) + " at n=" + std::to_string(n));
  }
  c.note << "exact n <= 200; gamma-ratio max rel dev " << worst;
}

void generating_function_integral(Check& c) {
  double worst = 0.0;
  for (double a : {0.25, 1.0, 4.0}) {
    for (double b : {0.25, 1.0, 4.0}) {
      for (double x : {-10.0, 0.0, b / 2, b}) {
        const QuadResult r = gen_func_integral(Params(a, b), x);
        const double want = 1.0 / (a + std::sqrt(b - x));
        const double d = rel_dev(r.value, want);
        worst = std::max(worst, d);
        if (!r.converged || d > 1e-8) {
          std::ostringstream w;
          w << "a=" << a << " b=" << b << " x=" << x << " dev=" << d << " converged=" << r.converged;
          return c.fail(w.str());
        }
      }
    }
  }
  c.note << "36 points incl. x = b, max rel dev " << worst;
}

void integral_identity(Check& c) {
  double worst = 0.0;
  const double grid[] = {0.25, 0.5, 1.0, 2.0, 4.0};
  for (double a : grid) {
    for (double b : grid) {
      const IdentityReport r = verify_integral_identity(a, b, 20, 1e-8);
      worst = std::max(worst, r.max_float_deviation);
      if (!r.passed()) {
        std::ostringstream w;
        w << "a=" << a << " b=" << b << " n=" << r.failures.front().n << " got " << r.failures.front().got;
        return c.fail(w.str());
      }
    }
  }
  c.note << "25 pairs, n <= 20, max rel dev " << worst;
}

void central_binomial(Check& c) {
  const long printed[] = {1, 2, 6, 20, 70, 252};
  double worst = 0.0;
  for (int n = 0; n <= 15; ++n) {
    const BigRat exact = binomial(2 * n, n);
    const QuadResult r = central_binomial_integral(n);
    const double d = rel_dev(r.value, exact.to_double());
    worst = std::max(worst, d);
    if (!r.converged || d > 1e-9) return c.fail("n=" + std::to_string(n) + " dev " + std::to_string(d));
    if (n <= 5 && (exact != rat(printed[n]) || std::lround(r.value) != printed[n])) {
      return c.fail("printed value differs at n=" + std::to_string(n));
    }
  }
  c.note << "n <= 15, max rel dev " << worst << "; 1 2 6 20 70 252 reproduced";
}

void exact_suites(Check& c) {
  const IdentityReport reports[] = {verify_double_factorial_sum(200), verify_central_binomial_sum(200),
                                    verify_lemma3_sums(200)};
  for (const auto& r : reports) {
    if (!r.exact) return c.fail(r.suite + " not exact");
    if (!r.passed()) return c.fail(r.suite + ": " + std::to_string(r.failures.size()) + " failures");
  }
  c.note << "3 suites, n <= 200, zero failures";
}

// Derivatives in b: the sign of (-1)^m D^m for m <= 3, and D^m against a
// central difference of D^{m-1} (for m = 1 that is the function itself).
void sign_pattern(Check& c) {
  constexpr double h = 1e-4;
  QuadOptions q;
  q.tol = 1e-13;
  double worst = 0.0;
  for (double a : {0.5, 1.0, 2.0}) {
    for (double b : {0.5, 1.0, 2.0}) {
      for (double z : {0.0, 0.5, 2.0}) {
        for (int m = 0; m <= 3; ++m) {
          const QuadResult d = cq2_function_db(Params(a, b), z, m, q);
          std::ostringstream at;
          at << "a=" << a << " b=" << b << " z=" << z << " m=" << m;
          if (!d.converged) return c.fail("no convergence at " + at.str());
          if (!((m % 2 ? -d.value : d.value) > 0.0)) return c.fail("wrong sign at " + at.str());
          if (m == 0) continue;
          const double up = cq2_function_db(Params(a, b + h), z, m - 1, q).value;
          const double dn = cq2_function_db(Params(a, b - h), z, m - 1, q).value;
          const double dev = rel_dev((up - dn) / (2 * h), d.value);
          worst = std::max(worst, dev);
          if (dev > 1e-4) {
            at << " fd dev " << dev;
            return c.fail(at.str());
          }
        }
      }
    }
  }
  c.note << "27 points, m <= 3, max fd rel dev " << worst;
}

void limit_rate(Check& c) {
  double lo = INFINITY;
  double hi = 0.0;
  for (const BigRat& b : {rat(1, 4), rat(1)}) {
    for (int n = 0; n <= 10; ++n) {
      const QuadExt limit = cq2_limit_a0(b, n);
      const double d2 = std::fabs((cq2_explicit(RationalParams(rat(1, 100), b), n) - limit).to_double());
      const double d3 = std::fabs((cq2_explicit(RationalParams(rat(1, 1000), b), n) - limit).to_double());
      const double ratio = d2 / d3;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      if (!(ratio >= 8.0 && ratio <= 12.0)) {
        return c.fail("ratio " + std::to_string(ratio) + " at b=" + b.to_string() + " n=" + std::to_string(n));
      }
    }
  }
  c.note << "ratios in [" << lo << ", " << hi << "]";
}

void bell_routes(Check& c) {
  const std::vector<BigRat> x = {rat(1), rat(-2, 3), rat(5), rat(1, 7), rat(-3), rat(2, 5),
                                 rat(4), rat(-1, 2), rat(9), rat(1, 3), rat(-7), rat(11, 2)};
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (bell_partitions(x, n, k) != bell_recurrence(x, n, k)) {
        return c.fail("partition/recurrence at n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  const auto half = half_falling_args(30);
  for (int n = 0; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (bell_half_closed(n, k) != bell_recurrence(half, n, k)) {
        return c.fail("closed/recurrence at n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  c.note << "oracle n <= 12, closed form n <= 30";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "catalan corollary equals binomial formula", 5.0, corollary_matches_exact},
      {2, "second-kind explicit / series / integral agree", 30.0, three_routes_agree},
      {3, "catalan reductions of both functions", 0.0, reductions_hold},
      {4, "generating-function integral incl. endpoint", 0.0, generating_function_integral},
      {5, "integral identity against explicit sum", 0.0, integral_identity},
      {6, "central binomial integral", 0.0, central_binomial},
      {7, "exact identity suites", 10.0, exact_suites},
      {8, "sign pattern and finite differences in b", 0.0, sign_pattern},
      {9, "a -> 0 limit convergence rate", 0.0, limit_rate},
      {10, "bell polynomial routes", 0.0, bell_routes},
  };

  int failed = 0;
  double total = 0.0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += secs;
    if (c.ok && cr.time_limit > 0 && secs >= cr.time_limit) {
      c.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(cr.time_limit) + " s");
    }
    if (!c.ok) ++failed;
    std::printf("[%s] %2d %-48s %7.2fs  %s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.name.c_str(), secs,
                c.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed, %.2fs total\n", criteria.size(), failed, total);
  return failed == 0 ? 0 : 1;
}
