#include "catqi/identities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include <json.hpp>

#include "catqi/catalan.hpp"
#include "catqi/errors.hpp"
#include "catqi/factorials.hpp"
#include "catqi/integral_reps.hpp"
#include "catqi/second_kind.hpp"

namespace catqi {

namespace {

void require_n_max(int n_max, int lowest) {
  if (n_max < lowest) {
    throw DomainError("n_max must be >= " + std::to_string(lowest) + ", got " + std::to_string(n_max));
  }
}

std::string float_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_exact(IdentityReport& r, long n, const BigRat& expected, const BigRat& got) {
  if (expected != got) r.failures.push_back({n, expected.to_string(), got.to_string()});
}

void check_float(IdentityReport& r, long n, double expected, double got) {
  const double dev = std::fabs(got - expected) / std::fabs(expected);
  if (!(dev <= r.tol)) r.failures.push_back({n, float_text(expected), float_text(got)});
  if (std::isnan(dev)) {
    r.max_float_deviation = std::numeric_limits<double>::infinity();
  } else {
    r.max_float_deviation = std::max(r.max_float_deviation, dev);
  }
}

BigRat central_binomial(int n) { return binomial(2 * n, n); }

IdentityReport make_report(std::string suite, int n_max) {
  IdentityReport r;
  r.suite = std::move(suite);
  r.n_max = n_max;
  return r;
}

}  // namespace

std::string to_json(const IdentityReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["n_max"] = report.n_max;
  j["passed"] = report.passed();
  j["exact"] = report.exact;
  j["tol"] = report.tol;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    j["failures"].push_back({{"n", f.n}, {"expected", f.expected}, {"got", f.got}});
  }
  j["max_float_deviation"] = report.max_float_deviation;
  return j.dump();
}

BigRat power_sum_query(int n, const BigRat& t) {
  if (n < 0) throw DomainError("power sum needs n >= 0, got " + std::to_string(n));
  BigRat sum;
  BigRat t_pow(1);
  for (int l = 0; l <= n; ++l) {
    const BigRat b = binomial(n + l - 1, 2 * l);
    if (!b.is_zero()) {
      sum += b * BigRat(factorial(n - l)) * double_factorial(2 * l - 1) * t_pow;
    }
    t_pow *= t;
  }
  return sum;
}

IdentityReport verify_double_factorial_sum(int n_max) {
  require_n_max(n_max, 0);
  IdentityReport r = make_report("double-factorial-sum", n_max);
  for (int n = 0; n <= n_max; ++n) {
    check_exact(r, n, double_factorial(2 * n - 1), power_sum_query(n, BigRat(1)));
  }
  return r;
}

IdentityReport verify_central_binomial_sum(int n_max) {
  require_n_max(n_max, 0);
  IdentityReport r = make_report("central-binomial-sum", n_max);
  for (int n = 0; n <= n_max; ++n) {
    const BigRat rhs = BigRat(factorial(n)) / BigRat(n + 1) * central_binomial(n);
    check_exact(r, n, rhs, power_sum_query(n, BigRat(2)));
  }
  return r;
}

IdentityReport verify_lemma3_sums(int n_max) {
  require_n_max(n_max, 1);
  IdentityReport r = make_report("lemma3", n_max);
  BigRat first_lhs;
  BigRat odd_harmonic;
  for (int n = 1; n <= n_max; ++n) {
    const int k = n - 1;
    first_lhs += central_binomial(k) / (BigRat(k + 1) * pow(BigRat(4), k));
    odd_harmonic += BigRat(BigInt(1), BigInt(2 * n - 1));
    const BigRat cb = central_binomial(n);
    check_exact(r, n, BigRat(2) * (BigRat(1) - cb / pow(BigRat(4), n)), first_lhs);

    BigRat second_lhs;
    for (int j = 0; j < n; ++j) {
      second_lhs += central_binomial(j) * pow(BigRat(4), n - j) / BigRat(n - j);
    }
    const BigRat second_rhs = BigRat(2) * cb * odd_harmonic;
    if (second_rhs != second_lhs) {
      r.failures.push_back({n, "second identity: " + second_rhs.to_string(), second_lhs.to_string()});
    }
  }
  return r;
}

IdentityReport verify_reductions(int n_max, double tol) {
  require_n_max(n_max, 0);
  IdentityReport r = make_report("reductions", n_max);
  r.exact = false;
  r.tol = tol;
  const RationalParams quarter(BigRat(BigInt(1), BigInt(2)), BigRat(BigInt(1), BigInt(4)));
  const CQ1Params first{PosReal(0.5), PosReal(2.0)};
  for (int n = 0; n <= n_max; ++n) {
    const BigInt c = catalan_exact(n);
    const QuadExt second_kind = cq2_explicit(quarter, n);
    if (!second_kind.is_rational() || second_kind.p() != BigRat(c)) {
      r.failures.push_back({n, c.get_str(), second_kind.to_string()});
    }
    check_float(r, n, c.get_d(), cq1_eval(first, n));
  }
  return r;
}

IdentityReport verify_integral_identity(double a, double b, int n_max, double tol) {
  require_n_max(n_max, 0);
  const Params p(a, b);
  IdentityReport r = make_report("integral-identity", n_max);
  r.exact = false;
  r.tol = tol;
  QuadOptions opts;
  opts.tol = std::min(tol, QuadOptions{}.tol);
  opts.max_evaluations = eval_budget_from_env();
  for (int n = 0; n <= n_max; ++n) {
    const QuadResult lhs = cq2_kernel_integral(p, n, opts);
    const double rhs = std::numbers::pi * cq2_explicit_float(p, n);
    if (!lhs.converged) {
      r.failures.push_back({n, float_text(rhs), float_text(lhs.value) + " (not converged)"});
      r.max_float_deviation = std::max(r.max_float_deviation, std::fabs(lhs.value - rhs) / rhs);
      continue;
    }
    check_float(r, n, rhs, lhs.value);
  }
  return r;
}

}  // namespace catqi
