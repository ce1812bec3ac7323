#include "catqi/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "catqi/errors.hpp"

namespace catqi {

std::size_t eval_budget_from_env(std::size_t fallback) {
  const char* env = std::getenv("CATALANQI_EVAL_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}

Integrand::Integrand(std::function<double(double)> f, double exponent_at_zero,
                     double decay_exponent, std::function<double(double)> tail_bound)
    : f_(std::move(f)),
      exponent_at_zero_(exponent_at_zero),
      decay_exponent_(decay_exponent),
      tail_bound_(std::move(tail_bound)) {
  if (!f_) throw UsageError("integrand without an evaluator");
  if (!(exponent_at_zero_ > -1.0)) {
    throw DomainError("integrand exponent at 0 must exceed -1, got " + std::to_string(exponent_at_zero_));
  }
  if (!(decay_exponent_ > 1.0)) {
    throw DomainError("integrand decay exponent must exceed 1, got " + std::to_string(decay_exponent_));
  }
}

namespace {

// QUADPACK qk21 nodes and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452450, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  int source;  // which integrand the panel belongs to
  bool operator<(const Panel& o) const { return error < o.error; }
};

// Shared priority-queue refinement over panels that may come from several
// integrands (body and folded tail of the semi-infinite engine).
class AdaptiveSum {
 public:
  explicit AdaptiveSum(std::vector<std::function<double(double)>> sources)
      : sources_(std::move(sources)) {}

  void add(int source, double lo, double hi) {
    if (!(hi > lo)) return;
    Panel p = evaluate(source, lo, hi);
    value_ += p.value;
    error_ += p.error;
    push(p);
  }

  // Refines until error <= target(value) or the budget is spent. Returns
  // whether the target was met.
  template <class Target>
  bool refine(Target target, std::size_t budget) {
    while (true) {
      if (error_ <= target(value_)) {
        recompute();
        if (error_ <= target(value_)) return true;
      }
      if (queue_.empty() || evaluations_ + 42 > budget) {
        recompute();
        return error_ <= target(value_);
      }
      Panel worst = queue_.top();
      queue_.pop();
      const double mid = 0.5 * (worst.lo + worst.hi);
      if (!(mid > worst.lo && mid < worst.hi) ||
          (worst.hi - worst.lo) <= 64 * std::numeric_limits<double>::epsilon() * std::fabs(mid)) {
        // Panel cannot be split further; its error stays in the tally.
        frozen_value_ += worst.value;
        frozen_error_ += worst.error;
        continue;
      }
      const Panel left = evaluate(worst.source, worst.lo, mid);
      const Panel right = evaluate(worst.source, mid, worst.hi);
      value_ += left.value + right.value - worst.value;
      error_ += left.error + right.error - worst.error;
      push(left);
      push(right);
    }
  }

  double value() const { return value_; }
  double error() const { return error_; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  Panel evaluate(int source, double lo, double hi) {
    const KronrodPanel k = gauss_kronrod_21(sources_[static_cast<std::size_t>(source)], lo, hi);
    evaluations_ += 21;
    double err = std::fabs(k.kronrod - k.gauss);
    if (!std::isfinite(k.kronrod)) err = std::numeric_limits<double>::infinity();
    return {lo, hi, k.kronrod, err, source};
  }

  void push(const Panel& p) { queue_.push(p); }

  // Totals are updated incrementally while refining; this rebuilds them from
  // the live panels before any convergence decision.
  void recompute() {
    auto copy = queue_;
    double v = frozen_value_;
    double e = frozen_error_;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().error;
      copy.pop();
    }
    value_ = v;
    error_ = e;
  }

  std::vector<std::function<double(double)>> sources_;
  std::priority_queue<Panel> queue_;
  double value_ = 0.0;
  double error_ = 0.0;
  double frozen_value_ = 0.0;
  double frozen_error_ = 0.0;
  std::size_t evaluations_ = 0;
};

}  // namespace

KronrodPanel gauss_kronrod_21(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double resk = kWgk[10] * fc;
  double resg = 0.0;
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  return {resk * half, resg * half};
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              QuadOptions opts) {
  if (!(hi >= lo)) throw DomainError("integration bounds out of order");
  AdaptiveSum sum({f});
  sum.add(0, lo, hi);
  const double tol = opts.tol;
  const bool ok = sum.refine([tol](double v) { return tol * std::fabs(v); }, opts.max_evaluations);
  return {sum.value(), sum.error(), std::max<std::size_t>(sum.evaluations(), 1), ok};
}

QuadResult integrate_semi_infinite(const Integrand& f, QuadOptions opts) {
  constexpr double kMaxSplit = 1e16;  // in t
  const auto body = [&f](double s) { return s == 0.0 ? 0.0 : 2.0 * s * f(s * s); };

  double split_t = 1.0;
  double split_s = 1.0;
  // Tail beyond s = S folded onto (0, 1]: s = S / v, ds = S / v^2 dv.
  const auto folded_tail = [&body, &split_s](double v) {
    if (v == 0.0) return 0.0;
    const double s = split_s / v;
    return body(s) * split_s / (v * v);
  };

  AdaptiveSum sum({body, folded_tail});
  const double tol = opts.tol;
  const auto& bound = f.tail_bound();
  sum.add(0, 0.0, split_s);

  if (!bound) {
    sum.add(1, 0.0, 1.0);
    const bool ok = sum.refine([tol](double v) { return tol * std::fabs(v); }, opts.max_evaluations);
    return {sum.value(), sum.error(), sum.evaluations(), ok};
  }

  // Half the budget goes to panels, half to the neglected tail.
  const auto panel_target = [tol](double v) { return 0.5 * tol * std::fabs(v); };
  while (true) {
    bool ok = sum.refine(panel_target, opts.max_evaluations);
    const double tail = bound(split_t);
    if (ok && tail <= 0.5 * tol * std::fabs(sum.value())) {
      return {sum.value(), sum.error() + tail, sum.evaluations(), true};
    }
    if (!ok) return {sum.value(), sum.error() + tail, sum.evaluations(), false};
    if (split_t >= kMaxSplit) {
      sum.add(1, 0.0, 1.0);
      ok = sum.refine([tol](double v) { return tol * std::fabs(v); }, opts.max_evaluations);
      return {sum.value(), sum.error(), sum.evaluations(), ok};
    }
    const double next_s = split_s * 4.0;
    sum.add(0, split_s, next_s);
    split_s = next_s;
    split_t = split_s * split_s;
  }
}

QuadResult integrate_tanh_sinh(const std::function<double(double, double)>& f, double lo,
                               double hi, QuadOptions opts) {
  if (!(hi > lo)) throw DomainError("tanh-sinh needs lo < hi");
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  constexpr double kTauMax = 6.5;
  constexpr int kMaxLevel = 12;
  const double width = hi - lo;
  const double half = 0.5 * width;
  std::size_t evaluations = 0;

  // Contribution of the node pair at +tau and -tau (or the single centre node).
  const auto node_pair = [&](double tau) {
    const double y = kHalfPi * std::sinh(tau);
    const double e = std::exp(-2.0 * y);
    const double d = half * 2.0 * e / (1.0 + e);  // distance to the nearer endpoint
    const double w = half * kHalfPi * std::cosh(tau) * 4.0 * e / ((1.0 + e) * (1.0 + e));
    if (w == 0.0 || d == 0.0) return 0.0;
    double s = 0.0;
    if (tau == 0.0) {
      ++evaluations;
      return w * f(half, half);
    }
    evaluations += 2;
    s += f(width - d, d);  // near hi
    s += f(d, width - d);  // near lo
    return w * s;
  };

  double h = 1.0;
  double sum = node_pair(0.0);
  for (int k = 1; k * h <= kTauMax; ++k) sum += node_pair(k * h);
  double estimate = h * sum;
  double error = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    for (int k = 1; k * h <= kTauMax; k += 2) sum += node_pair(k * h);
    const double next = h * sum;
    error = std::fabs(next - estimate);
    estimate = next;
    if (level >= 3 && error <= opts.tol * std::fabs(estimate)) {
      return {estimate, error, evaluations, true};
    }
    if (evaluations >= opts.max_evaluations) break;
  }
  return {estimate, error, evaluations, false};
}

}  // namespace catqi
