#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "catqi/catalan.hpp"
#include "catqi/errors.hpp"
#include "catqi/factorials.hpp"
#include "catqi/identities.hpp"
#include "catqi/integral_reps.hpp"
#include "catqi/quadext.hpp"
#include "catqi/second_kind.hpp"
#include "records.hpp"

namespace catqi::cli {

namespace {

constexpr std::size_t kMaxTableRows = 10000;

enum class Target { kCatalan, kCq1, kCq2Number, kCq2Function, kCentralBinomial, kGenFunc };

const std::map<std::string, Target> kTargets = {
    {"catalan", Target::kCatalan},
    {"cq1", Target::kCq1},
    {"cq2-number", Target::kCq2Number},
    {"cq2-function", Target::kCq2Function},
    {"central-binomial", Target::kCentralBinomial},
    {"genfunc", Target::kGenFunc},
};

// Routes per target; the first word of a route is the mode it belongs to.
std::vector<std::string> routes_for(Target t) {
  switch (t) {
    case Target::kCatalan:
      return {"exact", "float", "series", "quad"};
    case Target::kCq1:
      return {"float", "quad", "quad-semi-infinite"};
    case Target::kCq2Number:
      return {"exact", "float", "series", "quad"};
    case Target::kCq2Function:
      return {"quad"};
    case Target::kCentralBinomial:
      return {"exact", "quad"};
    case Target::kGenFunc:
      return {"float", "quad"};
  }
  return {};
}

std::string mode_of(const std::string& route) { return route.substr(0, route.find('-')); }

/// A command-line number: exact when written as an integer or "p/q".
struct Scalar {
  std::string text;
  std::optional<BigRat> exact;
  double value = 0.0;
};

Scalar parse_scalar(const std::string& text, const std::string& flag) {
  Scalar s{text, std::nullopt, 0.0};
  try {
    s.exact = BigRat::parse(text);
    s.value = s.exact->to_double();
    return s;
  } catch (const UsageError&) {
  } catch (const DomainError&) {
    throw UsageError("malformed number for " + flag + ": '" + text + "'");
  }
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
    throw UsageError("malformed number for " + flag + ": '" + text + "'");
  }
  s.value = v;
  return s;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (out.empty()) out.emplace_back();
  return out;
}

struct Options {
  std::string target;
  std::string mode;
  std::string format;  // empty: text, or json for table
  std::string a;
  std::string b;
  std::string c;
  std::optional<long> n;
  std::optional<std::string> z;
  std::optional<std::string> x;
  int m = 0;
  double tol = 1e-10;
  double agree_tol = 1e-8;
  int n_min = 0;
  std::optional<int> n_max;
  std::string routes;
  std::string suite = "all";
};

/// One fully parsed evaluation point.
struct Point {
  Target target = Target::kCatalan;
  std::optional<Scalar> a;
  std::optional<Scalar> b;
  std::optional<Scalar> c;
  long n = 0;
  double arg = 0.0;  // z for cq1 / cq2-function, x for genfunc
  std::string arg_text;
  int m = 0;
};

struct RouteResult {
  std::string route;
  double value = 0.0;
  std::optional<QuadExt> exact;
  std::optional<QuadResult> quad;
};

Format parse_format(const std::string& f) {
  if (f == "json") return Format::kJson;
  if (f == "csv") return Format::kCsv;
  return Format::kText;
}

Target parse_target(const std::string& name) {
  const auto it = kTargets.find(name);
  if (it == kTargets.end()) throw UsageError("unknown target '" + name + "'");
  return it->second;
}

bool is_exact_mode(const std::string& mode) { return mode == "exact" || mode == "series"; }

std::string default_mode(const Point& p) {
  switch (p.target) {
    case Target::kCatalan:
    case Target::kCentralBinomial:
      return "exact";
    case Target::kCq2Number:
      return p.a && p.b && p.a->exact && p.b->exact ? "exact" : "float";
    case Target::kCq2Function:
      return "quad";
    case Target::kCq1:
    case Target::kGenFunc:
      return "float";
  }
  return "float";
}

RationalParams rational_params(const Point& p) {
  if (!p.a->exact || !p.b->exact) {
    throw UsageError("exact and series modes need rational --a and --b (integers or p/q)");
  }
  return {*p.a->exact, *p.b->exact};
}

Params float_params(const Point& p) { return {p.a->value, p.b->value}; }

int index_of(const Point& p) {
  if (p.n < 0 || p.n > 1000000) throw DomainError("--n out of range: " + std::to_string(p.n));
  return static_cast<int>(p.n);
}

// A rational value is reported with disc 0 whatever radicand it was computed in.
std::string disc_text(const QuadExt& v) { return v.is_rational() ? "0" : v.disc().to_string(); }

RouteResult from_quad(const std::string& route, const QuadResult& q) {
  return {route, q.value, std::nullopt, q};
}

RouteResult from_exact(const std::string& route, QuadExt v) {
  const double f = v.to_double();
  return {route, f, std::move(v), std::nullopt};
}

RouteResult compute_route(const Point& p, const std::string& route, const QuadOptions& quad) {
  const RationalParams kCatalanSecond(BigRat(BigInt(1), BigInt(2)), BigRat(BigInt(1), BigInt(4)));
  switch (p.target) {
    case Target::kCatalan: {
      const int n = index_of(p);
      if (route == "exact") return from_exact(route, QuadExt::rational(BigRat(catalan_exact(n)), BigRat{}));
      if (route == "float") return {route, cq1_eval({PosReal(0.5), PosReal(2.0)}, n), {}, {}};
      if (route == "series") return from_exact(route, cq2_series(kCatalanSecond, n)[n]);
      return from_quad(route, cq2_integral(Params(0.5, 0.25), n, quad));
    }
    case Target::kCq1: {
      const CQ1Params cp{PosReal(p.a->value), PosReal(p.b->value)};
      if (route == "float") return {route, cq1_eval(cp, p.arg), {}, {}};
      if (route == "quad") return from_quad(route, cq1_integral_finite(cp, p.arg, quad));
      return from_quad(route, cq1_integral_infinite(cp, p.arg, quad));
    }
    case Target::kCq2Number: {
      const int n = index_of(p);
      if (route == "exact") return from_exact(route, cq2_explicit(rational_params(p), n));
      if (route == "series") return from_exact(route, cq2_series(rational_params(p), n)[n]);
      if (route == "float") return {route, cq2_explicit_float(float_params(p), n), {}, {}};
      return from_quad(route, cq2_integral(float_params(p), n, quad));
    }
    case Target::kCq2Function:
      return from_quad(route, cq2_function_db(float_params(p), p.arg, p.m, quad));
    case Target::kCentralBinomial: {
      const int n = index_of(p);
      if (route == "exact") return from_exact(route, QuadExt::rational(binomial(2 * n, n), BigRat{}));
      return from_quad(route, central_binomial_integral(n, quad));
    }
    case Target::kGenFunc: {
      const double c = p.c ? p.c->value : 1.0;
      const GabcReduction red = gabc_reduce(p.a->value, p.b->value, c);
      if (route == "float") return {route, red.scale * gen_func_eval(red.params, p.arg), {}, {}};
      QuadResult q = gen_func_integral(red.params, p.arg, quad);
      q.value *= red.scale;
      q.abs_error *= red.scale;
      return from_quad(route, q);
    }
  }
  throw UsageError("unsupported target");
}

void require_absent(const std::optional<Scalar>& s, const char* flag, const std::string& target) {
  if (s) throw UsageError(std::string(flag) + " is not used by target " + target);
}

// Checks the flag set against the target before anything is computed.
void validate_point(const Point& p, const Options& o, bool has_n, bool has_arg) {
  const bool ab = p.a && p.b;
  switch (p.target) {
    case Target::kCatalan:
    case Target::kCentralBinomial:
      require_absent(p.a, "--a", o.target);
      require_absent(p.b, "--b", o.target);
      require_absent(p.c, "--c", o.target);
      if (!has_n) throw UsageError("target " + o.target + " needs --n");
      break;
    case Target::kCq2Number:
      if (!ab || !has_n) throw UsageError("target cq2-number needs --a, --b and --n");
      require_absent(p.c, "--c", o.target);
      break;
    case Target::kCq1:
    case Target::kCq2Function:
      if (!ab || !has_arg) throw UsageError("target " + o.target + " needs --a, --b and --z (or --n)");
      require_absent(p.c, "--c", o.target);
      break;
    case Target::kGenFunc:
      if (!ab || !o.x) throw UsageError("target genfunc needs --a, --b and --x");
      break;
  }
  if (p.m != 0 && p.target != Target::kCq2Function) throw UsageError("--m applies to cq2-function only");
  if (p.m < 0) throw UsageError("--m must be >= 0");
}

Point make_point(const Options& o, const std::string& a, const std::string& b) {
  Point p;
  p.target = parse_target(o.target);
  if (!a.empty()) p.a = parse_scalar(a, "--a");
  if (!b.empty()) p.b = parse_scalar(b, "--b");
  if (!o.c.empty()) p.c = parse_scalar(o.c, "--c");
  p.n = o.n.value_or(0);
  p.m = o.m;
  if (p.target == Target::kGenFunc && o.x) {
    p.arg = parse_scalar(*o.x, "--x").value;
    p.arg_text = *o.x;
  } else if (o.z) {
    p.arg = parse_scalar(*o.z, "--z").value;
    p.arg_text = *o.z;
  } else if (o.n) {
    p.arg = static_cast<double>(*o.n);
    p.arg_text = std::to_string(*o.n);
  }
  return p;
}

void add_point_fields(Record& r, const Point& p, const std::string& target) {
  r.push_back({"target", target});
  if (p.a) r.push_back({"a", p.a->text});
  if (p.b) r.push_back({"b", p.b->text});
  if (p.c) r.push_back({"c", p.c->text});
  switch (p.target) {
    case Target::kCatalan:
    case Target::kCq2Number:
    case Target::kCentralBinomial:
      r.push_back({"n", static_cast<std::int64_t>(p.n)});
      break;
    case Target::kCq1:
    case Target::kCq2Function:
      r.push_back({"z", p.arg});
      break;
    case Target::kGenFunc:
      r.push_back({"x", p.arg});
      break;
  }
  if (p.target == Target::kCq2Function) r.push_back({"m", static_cast<std::int64_t>(p.m)});
}

QuadOptions quad_options(const Options& o) {
  QuadOptions q;
  q.tol = o.tol;
  q.max_evaluations = eval_budget_from_env();
  return q;
}

double max_pairwise_deviation(const std::vector<RouteResult>& results) {
  double worst = 0.0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t j = i + 1; j < results.size(); ++j) {
      const double x = results[i].value;
      const double y = results[j].value;
      const double scale = std::max(std::fabs(x), std::fabs(y));
      const double dev = scale == 0.0 ? 0.0 : std::fabs(x - y) / scale;
      worst = std::isnan(dev) ? INFINITY : std::max(worst, dev);
    }
  }
  return worst;
}

std::vector<std::string> select_routes(const Options& o, Target t) {
  const auto all = routes_for(t);
  std::vector<std::string> wanted;
  if (!o.routes.empty()) {
    wanted = split_list(o.routes);
  } else if (!o.mode.empty()) {
    for (const auto& r : all) {
      if (mode_of(r) == o.mode) wanted.push_back(r);
    }
    if (wanted.empty()) throw UsageError("mode '" + o.mode + "' is not supported for target " + o.target);
    return wanted;
  } else {
    return all;
  }
  for (const auto& r : wanted) {
    if (std::find(all.begin(), all.end(), r) == all.end()) {
      throw UsageError("route '" + r + "' is not supported for target " + o.target);
    }
  }
  return wanted;
}

void check_exact_inputs(const Point& p, const std::vector<std::string>& routes) {
  if (p.target != Target::kCq2Number) return;
  for (const auto& r : routes) {
    if (is_exact_mode(r) && (!p.a->exact || !p.b->exact)) {
      throw UsageError("mode " + r + " needs rational --a and --b (integers or p/q), got " + p.a->text +
                       ", " + p.b->text);
    }
  }
}

bool uses_quad(const std::vector<std::string>& routes) {
  return std::any_of(routes.begin(), routes.end(), [](const auto& r) { return mode_of(r) == "quad"; });
}

int cmd_compute(const Options& o, std::ostream& out) {
  Point p = make_point(o, o.a, o.b);
  validate_point(p, o, o.n.has_value(), o.z || o.n);
  const std::string mode = o.mode.empty() ? default_mode(p) : o.mode;
  const auto all = routes_for(p.target);
  if (std::find(all.begin(), all.end(), mode) == all.end()) {
    throw UsageError("mode '" + mode + "' is not supported for target " + o.target);
  }
  check_exact_inputs(p, {mode});
  if (mode == "quad" && !(o.tol > 0.0)) throw UsageError("quad mode needs --tol > 0");

  const RouteResult res = compute_route(p, mode, quad_options(o));
  Record r;
  add_point_fields(r, p, o.target);
  r.push_back({"mode", mode});
  r.push_back({"route", res.route});
  r.push_back({"value", res.value});
  if (res.exact) {
    r.push_back({"p", res.exact->p().to_string()});
    r.push_back({"q", res.exact->q().to_string()});
    r.push_back({"disc", disc_text(*res.exact)});
    r.push_back({"exact", res.exact->to_string()});
  }
  if (res.quad) {
    r.push_back({"tol", o.tol});
    r.push_back({"evaluations", static_cast<std::int64_t>(res.quad->evaluations)});
    r.push_back({"abs_error", res.quad->abs_error});
    r.push_back({"converged", res.quad->converged});
  }
  write_records(out, {r}, parse_format(o.format));
  return res.quad && !res.quad->converged ? kExitFailure : kExitOk;
}

struct RowOutcome {
  Record record;
  bool ok = true;
};

RowOutcome compare_row(const Point& p, const Options& o, const std::vector<std::string>& routes) {
  std::vector<RouteResult> results;
  results.reserve(routes.size());
  const QuadOptions quad = quad_options(o);
  for (const auto& route : routes) results.push_back(compute_route(p, route, quad));
  RowOutcome row;
  add_point_fields(row.record, p, o.target);
  bool converged = true;
  for (const auto& res : results) {
    row.record.push_back({res.route, res.value});
    if (res.quad) {
      row.record.push_back({res.route + "_evaluations", static_cast<std::int64_t>(res.quad->evaluations)});
      converged = converged && res.quad->converged;
    }
  }
  if (uses_quad(routes)) row.record.push_back({"tol", o.tol});
  const double dev = max_pairwise_deviation(results);
  row.record.push_back({"max_rel_deviation", dev});
  const bool agree = dev <= o.agree_tol;
  row.record.push_back({"agree", agree});
  row.record.push_back({"converged", converged});
  row.ok = agree && converged;
  return row;
}

int cmd_compare(const Options& o, std::ostream& out) {
  Point p = make_point(o, o.a, o.b);
  validate_point(p, o, o.n.has_value(), o.z || o.n);
  const auto routes = select_routes(o, p.target);
  check_exact_inputs(p, routes);
  if (uses_quad(routes) && !(o.tol > 0.0)) throw UsageError("quad routes need --tol > 0");
  const RowOutcome row = compare_row(p, o, routes);
  write_records(out, {row.record}, parse_format(o.format));
  return row.ok ? kExitOk : kExitFailure;
}

int series_table(const Options& o, std::ostream& out) {
  if (o.a.find(',') != std::string::npos || o.b.find(',') != std::string::npos) {
    throw UsageError("series export takes a single --a and --b");
  }
  Point p = make_point(o, o.a, o.b);
  const ExactSeries s = cq2_series(rational_params(p), *o.n_max);
  std::vector<Record> rows;
  for (int n = o.n_min; n <= *o.n_max; ++n) {
    const QuadExt& c = s[static_cast<std::size_t>(n)];
    rows.push_back({{"n", static_cast<std::int64_t>(n)},
                    {"p", c.p().to_string()},
                    {"q", c.q().to_string()},
                    {"disc", disc_text(c)},
                    {"float_value", c.to_double()}});
  }
  write_records(out, rows, parse_format(o.format));
  return kExitOk;
}

int cmd_table(Options o, std::ostream& out) {
  if (o.format.empty()) o.format = "json";
  const Target t = parse_target(o.target);
  if (t == Target::kGenFunc) throw UsageError("table does not support genfunc; use compare per point");
  if (!o.n_max) throw UsageError("table needs --n-max");
  if (o.n_min < 0 || o.n_min > *o.n_max) throw UsageError("need 0 <= --n-min <= --n-max");
  if (o.n || o.z) throw UsageError("table takes --n-min/--n-max instead of --n/--z");
  const bool needs_ab = t == Target::kCq1 || t == Target::kCq2Number || t == Target::kCq2Function;
  if (needs_ab && (o.a.empty() || o.b.empty())) throw UsageError("target " + o.target + " needs --a and --b");

  if (o.mode == "series" && t == Target::kCq2Number) return series_table(o, out);

  const auto as = needs_ab ? split_list(o.a) : std::vector<std::string>{""};
  const auto bs = needs_ab ? split_list(o.b) : std::vector<std::string>{""};
  const std::size_t count = as.size() * bs.size() * static_cast<std::size_t>(*o.n_max - o.n_min + 1);
  if (count > kMaxTableRows) {
    throw UsageError("table would have " + std::to_string(count) + " rows; the limit is " +
                     std::to_string(kMaxTableRows));
  }

  std::vector<Point> points;
  std::vector<std::string> routes;
  for (const auto& a : as) {
    for (const auto& b : bs) {
      for (int n = o.n_min; n <= *o.n_max; ++n) {
        Options row_opts = o;
        row_opts.n = n;
        Point p = make_point(row_opts, a, b);
        validate_point(p, row_opts, true, true);
        if (routes.empty()) routes = select_routes(o, t);
        check_exact_inputs(p, routes);
        points.push_back(std::move(p));
      }
    }
  }
  if (uses_quad(routes) && !(o.tol > 0.0)) throw UsageError("quad routes need --tol > 0");

  // Rows are independent; evaluate them in parallel batches, emit in order.
  std::vector<RowOutcome> rows(points.size());
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < points.size(); start += workers) {
    std::vector<std::future<RowOutcome>> batch;
    const std::size_t stop = std::min(points.size(), start + workers);
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, [&, i] { return compare_row(points[i], o, routes); }));
    }
    for (std::size_t i = start; i < stop; ++i) rows[i] = batch[i - start].get();
  }

  std::vector<Record> records;
  bool ok = true;
  for (auto& r : rows) {
    ok = ok && r.ok;
    records.push_back(std::move(r.record));
  }
  write_records(out, records, parse_format(o.format));
  return ok ? kExitOk : kExitFailure;
}

Record report_record(const IdentityReport& r) {
  return {{"suite", r.suite},
          {"n_max", static_cast<std::int64_t>(r.n_max)},
          {"passed", r.passed()},
          {"exact", r.exact},
          {"tol", r.tol},
          {"failures", static_cast<std::int64_t>(r.failures.size())},
          {"max_float_deviation", r.max_float_deviation}};
}

int cmd_verify(const Options& o, std::ostream& out) {
  static const std::vector<std::string> kSuites = {"double-factorial", "central-binomial", "lemma3",
                                                   "reductions", "integral-identity"};
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = kSuites;
  } else if (std::find(kSuites.begin(), kSuites.end(), o.suite) != kSuites.end()) {
    suites = {o.suite};
  } else {
    throw UsageError("unknown suite '" + o.suite + "'");
  }
  if (!(o.tol > 0.0)) throw UsageError("--tol must be > 0");

  std::vector<IdentityReport> reports;
  for (const auto& s : suites) {
    if (s == "double-factorial") reports.push_back(verify_double_factorial_sum(o.n_max.value_or(200)));
    if (s == "central-binomial") reports.push_back(verify_central_binomial_sum(o.n_max.value_or(200)));
    if (s == "lemma3") reports.push_back(verify_lemma3_sums(o.n_max.value_or(200)));
    if (s == "reductions") reports.push_back(verify_reductions(o.n_max.value_or(200), o.tol));
    if (s == "integral-identity") {
      const double a = o.a.empty() ? 0.5 : parse_scalar(o.a, "--a").value;
      const double b = o.b.empty() ? 0.25 : parse_scalar(o.b, "--b").value;
      reports.push_back(verify_integral_identity(a, b, o.n_max.value_or(20), o.tol));
    }
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (parse_format(o.format) == Format::kJson) {
    for (const auto& r : reports) out << to_json(r) << '\n';
  } else {
    std::vector<Record> records;
    for (const auto& r : reports) records.push_back(report_record(r));
    write_records(out, records, parse_format(o.format));
  }
  return ok ? kExitOk : kExitFailure;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--tol", o.tol, "Relative quadrature tolerance (and float-suite tolerance)");
}

void add_point(CLI::App* sub, Options& o, bool single_point) {
  sub->add_option("--target", o.target, "catalan | cq1 | cq2-number | cq2-function | central-binomial | genfunc")
      ->required();
  sub->add_option("--a", o.a, single_point ? "Parameter a (decimal or p/q)" : "Comma-separated values of a");
  sub->add_option("--b", o.b, single_point ? "Parameter b (decimal or p/q)" : "Comma-separated values of b");
  sub->add_option("--c", o.c, "Parameter c of G_{a,b,c} (genfunc only)");
  sub->add_option("--n", o.n, "Integer index");
  sub->add_option("--z", o.z, "Real argument for cq1 and cq2-function");
  sub->add_option("--x", o.x, "Argument x <= b/c for genfunc");
  sub->add_option("--m", o.m, "Order of the b-derivative (cq2-function)");
  sub->add_option("--mode", o.mode, "exact | float | series | quad")
      ->check(CLI::IsMember({"exact", "float", "series", "quad"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Catalan numbers, Catalan-Qi functions and second-kind Catalan-Qi numbers", "catqi"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "Evaluate one target by one route");
  add_point(compute, o, true);
  add_common(compute, o);

  auto* compare = app.add_subcommand("compare", "Evaluate one target by every route and compare");
  add_point(compare, o, true);
  add_common(compare, o);
  compare->add_option("--routes", o.routes, "Comma-separated subset of routes");
  compare->add_option("--agree-tol", o.agree_tol, "Largest accepted relative deviation between routes");

  auto* table = app.add_subcommand("table", "Tabulate route values over a parameter grid");
  add_point(table, o, false);
  add_common(table, o);
  table->add_option("--routes", o.routes, "Comma-separated subset of routes");
  table->add_option("--n-min", o.n_min, "First index");
  table->add_option("--n-max", o.n_max, "Last index");
  table->add_option("--agree-tol", o.agree_tol, "Largest accepted relative deviation between routes");

  auto* verify = app.add_subcommand("verify", "Run identity verification suites");
  verify->add_option("--suite", o.suite,
                     "double-factorial | central-binomial | lemma3 | reductions | integral-identity | all");
  verify->add_option("--n-max", o.n_max, "Largest n checked");
  verify->add_option("--a", o.a, "a for integral-identity (default 1/2)");
  verify->add_option("--b", o.b, "b for integral-identity (default 1/4)");
  add_common(verify, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "catqi: error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    if (table->parsed()) return cmd_table(o, out);
    return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "catqi: error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "catqi: error: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "catqi: error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace catqi::cli
