#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catqi/bigrat.hpp"
#include "cli.hpp"

using catqi::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) rows.push_back(json::parse(line));
  }
  return rows;
}

json single(const Outcome& o) {
  auto rows = json_lines(o.out);
  REQUIRE(rows.size() == 1);
  return rows.front();
}

}  // namespace

TEST_CASE("second-kind number at (1/2, 1/4) is the Catalan number") {
  const auto o = cli({"compute", "--target", "cq2-number", "--a", "1/2", "--b", "1/4", "--n", "5", "--mode",
                      "exact", "--format", "json"});
  REQUIRE(o.code == 0);
  const json j = single(o);
  CHECK(j["p"] == "42");
  CHECK(j["q"] == "0");
  CHECK(j["value"] == 42.0);
}

TEST_CASE("irrational exact output round-trips through JSON") {
  const auto o = cli({"compute", "--target", "cq2-number", "--a", "1", "--b", "2", "--n", "3", "--format", "json"});
  REQUIRE(o.code == 0);
  const json j = single(o);
  const auto p = catqi::BigRat::parse(j["p"].get<std::string>());
  const auto q = catqi::BigRat::parse(j["q"].get<std::string>());
  const auto d = catqi::BigRat::parse(j["disc"].get<std::string>());
  CHECK_FALSE(q.is_zero());
  CHECK(d == catqi::BigRat(2));
  const double v = p.to_double() + q.to_double() * std::sqrt(d.to_double());
  CHECK(v == doctest::Approx(j["value"].get<double>()).epsilon(1e-14));

  const auto f = cli({"compute", "--target", "cq2-number", "--a", "1", "--b", "2", "--n", "3", "--mode", "float",
                      "--format", "json"});
  CHECK(single(f)["value"].get<double>() == doctest::Approx(v).epsilon(1e-13));
}

TEST_CASE("central binomial by quadrature") {
  const auto o = cli({"compute", "--target", "central-binomial", "--n", "0", "--mode", "quad", "--format", "json"});
  REQUIRE(o.code == 0);
  const json j = single(o);
  CHECK(j["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(j["converged"] == true);
  CHECK(j["evaluations"].get<long>() > 0);
  CHECK(j.contains("abs_error"));
  CHECK(j["tol"] == 1e-10);
}

TEST_CASE("verify lemma3") {
  const auto o = cli({"verify", "--suite", "lemma3", "--n-max", "100", "--format", "json"});
  REQUIRE(o.code == 0);
  const json j = single(o);
  CHECK(j["passed"] == true);
  CHECK(j["suite"] == "lemma3");
  CHECK(j["n_max"] == 100);
}

TEST_CASE("all suites pass at modest size") {
  const auto o = cli({"verify", "--n-max", "15", "--format", "json"});
  CHECK(o.code == 0);
  const auto rows = json_lines(o.out);
  REQUIRE(rows.size() == 5);
  for (const auto& r : rows) CHECK(r["passed"] == true);
}

TEST_CASE("formats carry identical numbers") {
  const std::vector<std::string> base = {"compute", "--target", "cq1", "--a", "0.75", "--b", "2.5", "--z", "1.5"};
  auto with = [&](const char* fmt) {
    auto args = base;
    args.insert(args.end(), {"--format", fmt});
    return cli(args);
  };
  const auto j = with("json");
  const auto c = with("csv");
  const auto t = with("text");
  REQUIRE(j.code == 0);
  REQUIRE(c.code == 0);
  REQUIRE(t.code == 0);
  const std::string value = single(j)["value"].dump();
  CHECK(single(j)["value"].get<double>() == doctest::Approx(1.24666672705088612109).epsilon(1e-13));
  CHECK(c.out.find("," + value + "\n") != std::string::npos);
  CHECK(t.out.find("value: " + value + "\n") != std::string::npos);
  CHECK(c.out.substr(0, c.out.find('\n')).find("value") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with a single-line diagnostic") {
  const std::vector<std::vector<std::string>> bad = {
      {"compute", "--target", "cq2-number", "--a", "0.5", "--b", "1/4", "--n", "5", "--mode", "exact"},
      {"compute", "--target", "cq2-number", "--a", "0.5", "--b", "1/4", "--n", "5", "--mode", "series"},
      {"compute", "--target", "cq2-number", "--a", "1/0", "--b", "1", "--n", "1"},
      {"compute", "--target", "cq2-number", "--a", "abc", "--b", "1", "--n", "1"},
      {"compute", "--target", "cq2-number", "--a", "-1", "--b", "1", "--n", "1"},
      {"compute", "--target", "catalan", "--n", "-3"},
      {"compute", "--target", "nope", "--n", "3"},
      {"compute", "--target", "central-binomial", "--n", "3", "--mode", "quad", "--tol", "0"},
      {"compute", "--target", "genfunc", "--a", "1", "--b", "1", "--x", "2"},
      {"compute", "--target", "cq1", "--a", "1", "--b", "-2", "--z", "1"},
      {"compute", "--target", "cq2-number", "--a", "1", "--b", "1"},
      {"table", "--target", "catalan", "--n-max", "20000"},
      {"frobnicate"},
      {},
  };
  for (const auto& args : bad) {
    const auto o = cli(args);
    INFO(o.err);
    CHECK(o.code == 2);
    CHECK(o.out.empty());
    CHECK_FALSE(o.err.empty());
    CHECK(o.err.find('\n') == o.err.size() - 1);
  }
}

TEST_CASE("non-convergence exits 1") {
  setenv("CATALANQI_EVAL_BUDGET", "50", 1);
  const auto o = cli({"compute", "--target", "cq2-number", "--a", "1", "--b", "2", "--n", "12", "--mode", "quad",
                      "--format", "json"});
  unsetenv("CATALANQI_EVAL_BUDGET");
  CHECK(o.code == 1);
  CHECK(single(o)["converged"] == false);
}

TEST_CASE("catalan table") {
  const auto o = cli({"table", "--target", "catalan", "--n-max", "5"});
  REQUIRE(o.code == 0);
  const auto rows = json_lines(o.out);
  REQUIRE(rows.size() == 6);
  const double expected[] = {1, 1, 2, 5, 14, 42};
  for (int n = 0; n <= 5; ++n) {
    CHECK(rows[n]["n"] == n);
    CHECK(rows[n]["exact"].get<double>() == expected[n]);
    CHECK(rows[n]["series"].get<double>() == expected[n]);
    CHECK(rows[n]["float"].get<double>() == doctest::Approx(expected[n]).epsilon(1e-12));
    CHECK(rows[n]["quad"].get<double>() == doctest::Approx(expected[n]).epsilon(1e-9));
    CHECK(rows[n]["agree"] == true);
  }
}

TEST_CASE("central binomial table") {
  const auto o = cli({"table", "--target", "central-binomial", "--n-max", "5"});
  REQUIRE(o.code == 0);
  const auto rows = json_lines(o.out);
  REQUIRE(rows.size() == 6);
  const double expected[] = {1, 2, 6, 20, 70, 252};
  for (int n = 0; n <= 5; ++n) {
    CHECK(rows[n]["exact"].get<double>() == expected[n]);
    CHECK(rows[n]["quad"].get<double>() == doctest::Approx(expected[n]).epsilon(1e-9));
  }
}

TEST_CASE("grid table is ordered and bounded") {
  const auto o = cli({"table", "--target", "cq2-number", "--a", "1,1/2", "--b", "1,2", "--n-max", "3", "--routes",
                      "exact,float"});
  REQUIRE(o.code == 0);
  const auto rows = json_lines(o.out);
  REQUIRE(rows.size() == 16);
  CHECK(rows[0]["a"] == "1");
  CHECK(rows[0]["b"] == "1");
  CHECK(rows[0]["n"] == 0);
  CHECK(rows[0]["exact"].get<double>() == 0.5);
  CHECK(rows[4]["b"] == "2");
  CHECK(rows[8]["a"] == "1/2");
  CHECK_FALSE(rows[0].contains("quad"));
}

TEST_CASE("every route gives 1/2 at (1,1), n = 0") {
  const auto o = cli({"table", "--target", "cq2-number", "--a", "1", "--b", "1", "--n-max", "0"});
  REQUIRE(o.code == 0);
  const auto rows = json_lines(o.out);
  REQUIRE(rows.size() == 1);
  for (const char* route : {"exact", "float", "series"}) CHECK(rows[0][route].get<double>() == 0.5);
  CHECK(rows[0]["quad"].get<double>() == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(rows[0]["tol"] == 1e-10);
}

TEST_CASE("series export rows") {
  const auto o = cli({"table", "--target", "cq2-number", "--a", "1/2", "--b", "1/4", "--n-max", "4", "--mode",
                      "series", "--format", "csv"});
  REQUIRE(o.code == 0);
  std::istringstream in(o.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,p,q,disc,float_value");
  std::getline(in, line);
  CHECK(line == "0,1,0,0,1.0");
}

TEST_CASE("compare routes agree") {
  const auto o = cli({"compare", "--target", "cq2-number", "--a", "1/4", "--b", "9/4", "--n", "7", "--format",
                      "json"});
  REQUIRE(o.code == 0);
  const json j = single(o);
  CHECK(j["agree"] == true);
  CHECK(j["max_rel_deviation"].get<double>() < 1e-8);

  const auto g = cli({"compare", "--target", "genfunc", "--a", "1", "--b", "4", "--c", "2", "--x", "1"});
  CHECK(g.code == 0);
  const auto f = cli({"compare", "--target", "cq2-function", "--a", "1", "--b", "2", "--z", "0.5", "--m", "2"});
  CHECK(f.code == 0);
  const auto c = cli({"compare", "--target", "cq1", "--a", "1/2", "--b", "2", "--z", "3"});
  CHECK(c.code == 0);
}

TEST_CASE("help exits 0") {
  const auto o = cli({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("compute") != std::string::npos);
}
