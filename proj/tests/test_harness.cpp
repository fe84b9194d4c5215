#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lamcat/harness/bench.hpp"
#include "lamcat/harness/catalog.hpp"
#include "lamcat/harness/eval.hpp"
#include "lamcat/harness/expr.hpp"
#include "lamcat/harness/verify.hpp"

using namespace lamcat;
using namespace lamcat::harness;

namespace {

const std::filesystem::path source_dir = LAMCAT_SOURCE_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Random expression text over literals, q, calls and all operators.
std::string random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 9);
  switch (pick(rng)) {
    case 0:
      return std::to_string(rng() % 20);
    case 1:
      return "q";
    case 2:
      return "x";
    case 3:
      return "-" + random_expr(rng, depth - 1);
    case 4:
      return "(" + random_expr(rng, depth - 1) + ")";
    case 5:
      return "gcd(" + random_expr(rng, depth - 1) + ", " + random_expr(rng, depth - 1) + ")";
    case 6:
      return "lambert(phi, alpha=" + std::to_string(rng() % 3 + 1) + ", sign=plus)";
    case 7:
      return "sum(k, 1, " + random_expr(rng, depth - 1) + ", " + random_expr(rng, depth - 1) + ")";
    default: {
      const char ops[] = {'+', '-', '*', '/', '^'};
      return random_expr(rng, depth - 1) + " " + ops[rng() % 5] + " " + random_expr(rng, depth - 1);
    }
  }
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(LAMCAT_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) out += buf;
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("lamcat_" + name);
  std::ofstream(p) << text;
  return p;
}

constexpr const char* kSmall = R"cat(
[C2] anchor="phi" quote="x" order=30 lhs="lambert(phi)" rhs="q/(1-q)^2" expected=verified
[Z1] anchor="swap" quote="x" lhs="lambert(id1)" rhs="ogf(d)"
  reading1.lhs="lambert(one)" expected=erratum
[Z2] anchor="bad" quote="x" lhs="q" rhs="q^2" expected=unresolved
)cat";

}  // namespace

TEST_CASE("parser round-trips random expressions") {
  std::mt19937 rng(77);
  for (int t = 0; t < 300; ++t) {
    const std::string text = random_expr(rng, 4);
    CAPTURE(text);
    const NodePtr e = parse(text);
    const std::string printed = to_string(*e);
    const NodePtr back = parse(printed);
    CHECK(*e == *back);
    CHECK(to_string(*back) == printed);
  }
}

TEST_CASE("operator precedence and associativity") {
  CHECK(to_string(*parse("1 - (2 - 3)")) == "1 - (2 - 3)");
  CHECK(to_string(*parse("(1 - 2) - 3")) == "1 - 2 - 3");
  CHECK(to_string(*parse("2^(3^2)")) == "2^3^2");
  CHECK(to_string(*parse("(2^3)^2")) == "(2^3)^2");
  CHECK(evaluate("2^3^2", 0).base[0] == ExactValue(512));
  CHECK(evaluate("-2^2", 0).base[0] == ExactValue(-4));
  CHECK(evaluate("6/4", 0).base[0] == ExactValue(Rational(3, 2)));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse("1 + (2 *");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 9);
  }
  CHECK_THROWS_AS(parse("nosuch(1)"), ParseError);
  CHECK_THROWS_AS(parse("gcd(1)"), ParseError);
  CHECK_THROWS_AS(parse("1 $ 2"), ParseError);
  CHECK_THROWS_AS(parse("sum(1, 1, 2, 3)"), ParseError);
}

TEST_CASE("evaluation") {
  CHECK(to_string(evaluate("lambert(mu)", 10).base) == "q + O(q^11)");
  CHECK(evaluate("lambert(mangoldt)", 12).base[12] == ExactValue::log_of(Rational(12)));
  const QSeries lq = evaluate("logq*q", 5);
  CHECK_FALSE(lq.log_free());
  CHECK(evaluate("logq - logq", 5).log_free());
  CHECK_THROWS_AS(evaluate("1/q", 5), DomainError);
  CHECK_THROWS(evaluate("at(mu, 0)", 5));
  CHECK_THROWS_AS(evaluate("lambert(phi, 2)", 5), EvalError);
  // Bound variables shadow builtins.
  CHECK(evaluate("sum(d, 1, 3, d)", 0).base[0] == ExactValue(6));
}

TEST_CASE("catalog format") {
  const Catalog c = parse_catalog(kSmall);
  REQUIRE(c.records.size() == 3);
  CHECK(c.records[0].order == 30);
  CHECK(c.records[1].order == 40);
  CHECK(c.records[1].readings.size() == 1);
  CHECK(c.records[1].readings[0].rhs.empty());
  CHECK(c.find("Z2")->expected == Status::unresolved);
  CHECK(c.find("nope") == nullptr);

  const Catalog esc =
      parse_catalog(R"cat([E1] quote="a \"b\" \frac \\ c" lhs="q" rhs="q" expected=verified # tail)cat");
  CHECK(esc.records[0].quote == R"(a "b" \frac \ c)");

  auto error_line = [](const std::string& text) {
    try {
      parse_catalog(text);
    } catch (const CatalogError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(error_line("[A] lhs=\"q\" rhs=\"q\" expected=verified\n[A] lhs=\"q\" rhs=\"q\" expected=verified") ==
        2);
  CHECK(error_line("[A] lhs=\"q\" rhs=\"q\"\n  expected=maybe") == 2);
  CHECK(error_line("[A] lhs=\"q\" rhs=\"q\" order=0 expected=verified") == 1);
  CHECK(error_line("[A] lhs=\"q\" rhs=\"q\" colour=\"x\" expected=verified") == 1);
  CHECK(error_line("[A] lhs=\"q\" rhs=\"q\" reading2.lhs=\"q\" expected=verified") == 1);
  CHECK(error_line("[A] lhs=\"q\" expected=verified") == 1);
  CHECK(error_line("[A] lhs=\"q\" rhs=\"q\"") == 1);
  CHECK(error_line("\n\n[A] lhs=\"q +\" rhs=\"q\" expected=verified") == 3);
  CHECK(error_line("[A] lhs=\"q") == 1);
  CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.cat"), CatalogError);
}

TEST_CASE("natural ordering of ids") {
  CHECK(natural_less("C2", "C10"));
  CHECK_FALSE(natural_less("C10", "C2"));
  CHECK(natural_less("C8", "C8b"));
  CHECK(natural_less("C10", "D1"));
  CHECK(natural_less("M3", "MT1"));
  CHECK_FALSE(natural_less("A1", "A1"));
}

TEST_CASE("shipped catalog quotes occur in the source text") {
  const Catalog cat = load_catalog(source_dir / "catalog/identities.cat");
  CHECK(cat.records.size() >= 100);
  const auto problems = lint_quotes(cat, slurp(source_dir / "paper.md"));
  for (const auto& p : problems) FAIL_CHECK(p);
  const auto broken = lint_quotes(parse_catalog(kSmall), "nothing here");
  CHECK(broken.size() == 3);
}

TEST_CASE("verification semantics") {
  const Catalog c = parse_catalog(kSmall);
  const auto report = verify_all(c);
  REQUIRE(report.results.size() == 3);
  CHECK(report.as_expected());
  const auto& c2 = report.results[0];
  CHECK(c2.status == Status::verified);
  CHECK(c2.order == 30);
  const auto& z1 = report.results[1];
  CHECK(z1.status == Status::erratum);
  CHECK(z1.reading == std::optional<std::size_t>(1));
  REQUIRE(z1.mismatch.has_value());
  // lambert(id1) = sum sigma_1 q^n and ogf(d) first differ at q^2: 3 vs 2.
  CHECK(z1.mismatch->index == 2);
  CHECK(z1.mismatch->lhs == "3");
  CHECK(z1.mismatch->rhs == "2");
  CHECK(report.results[2].status == Status::unresolved);
  CHECK(report.count(Status::erratum) == 1);

  CHECK(verify_all(Catalog{}).results.empty());
  CHECK(verify_all(Catalog{}).as_expected());
  CHECK(verify_all(c, 10).results[0].order == 10);
  CHECK(verify_all(c, std::nullopt, std::string("Z2")).results.size() == 1);

  // Flipping any expected status breaks the run.
  for (std::size_t i = 0; i < c.records.size(); ++i) {
    for (Status s : {Status::verified, Status::erratum, Status::unresolved}) {
      if (s == c.records[i].expected) continue;
      Catalog flipped = c;
      flipped.records[i].expected = s;
      CHECK_FALSE(verify_all(flipped).as_expected());
    }
  }
}

TEST_CASE("evaluation errors become unresolved records") {
  const Catalog c = parse_catalog(R"cat(
[E1] lhs="at(mu, 0)" rhs="q" reading1.lhs="q" expected=unresolved
[E2] lhs="logq" rhs="0" expected=unresolved
)cat");
  const auto r = verify_all(c);
  CHECK(r.results[0].status == Status::unresolved);
  CHECK(r.results[0].message.find("reading 1 holds") != std::string::npos);
  CHECK(r.results[1].message.find("log(q)") != std::string::npos);
}

TEST_CASE("mixed orders report the compared order") {
  const Comparison c = compare("deriv(q^3/(1 - q), 1)", "deriv(q^3/(1 - q), 1)", 20);
  CHECK(c.order == 19);
  CHECK_FALSE(c.mismatch.has_value());
}

TEST_CASE("worker count does not change the report") {
  const Catalog cat = load_catalog(source_dir / "catalog/identities.cat");
  Catalog part;
  for (const auto& r : cat.records) {
    if (r.order <= 40) part.records.push_back(r);
  }
  const auto one = render(verify_all(part, 20, std::nullopt, 1), ReportFormat::json);
  const auto four = render(verify_all(part, 20, std::nullopt, 4), ReportFormat::json);
  auto strip_ms = [](const std::string& text) {
    auto j = nlohmann::json::parse(text);
    for (auto& row : j) row.erase("ms");
    return j;
  };
  CHECK(strip_ms(one) == strip_ms(four));
}

TEST_CASE("report rendering") {
  const auto report = verify_all(parse_catalog(kSmall));
  const auto j = nlohmann::json::parse(render(report, ReportFormat::json));
  REQUIRE(j.size() == 3);
  std::vector<std::string> keys;
  for (auto it = j[1].begin(); it != j[1].end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  CHECK(keys == std::vector<std::string>{"id", "mismatch_index", "mismatch_lhs", "mismatch_rhs", "ms",
                                         "order", "reading", "status"});
  CHECK(j[1]["status"] == "erratum");
  CHECK(j[1]["mismatch_index"] == 2);
  CHECK(j[0]["mismatch_index"].is_null());
  const std::string table = render(report, ReportFormat::table);
  CHECK(table.find("3 records: 1 verified, 1 erratum, 1 unresolved") != std::string::npos);
  const std::string md = render(report, ReportFormat::md);
  CHECK(md.rfind("| id | status |", 0) == 0);
  CHECK(parse_format("json") == std::optional(ReportFormat::json));
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("bench strategies agree") {
  const auto a = divisor_sums_naive(2000);
  CHECK(a == divisor_sums_sieve(2000));
  CHECK(a == divisor_sums_pentagonal(2000));
  CHECK(a[12] == 28);
  const auto rows = bench({500, naive_cap + 1});
  CHECK(rows[0].naive_ms.has_value());
  CHECK_FALSE(rows[1].naive_ms.has_value());
  CHECK(rows[1].agree);
}

TEST_CASE("command line interface") {
  const auto small = write_temp("small.cat", kSmall);
  CHECK(run_cli("coeff 'lambert(phi)' 5").out == "5\n");
  CHECK(run_cli("coeff 'ogf(fn(m, log(m)))' 6").out == "0 + (1)*log(2) + (1)*log(3)\n");
  CHECK(run_cli("coeff '1/3 + log(8)' 0").out == "1/3 + (3)*log(2)\n");
  CHECK(run_cli("series 'q/(1-q)^2' --order 3").out == "q + 2*q^2 + 3*q^3 + O(q^4)\n");
  CHECK(run_cli("verify --catalog " + small.string()).code == 0);
  CHECK(run_cli("verify --catalog " + small.string() + " --id Z1").code == 0);
  CHECK(run_cli("report --format json --catalog " + small.string()).code == 0);

  std::string flipped = kSmall;
  flipped.replace(flipped.find("expected=unresolved"), 19, "expected=verified");
  CHECK(run_cli("verify --catalog " + write_temp("flipped.cat", flipped).string()).code == 1);

  CHECK(run_cli("coeff 'q^(' 2").code == 2);
  CHECK(run_cli("verify --catalog /nonexistent/x.cat").code == 2);
  CHECK(run_cli("verify --catalog " + small.string() + " --id NOPE").code == 2);
  CHECK(run_cli("verify --catalog " + write_temp("bad.cat", "[A] lhs=\"q\"").string()).code == 2);
  CHECK(run_cli("report --format xml").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("--help").code == 0);
}
