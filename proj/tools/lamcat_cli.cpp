#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lamcat/harness/bench.hpp"
#include "lamcat/harness/catalog.hpp"
#include "lamcat/harness/eval.hpp"
#include "lamcat/harness/verify.hpp"

using namespace lamcat;
using namespace lamcat::harness;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;

std::string with_log_q(const ExactValue& base, const ExactValue* logq) {
  if (logq == nullptr || logq->is_zero()) return base.to_string();
  return base.to_string() + " + (" + logq->to_string() + ")*log(q)";
}

int run_coeff(const std::string& expr, std::size_t n) {
  const QSeries s = evaluate(expr, n);
  if (n > s.order()) {
    std::cerr << "error: expression is only defined to order " << s.order() << "\n";
    return exit_input;
  }
  const ExactValue* l = s.logq ? &(*s.logq)[n] : nullptr;
  std::cout << with_log_q(s.base[n], l) << "\n";
  return exit_ok;
}

int run_series(const std::string& expr, std::size_t order) {
  const QSeries s = evaluate(expr, order);
  std::cout << to_string(s.base);
  if (!s.log_free()) std::cout << " + (" << to_string(*s.logq) << ")*log(q)";
  std::cout << "\n";
  return exit_ok;
}

int run_verify(const std::string& path, const std::string& id, std::size_t order, ReportFormat format) {
  const Catalog cat = load_catalog(path);
  if (!id.empty() && cat.find(id) == nullptr) {
    std::cerr << "error: no record " << id << " in " << path << "\n";
    return exit_input;
  }
  const VerificationReport report = verify_all(cat, order == 0 ? std::nullopt : std::optional(order),
                                               id.empty() ? std::nullopt : std::optional(id));
  std::cout << render(report, format);
  return report.as_expected() ? exit_ok : exit_mismatch;
}

int run_bench(const std::vector<std::size_t>& sizes) {
  const std::vector<BenchRow> rows = bench(sizes);
  std::cout << std::left << std::setw(10) << "N" << std::setw(14) << "naive_ms" << std::setw(14) << "sieve_ms"
            << std::setw(16) << "pentagonal_ms"
            << "agree\n";
  bool all = true;
  for (const auto& r : rows) {
    std::ostringstream naive;
    if (r.naive_ms) {
      naive << std::fixed << std::setprecision(2) << *r.naive_ms;
    } else {
      naive << "skipped";
    }
    std::cout << std::setw(10) << r.n << std::setw(14) << naive.str() << std::setw(14) << std::fixed
              << std::setprecision(2) << r.sieve_ms << std::setw(16) << r.pentagonal_ms
              << (r.agree ? "yes" : "NO") << "\n";
    all = all && r.agree;
  }
  if (rows.size() != sizes.size() ||
      std::any_of(rows.begin(), rows.end(), [](const BenchRow& r) { return !r.naive_ms; })) {
    std::cout << "naive strategy skipped above N = " << naive_cap << "\n";
  }
  return all ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambert series identity toolkit"};
  app.require_subcommand(1);

  std::string expr;
  std::size_t n = 0;
  auto* coeff = app.add_subcommand("coeff", "exact coefficient of q^n");
  coeff->add_option("expr", expr, "series expression")->required();
  coeff->add_option("n", n, "coefficient index")->required();

  std::size_t order = 20;
  auto* series = app.add_subcommand("series", "truncated expansion");
  series->add_option("expr", expr, "series expression")->required();
  series->add_option("--order", order, "truncation order")->check(CLI::PositiveNumber);

  std::string catalog = "catalog/identities.cat";
  std::string id;
  std::size_t verify_order = 0;
  auto* verify = app.add_subcommand("verify", "adjudicate catalog records");
  verify->add_option("--id", id, "single record id");
  verify->add_option("--order", verify_order, "override every record's order")->check(CLI::PositiveNumber);
  verify->add_option("--catalog", catalog, "catalog path");

  std::string format = "table";
  auto* report = app.add_subcommand("report", "adjudication report for the whole catalog");
  report->add_option("--format", format, "table, json or md")->check(CLI::IsMember({"table", "json", "md"}));
  report->add_option("--order", verify_order, "override every record's order")->check(CLI::PositiveNumber);
  report->add_option("--catalog", catalog, "catalog path");

  std::vector<std::size_t> sizes = {1000, 10000, 100000};
  auto* bench_cmd = app.add_subcommand("bench", "time three (f*1)(n) strategies");
  bench_cmd->add_option("--sizes", sizes, "comma-separated N values")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*coeff) return run_coeff(expr, n);
    if (*series) return run_series(expr, order);
    if (*verify) return run_verify(catalog, id, verify_order, ReportFormat::table);
    if (*report) return run_verify(catalog, "", verify_order, *parse_format(format));
    if (*bench_cmd) return run_bench(sizes);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_ok;
}
