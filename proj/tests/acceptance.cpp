// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "lamcat/arith.hpp"
#include "lamcat/factorization.hpp"
#include "lamcat/harness/bench.hpp"
#include "lamcat/harness/catalog.hpp"
#include "lamcat/harness/eval.hpp"
#include "lamcat/harness/verify.hpp"
#include "lamcat/lambert.hpp"
#include "lamcat/special_sums.hpp"
#include "oracles.hpp"

using namespace lamcat;
using namespace lamcat::harness;

namespace {

// Pinned limits.
constexpr double kClassicalSeconds = 10.0;
constexpr double kMockThetaSeconds = 30.0;
constexpr double kSieveSeconds = 1.0;
constexpr std::size_t kClassicalOrder = 100;
constexpr std::size_t kMockThetaOrder = 30;

const std::filesystem::path catalog_path =
    std::filesystem::path(LAMCAT_SOURCE_DIR) / "catalog/identities.cat";

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

int run_cli(const std::string& args) {
  const std::string cmd = std::string(LAMCAT_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool equal_to(const std::string& lhs, const std::string& rhs, std::size_t order) {
  try {
    return !compare(lhs, rhs, order).mismatch.has_value();
  } catch (const std::exception&) {
    return false;
  }
}

Outcome classical(const Catalog& cat) {
  Outcome out;
  const auto start = Clock::now();
  for (const char* id : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C8b", "C9", "C10"}) {
    const IdentityRecord* r = cat.find(id);
    if (r == nullptr) {
      out.require(false, std::string(id) + " missing");
      continue;
    }
    out.require(equal_to(r->lhs, r->rhs, kClassicalOrder), std::string(id) + " differs");
  }
  for (int a = 1; a <= 3; ++a) {
    const std::string s = std::to_string(a);
    out.require(equal_to("lambert(id" + s + ")", "ogf(sigma" + s + ")", kClassicalOrder), "Id_" + s);
    out.require(equal_to("lambert(jordan" + s + ")", "ogf(fn(m, m^" + s + "))", kClassicalOrder), "J_" + s);
  }
  const double t = seconds_since(start);
  out.require(t < kClassicalSeconds, "took " + std::to_string(t) + " s");
  if (out.pass) out.detail = std::to_string(t) + " s";
  return out;
}

Outcome factorization() {
  Outcome out;
  const auto s = s_triangle(Sign::minus, 30);
  const auto inv = s_inverse_closed(30);
  const RationalMatrix prod = s.matrix() * inv.matrix();
  bool identity = true;
  for (Eigen::Index i = 0; i < prod.rows(); ++i) {
    for (Eigen::Index j = 0; j < prod.cols(); ++j) identity &= prod(i, j) == Rational(i == j ? 1 : 0);
  }
  out.require(identity, "s * s^-1 != I at N = 30");

  const auto sigma1 = builtin("sigma1");
  const auto id1 = builtin("id1");
  for (std::size_t n = 1; n <= 100; ++n) {
    if (pentagonal_recurrence(id1, n - 1) != sigma1(n)) {
      out.require(false, "pentagonal recurrence at n = " + std::to_string(n));
      break;
    }
  }

  for (auto kind : {TriangleKind::generalized_distinct, TriangleKind::generalized_unrestricted}) {
    const auto st = s_triangle(kind, 2, 1, 24);
    const auto c = triangle_c(kind, 2, 1, 24);
    for (const char* name : {"one", "mu", "id1"}) {
      LambertSpec spec(builtin(name));
      spec.alpha = 2;
      spec.beta = 1;
      out.require(factorization_expansion(st, c, SequenceWindow::tabulate(spec.f, 24)) == series(spec, 24),
                  "(2, 1) " + to_string(kind) + " for " + name);
    }
  }
  return out;
}

Outcome oracles(const Catalog& cat) {
  Outcome out;
  std::size_t specs = 0;
  for (const auto& r : cat.records) {
    std::vector<std::string> sides{r.lhs, r.rhs};
    for (const auto& reading : r.readings) {
      sides.push_back(reading.lhs);
      sides.push_back(reading.rhs);
    }
    Evaluator ev(r.order);
    ev.on_lambert = [&](const LambertSpec& spec) {
      ++specs;
      const auto s = series(spec, r.order);
      for (std::size_t n = 1; n <= r.order; ++n) {
        if (coefficient(spec, n) != s[n]) {
          out.require(false, r.id + " at q^" + std::to_string(n));
          return;
        }
      }
    };
    for (const auto& side : sides) {
      if (side.empty()) continue;
      try {
        ev.eval_series(*parse(side));
      } catch (const std::exception&) {
        // Records that fail to evaluate are unresolved by design; the specs
        // expanded before the failure were still checked.
      }
    }
  }

  const auto s = s_triangle(Sign::minus, 18);
  for (long n = 1; n <= 18; ++n) {
    for (long k = 1; k <= n; ++k) {
      long expect = 0;
      for (long j = 1; j * k <= n; ++j) expect += oracle::signed_distinct(n - j * k);
      if (s(n, k) != Rational(expect))
        out.require(false, "s_{" + std::to_string(n) + "," + std::to_string(k) + "}");
    }
  }
  for (long n = 0; n <= 40; ++n) {
    if (partition_p(n) != oracle::count_partitions(n, n)) out.require(false, "p(" + std::to_string(n) + ")");
  }
  for (std::uint64_t n = 1; n <= 200; ++n) {
    if (r2(n) != oracle::lattice_count(static_cast<long>(n)))
      out.require(false, "r2(" + std::to_string(n) + ")");
  }
  out.require(specs > 0, "no Lambert specs found");
  if (out.pass) out.detail = std::to_string(specs) + " Lambert specs";
  return out;
}

Outcome apostol_gcd_lcm() {
  Outcome out;
  struct Triple {
    const char* f;
    const char* g;
    std::uint64_t m;
  };
  const Triple triples[] = {{"id1", "mu", 6}, {"phi", "d", 12}, {"one", "id1", 4}, {"phi", "one", 6}};
  int s1 = 0;
  int s2 = 0;
  for (const auto& t : triples) {
    s1 += apostol_lambert_check({ApostolVariant::s1, builtin(t.f), builtin(t.g), t.m}, 40).holds();
    s2 += apostol_lambert_check({ApostolVariant::s2, builtin(t.f), builtin(t.g), t.m}, 40).holds();
  }
  out.require(s1 >= 3, "S1 holds for " + std::to_string(s1) + "/4 triples");
  out.require(s2 >= 3, "S2 holds for " + std::to_string(s2) + "/4 triples");

  for (unsigned a = 0; a <= 3; ++a) {
    for (std::uint64_t m = 1; m <= 30; ++m) {
      for (std::uint64_t n = 1; n <= 30; ++n) {
        Integer rhs = 0;
        for (std::uint64_t d = 1; d <= std::gcd(m, n); ++d) {
          if (std::gcd(m, n) % d == 0)
            rhs += boost::multiprecision::pow(Integer(d), a) * divisor_sigma(a, m * n / (d * d));
        }
        if (divisor_sigma(a, m) * divisor_sigma(a, n) != rhs) {
          out.require(false, "Hecke sigma_" + std::to_string(a) + " at " + std::to_string(m) + "," +
                                 std::to_string(n));
        }
      }
    }
  }
  for (std::uint64_t m = 1; m <= 12; ++m) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      Integer rhs = 0;
      for (std::uint64_t d = 1; d <= std::gcd(m, n); ++d) {
        if (std::gcd(m, n) % d == 0)
          rhs += boost::multiprecision::pow(Integer(d), 11) * ramanujan_tau(m * n / (d * d));
      }
      if (ramanujan_tau(m) * ramanujan_tau(n) != rhs) out.require(false, "Hecke tau");
    }
  }

  for (std::uint64_t a = 1; a <= 6; ++a) {
    const auto k = kamp_identities(a, 60);
    out.require(k.minus_holds, "Kamp minus identity at a = " + std::to_string(a));
    out.require(k.plus_holds, "Kamp plus identity at a = " + std::to_string(a));
  }
  out.require(lcm_identity_checks(40).printed_holds, "first LCM identity");
  return out;
}

Outcome mock_theta(const Catalog& cat) {
  Outcome out;
  const auto start = Clock::now();
  for (const char* id : {"MT1", "MT2", "MT3", "MT4", "MT5"}) {
    const IdentityRecord* r = cat.find(id);
    if (r == nullptr) {
      out.require(false, std::string(id) + " missing");
      continue;
    }
    try {
      const auto c = compare(r->lhs, r->rhs, kMockThetaOrder);
      if (c.mismatch)
        out.require(false, std::string(id) + " differs at q^" + std::to_string(c.mismatch->index));
    } catch (const std::exception& e) {
      out.require(false, std::string(id) + ": " + e.what());
    }
  }
  const double t = seconds_since(start);
  out.require(t < kMockThetaSeconds, "took " + std::to_string(t) + " s");
  return out;
}

Outcome adjudication(const Catalog& cat) {
  Outcome out;
  out.require(run_cli("verify --catalog " + catalog_path.string()) == 0, "shipped catalog does not exit 0");

  const auto report = verify_all(cat);
  out.require(report.as_expected(), "in-process run disagrees with the catalog");
  // A flip changes one expected status; the run fails exactly when that
  // record's computed status differs from the new expectation.
  for (const auto& r : report.results) {
    for (Status s : {Status::verified, Status::erratum, Status::unresolved}) {
      if (s != r.expected && s == r.status) out.require(false, "flipping " + r.id + " still passes");
    }
    if (r.status == Status::erratum && !r.mismatch) out.require(false, r.id + " lacks a mismatch");
  }

  // End-to-end flips through the CLI on the first, middle and last records.
  const std::string text = [] {
    std::ifstream in(catalog_path);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }();
  const auto tmp = std::filesystem::temp_directory_path() / "lamcat_acceptance_flip.cat";
  for (std::size_t i : {std::size_t{0}, cat.records.size() / 2, cat.records.size() - 1}) {
    const auto& rec = cat.records[i];
    const std::string header = "[" + rec.id + "]";
    const std::size_t at = text.find("expected=", text.find(header));
    const std::size_t end = text.find_first_of(" \n", at);
    const std::string flipped_status = rec.expected == Status::verified ? "unresolved" : "verified";
    std::string flipped = text;
    flipped.replace(at, end - at, "expected=" + flipped_status);
    std::ofstream(tmp) << flipped;
    out.require(run_cli("verify --catalog " + tmp.string()) == 1,
                "CLI flip of " + rec.id + " did not exit 1");
  }
  std::filesystem::remove(tmp);
  if (out.pass) {
    out.detail = std::to_string(report.count(Status::erratum)) + " errata with mismatches";
  }
  return out;
}

Outcome benchmark() {
  Outcome out;
  const auto naive = divisor_sums_naive(10000);
  out.require(naive == divisor_sums_sieve(10000), "sieve disagrees at N = 10^4");
  out.require(naive == divisor_sums_pentagonal(10000), "pentagonal disagrees at N = 10^4");
  const auto start = Clock::now();
  const auto sieve = divisor_sums_sieve(100000);
  const double t = seconds_since(start);
  out.require(sieve.size() == 100001 && sieve[100000] == 246078, "sigma_1(10^5)");
  out.require(t < kSieveSeconds, "sieve took " + std::to_string(t) + " s");
  if (out.pass) out.detail = "sieve to 10^5 in " + std::to_string(t) + " s";
  return out;
}

}  // namespace

int main() {
  const Catalog cat = load_catalog(catalog_path);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 classical listing to order 100 under 10 s", [&] { return classical(cat); }},
      {"2 factorization suite", factorization},
      {"3 oracle equivalences", [&] { return oracles(cat); }},
      {"4 Apostol, Hecke, Kamp, LCM", apostol_gcd_lcm},
      {"5 mock theta MT1-MT5 to order 30 under 30 s", [&] { return mock_theta(cat); }},
      {"6 adjudication integrity", [&] { return adjudication(cat); }},
      {"7 benchmark sanity", benchmark},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const Outcome o = run();
    all &= o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << '\n';
  }
  return all ? 0 : 1;
}
