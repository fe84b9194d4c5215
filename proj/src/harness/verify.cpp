#include "lamcat/harness/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "lamcat/harness/eval.hpp"

namespace lamcat::harness {

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const RecordResult& r) { return r.status == s; }));
}

bool VerificationReport::as_expected() const {
  return std::all_of(results.begin(), results.end(), [](const RecordResult& r) { return r.as_expected(); });
}

Comparison compare(std::string_view lhs, std::string_view rhs, std::size_t order) {
  const QSeries a = evaluate(lhs, order);
  const QSeries b = evaluate(rhs, order);
  Comparison out;
  out.order = std::min(a.order(), b.order());
  if (a.logq || b.logq) {
    const TruncatedSeries la = a.logq ? *a.logq : TruncatedSeries(out.order);
    const TruncatedSeries lb = b.logq ? *b.logq : TruncatedSeries(out.order);
    if (!(la - lb).is_zero()) throw EvalError("log(q) component does not cancel");
  }
  for (std::size_t n = 0; n <= out.order; ++n) {
    if (a.base[n] != b.base[n]) {
      out.mismatch = Mismatch{n, a.base[n].to_string(), b.base[n].to_string()};
      break;
    }
  }
  return out;
}

RecordResult verify(const IdentityRecord& record, std::optional<std::size_t> order) {
  const auto start = std::chrono::steady_clock::now();
  RecordResult res;
  res.id = record.id;
  res.expected = record.expected;
  res.order = order.value_or(record.order);
  const std::size_t n = res.order;

  auto finish = [&] {
    res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
  };
  auto reading_side = [](const std::string& alt, const std::string& printed) {
    return alt.empty() ? printed : alt;
  };

  Comparison printed;
  try {
    printed = compare(record.lhs, record.rhs, n);
  } catch (const std::exception& e) {
    res.status = Status::unresolved;
    res.message = e.what();
    for (std::size_t k = 0; k < record.readings.size(); ++k) {
      try {
        const Comparison c = compare(reading_side(record.readings[k].lhs, record.lhs),
                                     reading_side(record.readings[k].rhs, record.rhs), n);
        if (!c.mismatch) {
          res.message += "; reading " + std::to_string(k + 1) + " holds";
          break;
        }
      } catch (const std::exception&) {
      }
    }
    return finish();
  }
  res.order = printed.order;
  if (!printed.mismatch) {
    res.status = Status::verified;
    return finish();
  }
  res.mismatch = printed.mismatch;
  for (std::size_t k = 0; k < record.readings.size(); ++k) {
    try {
      const Comparison c = compare(reading_side(record.readings[k].lhs, record.lhs),
                                   reading_side(record.readings[k].rhs, record.rhs), n);
      if (!c.mismatch) {
        res.status = Status::erratum;
        res.reading = k + 1;
        return finish();
      }
    } catch (const std::exception& e) {
      if (!res.message.empty()) res.message += "; ";
      res.message += "reading " + std::to_string(k + 1) + ": " + e.what();
    }
  }
  res.status = Status::unresolved;
  return finish();
}

VerificationReport verify_all(const Catalog& catalog, std::optional<std::size_t> order,
                              std::optional<std::string> id, std::size_t threads) {
  std::vector<const IdentityRecord*> picked;
  for (const auto& r : catalog.records) {
    if (!id || r.id == *id) picked.push_back(&r);
  }
  std::sort(picked.begin(), picked.end(),
            [](const IdentityRecord* a, const IdentityRecord* b) { return natural_less(a->id, b->id); });
  VerificationReport report;
  report.results.resize(picked.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < picked.size(); i = next++) report.results[i] = verify(*picked[i], order);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_threads = std::min(picked.size(), threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

std::optional<ReportFormat> parse_format(std::string_view text) {
  if (text == "table") return ReportFormat::table;
  if (text == "json") return ReportFormat::json;
  if (text == "md") return ReportFormat::md;
  return std::nullopt;
}

namespace {

std::string ms_text(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << ms;
  return os.str();
}

std::vector<std::string> cells(const RecordResult& r) {
  const bool m = r.mismatch.has_value();
  std::string status(to_string(r.status));
  if (!r.as_expected()) status += " (expected " + std::string(to_string(r.expected)) + ")";
  return {r.id,
          status,
          std::to_string(r.order),
          m ? std::to_string(r.mismatch->index) : "-",
          m ? r.mismatch->lhs : "-",
          m ? r.mismatch->rhs : "-",
          r.reading ? std::to_string(*r.reading) : "-",
          ms_text(r.ms)};
}

const std::vector<std::string>& headers() {
  static const std::vector<std::string> h = {"id",           "status",       "order",   "mismatch_index",
                                             "mismatch_lhs", "mismatch_rhs", "reading", "ms"};
  return h;
}

std::string summary(const VerificationReport& report) {
  std::ostringstream os;
  os << report.results.size() << " records: " << report.count(Status::verified) << " verified, "
     << report.count(Status::erratum) << " erratum, " << report.count(Status::unresolved) << " unresolved";
  const auto off = static_cast<std::size_t>(std::count_if(
      report.results.begin(), report.results.end(), [](const RecordResult& r) { return !r.as_expected(); }));
  if (off > 0) os << "; " << off << " differ from expected";
  return os.str();
}

std::string table(const VerificationReport& report) {
  std::vector<std::vector<std::string>> rows = {headers()};
  for (const auto& r : report.results) rows.push_back(cells(r));
  std::vector<std::size_t> width(headers().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << row[i];
      if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << '\n';
  }
  for (const auto& r : report.results) {
    if (!r.message.empty()) os << r.id << ": " << r.message << '\n';
  }
  os << summary(report) << '\n';
  return os.str();
}

std::string markdown(const VerificationReport& report) {
  std::ostringstream os;
  auto line = [&os](const std::vector<std::string>& row) {
    os << '|';
    for (const auto& c : row) os << ' ' << c << " |";
    os << '\n';
  };
  line(headers());
  line(std::vector<std::string>(headers().size(), "---"));
  for (const auto& r : report.results) line(cells(r));
  os << '\n' << summary(report) << '\n';
  return os.str();
}

std::string json(const VerificationReport& report) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json o;
    o["id"] = r.id;
    o["status"] = std::string(to_string(r.status));
    o["order"] = r.order;
    if (r.mismatch) {
      o["mismatch_index"] = r.mismatch->index;
      o["mismatch_lhs"] = r.mismatch->lhs;
      o["mismatch_rhs"] = r.mismatch->rhs;
    } else {
      o["mismatch_index"] = nullptr;
      o["mismatch_lhs"] = nullptr;
      o["mismatch_rhs"] = nullptr;
    }
    o["reading"] = r.reading ? nlohmann::ordered_json(*r.reading) : nlohmann::ordered_json(nullptr);
    o["ms"] = std::round(r.ms * 10) / 10;
    out.push_back(std::move(o));
  }
  return out.dump(2) + "\n";
}

}  // namespace

std::string render(const VerificationReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::table:
      return table(report);
    case ReportFormat::json:
      return json(report);
    case ReportFormat::md:
      return markdown(report);
  }
  return table(report);
}

}  // namespace lamcat::harness
