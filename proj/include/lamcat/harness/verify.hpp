#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lamcat/harness/catalog.hpp"

namespace lamcat::harness {

struct Mismatch {
  std::size_t index = 0;
  std::string lhs;
  std::string rhs;
};

struct RecordResult {
  std::string id;
  Status status = Status::unresolved;
  Status expected = Status::verified;
  /// Order actually compared (mixed orders truncate to the minimum).
  std::size_t order = 0;
  std::optional<Mismatch> mismatch;
  /// 1-based index of the matching reading, for errata.
  std::optional<std::size_t> reading;
  std::string message;
  double ms = 0;

  [[nodiscard]] bool as_expected() const { return status == expected; }
};

struct VerificationReport {
  std::vector<RecordResult> results;

  [[nodiscard]] std::size_t count(Status s) const;
  [[nodiscard]] bool as_expected() const;
};

/// Result of comparing two expressions at one order.
struct Comparison {
  std::size_t order = 0;
  std::optional<Mismatch> mismatch;
};

/// Evaluates both sides; throws on parse or evaluation errors and when a
/// log(q) component survives the difference.
Comparison compare(std::string_view lhs, std::string_view rhs, std::size_t order);

RecordResult verify(const IdentityRecord& record, std::optional<std::size_t> order = std::nullopt);

/// Results in natural id order.  `id` restricts the run to one record.
/// Records are verified on `threads` workers (0: hardware concurrency); the
/// output does not depend on the worker count.
VerificationReport verify_all(const Catalog& catalog, std::optional<std::size_t> order = std::nullopt,
                              std::optional<std::string> id = std::nullopt, std::size_t threads = 0);

enum class ReportFormat { table, json, md };

std::optional<ReportFormat> parse_format(std::string_view text);
std::string render(const VerificationReport& report, ReportFormat format);

}  // namespace lamcat::harness
