#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lamcat::harness {

enum class Status { verified, erratum, unresolved };

std::string_view to_string(Status s);
std::optional<Status> parse_status(std::string_view text);

/// Alternative reading of a record; an empty side means "as printed".
struct Reading {
  std::string lhs;
  std::string rhs;
};

struct IdentityRecord {
  std::string id;
  std::string anchor;
  std::string quote;
  std::string lhs;
  std::string rhs;
  std::string note;
  std::size_t order = 40;
  std::vector<Reading> readings;
  Status expected = Status::verified;
  int line = 0;
};

/// Malformed or unreadable catalog.  I/O failures carry line 0.
class CatalogError : public std::runtime_error {
 public:
  CatalogError(const std::string& what, int line);
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

struct Catalog {
  std::vector<IdentityRecord> records;

  [[nodiscard]] const IdentityRecord* find(std::string_view id) const;
};

/// Parses the block format
///
///     [C1] anchor="..." quote="..." order=40
///          lhs="..." rhs="..." reading1.rhs="..." expected=verified
///
/// `#` starts a comment outside quoted strings.  Inside them `\"` and `\\`
/// are escapes and any other backslash is literal, so TeX needs no doubling.
/// Every expression is parsed, so a catalog that loads is well formed.
Catalog parse_catalog(std::string_view text);
Catalog load_catalog(const std::filesystem::path& path);

/// Records whose quote is missing or does not occur in `source` (whitespace
/// runs compare equal).  Each entry is "ID: reason".
std::vector<std::string> lint_quotes(const Catalog& catalog, std::string_view source);

/// Orders "C2" < "C10" < "MT1"; a trailing suffix sorts after the bare id.
bool natural_less(std::string_view a, std::string_view b);

}  // namespace lamcat::harness
