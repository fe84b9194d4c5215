#include "lamcat/harness/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "lamcat/harness/expr.hpp"

namespace lamcat::harness {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified:
      return "verified";
    case Status::erratum:
      return "erratum";
    case Status::unresolved:
      return "unresolved";
  }
  return "unresolved";
}

std::optional<Status> parse_status(std::string_view text) {
  if (text == "verified") return Status::verified;
  if (text == "erratum") return Status::erratum;
  if (text == "unresolved") return Status::unresolved;
  return std::nullopt;
}

CatalogError::CatalogError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "catalog line " + std::to_string(line) + ": " + what : what), line_(line) {}

const IdentityRecord* Catalog::find(std::string_view id) const {
  for (const auto& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Catalog run() {
    Catalog cat;
    std::set<std::string> seen;
    skip();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '[') fail("expected '[id]'");
      IdentityRecord r = record();
      if (!seen.insert(r.id).second) throw CatalogError("duplicate id " + r.id, r.line);
      cat.records.push_back(std::move(r));
    }
    return cat;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw CatalogError(msg, line_); }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  }

  std::string word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && word_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a key or value");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string quoted() {
    ++pos_;
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated string");
      const char c = text_[pos_++];
      if (c == '"') return out;
      if (c == '\n') ++line_;
      if (c == '\\' && pos_ < text_.size() && (text_[pos_] == '"' || text_[pos_] == '\\')) {
        out += text_[pos_++];
      } else {
        out += c;
      }
    }
  }

  IdentityRecord record() {
    IdentityRecord r;
    r.line = line_;
    ++pos_;
    r.id = word();
    if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']' after id");
    ++pos_;
    bool has_order = false;
    bool has_expected = false;
    skip();
    while (pos_ < text_.size() && text_[pos_] != '[') {
      const int key_line = line_;
      const std::string key = word();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != '=') fail("expected '=' after " + key);
      ++pos_;
      skip();
      if (pos_ >= text_.size()) fail("missing value for " + key);
      const std::string value = text_[pos_] == '"' ? quoted() : word();
      skip();
      assign(r, key, value, key_line, has_order, has_expected);
    }
    check(r, has_expected);
    return r;
  }

  static void assign(IdentityRecord& r, const std::string& key, const std::string& value, int line,
                     bool& has_order, bool& has_expected) {
    if (key == "anchor") {
      r.anchor = value;
    } else if (key == "quote") {
      r.quote = value;
    } else if (key == "lhs") {
      r.lhs = value;
    } else if (key == "rhs") {
      r.rhs = value;
    } else if (key == "note") {
      r.note = value;
    } else if (key == "order") {
      std::size_t used = 0;
      long n = 0;
      try {
        n = std::stol(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size() || n < 1)
        throw CatalogError(r.id + ": order must be a positive integer", line);
      r.order = static_cast<std::size_t>(n);
      has_order = true;
    } else if (key == "expected") {
      const auto s = parse_status(value);
      if (!s) throw CatalogError(r.id + ": unknown status '" + value + "'", line);
      r.expected = *s;
      has_expected = true;
    } else if (key.rfind("reading", 0) == 0) {
      const std::size_t dot = key.find('.');
      const std::string num = key.substr(7, dot == std::string::npos ? std::string::npos : dot - 7);
      const std::string side = dot == std::string::npos ? "" : key.substr(dot + 1);
      if (num.empty() ||
          !std::all_of(num.begin(), num.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
          (side != "lhs" && side != "rhs")) {
        throw CatalogError(r.id + ": malformed key '" + key + "'", line);
      }
      const std::size_t k = std::stoul(num);
      if (k < 1 || k > r.readings.size() + 1) {
        throw CatalogError(r.id + ": readings must be numbered 1, 2, ... in order", line);
      }
      if (k == r.readings.size() + 1) r.readings.emplace_back();
      (side == "lhs" ? r.readings[k - 1].lhs : r.readings[k - 1].rhs) = value;
    } else {
      throw CatalogError(r.id + ": unknown key '" + key + "'", line);
    }
  }

  static void check_expr(const IdentityRecord& r, const std::string& what, const std::string& text) {
    try {
      (void)parse(text);
    } catch (const ParseError& e) {
      throw CatalogError(r.id + " " + what + ": " + e.what(), r.line);
    }
  }

  static void check(const IdentityRecord& r, bool has_expected) {
    if (r.lhs.empty() || r.rhs.empty()) throw CatalogError(r.id + ": lhs and rhs are required", r.line);
    if (!has_expected) throw CatalogError(r.id + ": expected status is required", r.line);
    check_expr(r, "lhs", r.lhs);
    check_expr(r, "rhs", r.rhs);
    for (std::size_t k = 0; k < r.readings.size(); ++k) {
      const std::string tag = "reading" + std::to_string(k + 1);
      if (!r.readings[k].lhs.empty()) check_expr(r, tag + ".lhs", r.readings[k].lhs);
      if (!r.readings[k].rhs.empty()) check_expr(r, tag + ".rhs", r.readings[k].rhs);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

std::string squash(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

}  // namespace

Catalog parse_catalog(std::string_view text) { return Reader(text).run(); }

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

std::vector<std::string> lint_quotes(const Catalog& catalog, std::string_view source) {
  const std::string hay = squash(source);
  std::vector<std::string> out;
  for (const auto& r : catalog.records) {
    if (r.anchor.empty()) out.push_back(r.id + ": missing anchor");
    if (r.quote.empty()) {
      out.push_back(r.id + ": missing quote");
    } else if (hay.find(squash(r.quote)) == std::string::npos) {
      out.push_back(r.id + ": quote not found verbatim");
    }
  }
  return out;
}

bool natural_less(std::string_view a, std::string_view b) {
  auto split = [](std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    const unsigned long num = i == j ? 0 : std::stoul(std::string(s.substr(i, j - i)));
    return std::tuple(s.substr(0, i), num, s.substr(j));
  };
  return split(a) < split(b);
}

}  // namespace lamcat::harness
