#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lamcat/exact.hpp"

namespace lamcat::harness {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Expression AST.  Calls carry optional argument names for the `key=value`
/// form; positional arguments have an empty name.
struct Node {
  enum class Kind { number, ident, call, unary, binary };

  Kind kind = Kind::number;
  Integer number;
  std::string name;  // identifier or callee
  char op = 0;       // '+', '-', '*', '/', '^'
  std::vector<NodePtr> args;
  std::vector<std::string> arg_names;
  int line = 1;
  int col = 1;

  [[nodiscard]] const Node& arg(std::size_t i) const { return *args.at(i); }
};

/// Structural equality, ignoring source positions.
bool operator==(const Node& a, const Node& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int col);
  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Argument-count bounds of a callable name; max < 0 means variadic.
struct Arity {
  int min;
  int max;
  /// Leading argument that must be a bare identifier (bound variable or
  /// symbol); -1 for none.
  int binder = -1;
};

/// Arity of a builder, binding form or arithmetic function name.  Returns
/// nullptr for unknown names.
const Arity* lookup_arity(std::string_view name);

NodePtr parse(std::string_view text);

/// Minimal-parenthesis rendering; parse(to_string(e)) == e.
std::string to_string(const Node& e);

}  // namespace lamcat::harness
