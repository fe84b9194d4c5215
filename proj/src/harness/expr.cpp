#include "lamcat/harness/expr.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "lamcat/arith.hpp"

namespace lamcat::harness {

bool operator==(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  switch (a.kind) {
    case Node::Kind::number:
      if (a.number != b.number) return false;
      break;
    case Node::Kind::ident:
      if (a.name != b.name) return false;
      break;
    case Node::Kind::call:
      if (a.name != b.name || a.arg_names != b.arg_names) return false;
      break;
    case Node::Kind::unary:
    case Node::Kind::binary:
      if (a.op != b.op) return false;
      break;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!(*a.args[i] == *b.args[i])) return false;
  }
  return true;
}

ParseError::ParseError(const std::string& what, int line, int col)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
      line_(line),
      col_(col) {}

const Arity* lookup_arity(std::string_view name) {
  static const std::map<std::string, Arity, std::less<>> table = {
      // binding forms
      {"fn", {2, 2, 0}},
      {"sum", {4, 4, 0}},
      {"prod", {4, 4, 0}},
      {"divsum", {3, 3, 0}},
      {"primesum", {3, 3, 0}},
      {"primeprod", {3, 3, 0}},
      {"gf", {2, 2, 0}},
      {"bilateral", {5, 6, 0}},
      {"fourier", {3, 3, 0}},
      // symbol-taking builders
      {"facsum", {2, 4, 0}},
      {"mockeuler", {1, 1, 0}},
      {"mockbilateral", {1, 1, 0}},
      // series builders
      {"lambert", {1, 7}},
      {"modlambert", {1, 1}},
      {"powlambert", {2, 2}},
      {"ogf", {1, 1}},
      {"subst", {2, 2}},
      {"multisect", {3, 3}},
      {"log", {1, 1}},
      {"exp", {1, 1}},
      {"deriv", {2, 2}},
      {"etaq", {1, 1}},
      {"poch", {2, 3}},
      {"npoch", {2, 3}},
      {"jac", {2, 2}},
      {"theta3", {1, 1}},
      {"theta4", {1, 1}},
      {"theta2sq", {1, 1}},
      {"digamma", {2, 2}},
      {"sinvapply", {1, 1}},
      {"pairsum", {3, 3}},
      {"phitilde", {1, 1}},
      {"hadamard", {2, 2}},
      {"coeff", {2, 2}},
      // function algebra
      {"at", {2, 2}},
      {"conv", {2, -1}},
      {"dinv", {1, 1}},
      {"kfold", {2, 2}},
      // scalar helpers
      {"if", {3, 3}},
      {"sentry", {2, 2}},
      {"binom", {2, 2}},
      {"fact", {1, 1}},
      {"bern", {1, 1}},
      {"bernpoly", {2, 2}},
      {"stirling1", {2, 2}},
      {"stirling2", {2, 2}},
      {"gcd", {2, 2}},
      {"lcm", {2, 2}},
      {"mod", {2, 2}},
      {"floor", {1, 1}},
      {"isqrt", {1, 1}},
      {"abs", {1, 1}},
      {"even", {1, 1}},
      {"le", {2, 2}},
      {"divides", {2, 2}},
      {"partp", {1, 1}},
      {"rc", {2, 2}},
  };
  static const Arity unary_function{1, 1};
  if (const auto it = table.find(name); it != table.end()) return &it->second;
  if (is_builtin(name)) return &unary_function;
  return nullptr;
}

namespace {

struct Token {
  enum class Kind { end, integer, ident, punct };
  Kind kind = Kind::end;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::integer;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) take(t);
      if (pos_ < src_.size() &&
          (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.' || src_[pos_] == '_')) {
        throw ParseError("malformed literal '" + t.text + src_[pos_] + "'", t.line, t.col);
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        take(t);
      }
      return t;
    }
    if (std::string_view("()+-*/^,=").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::punct;
      take(t);
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.col);
  }

 private:
  void take(Token& t) {
    t.text += src_[pos_];
    advance();
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {
    cur_ = lex_.next();
    ahead_ = lex_.next();
  }

  NodePtr parse_all() {
    NodePtr e = expr();
    if (cur_.kind != Token::Kind::end) fail("unexpected '" + cur_.text + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, cur_.line, cur_.col); }

  bool is_punct(char c) const { return cur_.kind == Token::Kind::punct && cur_.text[0] == c; }

  Token shift() {
    Token t = cur_;
    cur_ = ahead_;
    ahead_ = lex_.next();
    return t;
  }

  void expect(char c) {
    if (!is_punct(c)) {
      fail(std::string("expected '") + c + "'" +
           (cur_.kind == Token::Kind::end ? " before end of input" : " near '" + cur_.text + "'"));
    }
    shift();
  }

  static std::shared_ptr<Node> make(Node::Kind kind, const Token& at) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->line = at.line;
    n->col = at.col;
    return n;
  }

  NodePtr binary(char op, const Token& at, NodePtr lhs, NodePtr rhs) {
    auto n = make(Node::Kind::binary, at);
    n->op = op;
    n->args = {std::move(lhs), std::move(rhs)};
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (is_punct('+') || is_punct('-')) {
      const Token t = shift();
      lhs = binary(t.text[0], t, lhs, term());
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (is_punct('*') || is_punct('/')) {
      const Token t = shift();
      lhs = binary(t.text[0], t, lhs, factor());
    }
    return lhs;
  }

  NodePtr factor() {
    if (is_punct('-')) {
      const Token t = shift();
      auto n = make(Node::Kind::unary, t);
      n->op = '-';
      n->args = {factor()};
      return n;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (is_punct('^')) {
      const Token t = shift();
      return binary('^', t, base, factor());
    }
    return base;
  }

  NodePtr primary() {
    const Token t = cur_;
    switch (t.kind) {
      case Token::Kind::integer: {
        shift();
        auto n = make(Node::Kind::number, t);
        n->number = Integer(t.text);
        return n;
      }
      case Token::Kind::ident:
        shift();
        if (is_punct('(')) return call(t);
        {
          auto n = make(Node::Kind::ident, t);
          n->name = t.text;
          return n;
        }
      case Token::Kind::punct:
        if (t.text[0] == '(') {
          shift();
          NodePtr e = expr();
          expect(')');
          return e;
        }
        fail("unexpected '" + t.text + "'");
      case Token::Kind::end:
        fail("unexpected end of input");
    }
    fail("unreachable");
  }

  NodePtr call(const Token& name) {
    const Arity* arity = lookup_arity(name.text);
    if (arity == nullptr) throw ParseError("unknown builder '" + name.text + "'", name.line, name.col);
    auto n = make(Node::Kind::call, name);
    n->name = name.text;
    expect('(');
    if (!is_punct(')')) {
      for (;;) {
        std::string key;
        if (cur_.kind == Token::Kind::ident && ahead_.kind == Token::Kind::punct && ahead_.text == "=") {
          key = shift().text;
          shift();
        }
        n->args.push_back(expr());
        n->arg_names.push_back(std::move(key));
        if (!is_punct(',')) break;
        shift();
      }
    }
    expect(')');
    const auto count = static_cast<int>(n->args.size());
    if (count < arity->min || (arity->max >= 0 && count > arity->max)) {
      std::ostringstream msg;
      msg << name.text << " takes ";
      if (arity->min == arity->max) {
        msg << arity->min;
      } else if (arity->max < 0) {
        msg << "at least " << arity->min;
      } else {
        msg << arity->min << " to " << arity->max;
      }
      msg << " argument" << (arity->min == 1 && arity->max == 1 ? "" : "s") << ", got " << count;
      throw ParseError("arity mismatch: " + msg.str(), name.line, name.col);
    }
    if (arity->binder >= 0 && n->args[static_cast<std::size_t>(arity->binder)]->kind != Node::Kind::ident) {
      const Node& bad = *n->args[static_cast<std::size_t>(arity->binder)];
      throw ParseError(
          name.text + " expects a bare identifier as argument " + std::to_string(arity->binder + 1), bad.line,
          bad.col);
    }
    return n;
  }

  Lexer lex_;
  Token cur_;
  Token ahead_;
};

// Binding strength: 1 sums, 2 products, 3 unary minus, 4 powers, 5 atoms.
int precedence(const Node& e) {
  switch (e.kind) {
    case Node::Kind::number:
    case Node::Kind::ident:
    case Node::Kind::call:
      return 5;
    case Node::Kind::unary:
      return 3;
    case Node::Kind::binary:
      switch (e.op) {
        case '+':
        case '-':
          return 1;
        case '*':
        case '/':
          return 2;
        default:
          return 4;
      }
  }
  return 5;
}

void render(const Node& e, int min_prec, std::string& out) {
  const bool parens = precedence(e) < min_prec;
  if (parens) out += '(';
  switch (e.kind) {
    case Node::Kind::number:
      out += e.number.str();
      break;
    case Node::Kind::ident:
      out += e.name;
      break;
    case Node::Kind::call:
      out += e.name;
      out += '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i > 0) out += ", ";
        if (!e.arg_names[i].empty()) out += e.arg_names[i] + "=";
        render(*e.args[i], 1, out);
      }
      out += ')';
      break;
    case Node::Kind::unary:
      out += '-';
      render(e.arg(0), 4, out);
      break;
    case Node::Kind::binary: {
      const int p = precedence(e);
      if (e.op == '^') {
        render(e.arg(0), 5, out);
        out += '^';
        render(e.arg(1), 3, out);
      } else {
        render(e.arg(0), p, out);
        out += p == 1 ? std::string(" ") + e.op + " " : std::string(1, e.op);
        render(e.arg(1), p + 1, out);
      }
      break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

NodePtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Node& e) {
  std::string out;
  render(e, 1, out);
  return out;
}

}  // namespace lamcat::harness
