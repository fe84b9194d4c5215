#include "lamcat/harness/eval.hpp"

#include <functional>
#include <unordered_map>

#include "lamcat/dirichlet.hpp"
#include "lamcat/lambert.hpp"
#include "lamcat/qseries.hpp"
#include "lamcat/special_sums.hpp"

namespace lamcat::harness {

Value Value::of(ExactValue v) {
  Value out;
  out.kind = Kind::scalar;
  out.scalar = std::move(v);
  return out;
}

Value Value::of(QSeries s) {
  Value out;
  out.kind = Kind::series;
  out.series = std::make_shared<QSeries>(std::move(s));
  return out;
}

Value Value::of(TruncatedSeries s) { return of(QSeries(std::move(s))); }

Value Value::of(ArithmeticFunction f) {
  Value out;
  out.kind = Kind::function;
  out.function = std::make_shared<const ArithmeticFunction>(std::move(f));
  return out;
}

std::string Value::kind_name() const {
  switch (kind) {
    case Kind::scalar:
      return "scalar";
    case Kind::series:
      return "series";
    case Kind::function:
      return "function";
  }
  return "?";
}

namespace {

const FactorSieve& sieve() { return FactorSieve::shared(); }

[[noreturn]] void fail(const Node& at, const std::string& msg) {
  throw EvalError(std::to_string(at.line) + ":" + std::to_string(at.col) + ": " + msg);
}

/// Memoized function wrapper.
ArithmeticFunction memoized(std::string name, std::function<ExactValue(std::uint64_t)> eval) {
  auto cache = std::make_shared<std::unordered_map<std::uint64_t, ExactValue>>();
  return ArithmeticFunction(std::move(name), [cache, eval = std::move(eval)](std::uint64_t n) {
    if (const auto it = cache->find(n); it != cache->end()) return it->second;
    ExactValue v = eval(n);
    cache->emplace(n, v);
    return v;
  });
}

ExactValue power(const ExactValue& base, long k) {
  if (k < 0) {
    if (base.is_zero()) throw DomainError("zero raised to a negative power");
    return ExactValue(Rational(1)) / power(base, -k);
  }
  ExactValue out(1);
  for (long i = 0; i < k; ++i) out *= base;
  return out;
}

std::optional<TruncatedSeries> add_opt(const std::optional<TruncatedSeries>& a,
                                       const std::optional<TruncatedSeries>& b, int sign) {
  if (!a && !b) return std::nullopt;
  if (!a) return sign > 0 ? *b : -*b;
  if (!b) return *a;
  return sign > 0 ? *a + *b : *a - *b;
}

QSeries add(const QSeries& a, const QSeries& b, int sign) {
  return QSeries(sign > 0 ? a.base + b.base : a.base - b.base, add_opt(a.logq, b.logq, sign));
}

QSeries multiply(const QSeries& a, const QSeries& b) {
  if (!a.log_free() && !b.log_free()) throw DomainError("product of two log(q) terms");
  std::optional<TruncatedSeries> l;
  if (!a.log_free()) l = *a.logq * b.base;
  if (!b.log_free()) l = a.base * *b.logq;
  return QSeries(a.base * b.base, std::move(l));
}

QSeries divide(const QSeries& a, const QSeries& b) {
  if (b.log_free()) {
    const TruncatedSeries inv = reciprocal(b.base);
    std::optional<TruncatedSeries> l;
    if (!a.log_free()) l = *a.logq * inv;
    return QSeries(a.base * inv, std::move(l));
  }
  if (b.base.is_zero() && a.base.truncated(b.order()).is_zero()) {
    return QSeries(a.log_free() ? TruncatedSeries(b.order()) : *a.logq / *b.logq);
  }
  throw DomainError("division by a series with an uncancelled log(q) component");
}

QSeries scale(const ExactValue& c, const QSeries& a) {
  std::optional<TruncatedSeries> l;
  if (a.logq) l = c * *a.logq;
  return QSeries(c * a.base, std::move(l));
}

TriangleKind parse_kind(const Node& e) {
  if (e.kind != Node::Kind::ident) fail(e, "expected a triangle kind");
  if (e.name == "minus") return TriangleKind::classical_minus;
  if (e.name == "plus") return TriangleKind::classical_plus;
  if (e.name == "distinct") return TriangleKind::generalized_distinct;
  if (e.name == "unrestricted") return TriangleKind::generalized_unrestricted;
  fail(e, "unknown triangle kind '" + e.name + "'");
}

}  // namespace

/// Dispatch table for call nodes.
struct Builtins {
  using Fn = std::function<Value(Evaluator&, const Node&)>;
  static const std::unordered_map<std::string, Fn>& table();
};

Evaluator::Evaluator(std::size_t order) : order_(order) {}

QSeries Evaluator::to_series(const Value& v) const {
  switch (v.kind) {
    case Value::Kind::scalar:
      return QSeries(TruncatedSeries::constant(order_, v.scalar));
    case Value::Kind::series:
      return *v.series;
    case Value::Kind::function:
      break;
  }
  throw EvalError("expected a series, got a function");
}

QSeries Evaluator::eval_series(const Node& e) {
  const Value v = eval(e);
  if (v.kind == Value::Kind::function) fail(e, "expected a series, got a function");
  return to_series(v);
}

ExactValue Evaluator::scalar_arg(const Node& e) {
  const Value v = eval(e);
  if (v.kind != Value::Kind::scalar) fail(e, "expected a scalar, got a " + v.kind_name());
  return v.scalar;
}

long Evaluator::int_arg(const Node& e) {
  const ExactValue v = scalar_arg(e);
  if (!v.is_rational() || boost::multiprecision::denominator(v.rational()) != 1) {
    fail(e, "expected an integer, got " + v.to_string());
  }
  return v.as_long();
}

QSeries Evaluator::series_arg(const Node& e) { return eval_series(e); }

std::shared_ptr<const ArithmeticFunction> Evaluator::function_arg(const Node& e) {
  const Value v = eval(e);
  if (v.kind == Value::Kind::series) fail(e, "expected an arithmetic function, got a series");
  return as_function(v);
}

const FactorizationTriangle& Evaluator::triangle(TriangleKind kind, long alpha, long beta) {
  const auto key = std::make_tuple(static_cast<int>(kind), alpha, beta);
  auto& slot = triangles_[key];
  if (!slot) slot = std::make_shared<FactorizationTriangle>(s_triangle(kind, alpha, beta, order_));
  return *slot;
}

Value Evaluator::eval(const Node& e) {
  switch (e.kind) {
    case Node::Kind::number:
      return Value::of(ExactValue(e.number));
    case Node::Kind::ident:
      return lookup(e);
    case Node::Kind::call:
      return call(e);
    case Node::Kind::unary: {
      const Value v = eval(e.arg(0));
      switch (v.kind) {
        case Value::Kind::scalar:
          return Value::of(-v.scalar);
        case Value::Kind::series:
          return Value::of(scale(ExactValue(-1), *v.series));
        case Value::Kind::function: {
          const auto f = v.function;
          return Value::of(ArithmeticFunction("-" + f->name(), [f](std::uint64_t n) { return -(*f)(n); }));
        }
      }
      break;
    }
    case Node::Kind::binary:
      return binary(e);
  }
  fail(e, "unhandled node");
}

Value Evaluator::lookup(const Node& e) {
  for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
    if (it->first == e.name) return Value::of(it->second);
  }
  if (e.name == "q") return Value::of(TruncatedSeries::q(order_));
  if (e.name == "logq") {
    return Value::of(QSeries(TruncatedSeries(order_), TruncatedSeries::one(order_)));
  }
  if (e.name == "N") return Value::of(ExactValue(static_cast<long>(order_)));
  if (is_builtin(e.name)) return Value::of(builtin(e.name));
  fail(e, "unknown identifier '" + e.name + "'");
}

Value Evaluator::binary(const Node& e) {
  const Value a = eval(e.arg(0));
  if (e.op == '^') {
    const long k = int_arg(e.arg(1));
    switch (a.kind) {
      case Value::Kind::scalar:
        return Value::of(power(a.scalar, k));
      case Value::Kind::series:
        if (!a.series->log_free()) fail(e, "power of a series with a log(q) component");
        return Value::of(pow(a.series->base, k));
      case Value::Kind::function: {
        const auto f = a.function;
        return Value::of(ArithmeticFunction(f->name() + "^" + std::to_string(k),
                                            [f, k](std::uint64_t n) { return power((*f)(n), k); }));
      }
    }
  }
  return apply(e, e.op, a, eval(e.arg(1)));
}

Value Evaluator::apply(const Node& at, char op, const Value& a, const Value& b) {
  if (a.kind == Value::Kind::function || b.kind == Value::Kind::function) {
    if (a.kind == Value::Kind::series || b.kind == Value::Kind::series) {
      fail(at, "cannot combine a function with a series");
    }
    const auto f = as_function(a);
    const auto g = as_function(b);
    return Value::of(ArithmeticFunction(f->name() + op + g->name(), [f, g, op](std::uint64_t n) {
      switch (op) {
        case '+':
          return (*f)(n) + (*g)(n);
        case '-':
          return (*f)(n) - (*g)(n);
        case '*':
          return (*f)(n) * (*g)(n);
        default:
          return (*f)(n) / (*g)(n);
      }
    }));
  }
  if (a.kind == Value::Kind::scalar && b.kind == Value::Kind::scalar) {
    switch (op) {
      case '+':
        return Value::of(a.scalar + b.scalar);
      case '-':
        return Value::of(a.scalar - b.scalar);
      case '*':
        return Value::of(a.scalar * b.scalar);
      default:
        if (b.scalar.is_zero()) fail(at, "division by zero");
        return Value::of(a.scalar / b.scalar);
    }
  }
  if (op == '*' && a.kind == Value::Kind::scalar) return Value::of(scale(a.scalar, *b.series));
  if (op == '*' && b.kind == Value::Kind::scalar) return Value::of(scale(b.scalar, *a.series));
  if (op == '/' && b.kind == Value::Kind::scalar) {
    if (b.scalar.is_zero()) fail(at, "division by zero");
    return Value::of(scale(ExactValue(Rational(1)) / b.scalar, *a.series));
  }
  const QSeries x = to_series(a);
  const QSeries y = to_series(b);
  switch (op) {
    case '+':
      return Value::of(add(x, y, 1));
    case '-':
      return Value::of(add(x, y, -1));
    case '*':
      return Value::of(multiply(x, y));
    default:
      return Value::of(divide(x, y));
  }
}

std::shared_ptr<const ArithmeticFunction> Evaluator::as_function(const Value& v) {
  if (v.kind == Value::Kind::function) return v.function;
  if (v.kind != Value::Kind::scalar) throw EvalError("expected an arithmetic function, got a series");
  const ExactValue c = v.scalar;
  return std::make_shared<const ArithmeticFunction>(c.to_string(), [c](std::uint64_t) { return c; });
}

Value Evaluator::call(const Node& e) {
  const auto& table = Builtins::table();
  if (const auto it = table.find(e.name); it != table.end()) return it->second(*this, e);
  if (is_builtin(e.name)) {
    const long n = int_arg(e.arg(0));
    if (n < 1) fail(e, e.name + " evaluated at " + std::to_string(n));
    return Value::of(builtin(e.name)(static_cast<std::uint64_t>(n)));
  }
  fail(e, "unknown builder '" + e.name + "'");
}

namespace {

using B = Builtins::Fn;

void only_positional(const Node& e) {
  for (const auto& k : e.arg_names) {
    if (!k.empty()) fail(e, e.name + " takes no named arguments");
  }
}

std::uint64_t positive(const Node& at, long v) {
  if (v < 1) fail(at, "expected a positive integer, got " + std::to_string(v));
  return static_cast<std::uint64_t>(v);
}

}  // namespace

const std::unordered_map<std::string, Builtins::Fn>& Builtins::table() {
  static const std::unordered_map<std::string, Fn> t = [] {
    std::unordered_map<std::string, Fn> m;

    // ---- binding forms ----
    m["fn"] = [](Evaluator& ev, const Node& e) {
      const std::string var = e.arg(0).name;
      const NodePtr body = e.args[1];
      auto env = ev.env_;
      Evaluator* self = &ev;
      return Value::of(memoized("fn", [self, var, body, env](std::uint64_t n) {
        auto saved = std::move(self->env_);
        self->env_ = env;
        struct Restore {
          Evaluator* ev;
          std::vector<std::pair<std::string, ExactValue>>& saved;
          ~Restore() { ev->env_ = std::move(saved); }
        } restore{self, saved};
        return self->with_binding(var, ExactValue(static_cast<long>(n)),
                                  [&] { return self->scalar_arg(*body); });
      }));
    };
    auto fold = [](bool product) {
      return [product](Evaluator& ev, const Node& e) {
        const long lo = ev.int_arg(e.arg(1));
        const long hi = ev.int_arg(e.arg(2));
        Value acc = Value::of(ExactValue(product ? 1 : 0));
        for (long i = lo; i <= hi; ++i) {
          const Value v = ev.with_binding(e.arg(0).name, ExactValue(i), [&] { return ev.eval(e.arg(3)); });
          acc = ev.apply(e, product ? '*' : '+', acc, v);
        }
        return acc;
      };
    };
    m["sum"] = fold(false);
    m["prod"] = fold(true);
    auto divisor_fold = [](bool primes, bool product) {
      return [primes, product](Evaluator& ev, const Node& e) {
        const std::uint64_t n = positive(e, ev.int_arg(e.arg(1)));
        std::vector<std::uint64_t> ds;
        if (primes) {
          for (const auto& pp : sieve().factor(n)) ds.push_back(pp.prime);
        } else {
          ds = sieve().divisors(n);
        }
        Value acc = Value::of(ExactValue(product ? 1 : 0));
        for (std::uint64_t d : ds) {
          const Value v = ev.with_binding(e.arg(0).name, ExactValue(static_cast<long>(d)),
                                          [&] { return ev.eval(e.arg(2)); });
          acc = ev.apply(e, product ? '*' : '+', acc, v);
        }
        return acc;
      };
    };
    m["divsum"] = divisor_fold(false, false);
    m["primesum"] = divisor_fold(true, false);
    m["primeprod"] = divisor_fold(true, true);
    m["gf"] = [](Evaluator& ev, const Node& e) {
      std::vector<ExactValue> c(ev.order_ + 1);
      for (std::size_t n = 0; n <= ev.order_; ++n) {
        c[n] = ev.with_binding(e.arg(0).name, ExactValue(static_cast<long>(n)),
                               [&] { return ev.scalar_arg(e.arg(1)); });
      }
      return Value::of(TruncatedSeries(std::move(c)));
    };
    m["bilateral"] = [](Evaluator& ev, const Node& e) {
      const std::string var = e.arg(0).name;
      const bool quadratic = e.args.size() > 5 && ev.int_arg(e.arg(5)) != 0;
      auto term = [&](long r) {
        return ev.with_binding(var, ExactValue(r), [&] {
          BilateralTerm t;
          t.sign = static_cast<int>(ev.int_arg(e.arg(1)));
          t.exponent = ev.int_arg(e.arg(2));
          t.x = ev.int_arg(e.arg(3));
          t.s1 = static_cast<int>(ev.int_arg(e.arg(4)));
          t.quadratic = quadratic;
          if ((t.sign != 1 && t.sign != -1) || (t.s1 != 1 && t.s1 != -1)) {
            fail(e, "bilateral signs must be +1 or -1");
          }
          return t;
        });
      };
      return Value::of(bilateral_sum(term, ev.order_));
    };
    m["fourier"] = [](Evaluator& ev, const Node& e) {
      const std::uint64_t mod = positive(e, ev.int_arg(e.arg(1)));
      std::vector<Rational> coeffs;
      for (std::uint64_t k = 1; k <= mod; ++k) {
        coeffs.push_back(ev.with_binding(e.arg(0).name, ExactValue(static_cast<long>(k)), [&] {
                             return ev.scalar_arg(e.arg(2));
                           }).as_rational());
      }
      return Value::of(memoized("fourier", [coeffs](std::uint64_t n) {
        const std::optional<Rational> v = fourier_value(coeffs, n, FourierReading::k_indexed);
        if (!v) throw DomainError("finite Fourier sum is irrational at n = " + std::to_string(n));
        return ExactValue(*v);
      }));
    };
    m["if"] = [](Evaluator& ev, const Node& e) {
      return ev.scalar_arg(e.arg(0)).is_zero() ? ev.eval(e.arg(2)) : ev.eval(e.arg(1));
    };

    // ---- Lambert-type builders ----
    m["lambert"] = [](Evaluator& ev, const Node& e) {
      if (!e.arg_names[0].empty()) fail(e, "lambert needs the function as its first argument");
      LambertSpec spec(*ev.function_arg(e.arg(0)));
      for (std::size_t i = 1; i < e.args.size(); ++i) {
        const std::string& key = e.arg_names[i];
        const Node& v = e.arg(i);
        if (key == "sign") {
          if (v.kind != Node::Kind::ident || (v.name != "minus" && v.name != "plus")) {
            fail(v, "sign must be minus or plus");
          }
          spec.sign = v.name == "plus" ? Sign::plus : Sign::minus;
        } else if (key == "alpha") {
          spec.alpha = ev.int_arg(v);
        } else if (key == "beta") {
          spec.beta = ev.int_arg(v);
        } else if (key == "power") {
          spec.power = static_cast<unsigned>(positive(v, ev.int_arg(v)));
        } else if (key == "m") {
          spec.m = static_cast<unsigned>(positive(v, ev.int_arg(v)));
        } else if (key == "t") {
          spec.t = static_cast<unsigned>(positive(v, ev.int_arg(v)));
        } else if (key.empty()) {
          fail(v, "lambert takes named options after the function (sign=, alpha=, beta=, power=, m=, t=)");
        } else {
          fail(v, "lambert has no argument '" + key + "'");
        }
      }
      spec.validate();
      if (ev.on_lambert) ev.on_lambert(spec);
      return Value::of(series(spec, ev.order_));
    };
    m["modlambert"] = [](Evaluator& ev, const Node& e) {
      only_positional(e);
      return Value::of(modified(*ev.function_arg(e.arg(0)), ev.order_));
    };
    m["powlambert"] = [](Evaluator& ev, const Node& e) {
      only_positional(e);
      const auto k = static_cast<unsigned>(positive(e, ev.int_arg(e.arg(1))));
      return Value::of(power_argument(*ev.function_arg(e.arg(0)), k, ev.order_));
    };
    m["ogf"] = [](Evaluator& ev, const Node& e) {
      only_positional(e);
      return Value::of(ogf(*ev.function_arg(e.arg(0)), ev.order_));
    };
    m["hadamard"] = [](Evaluator& ev, const Node& e) {
      only_positional(e);
      return Value::of(
          hadamard_product_lambert(*ev.function_arg(e.arg(0)), *ev.function_arg(e.arg(1)), ev.order_)
              .multisection);
    };
    m["phitilde"] = [](Evaluator& ev, const Node& e) {
      return Value::of(cyclotomic_phi_tilde(positive(e, ev.int_arg(e.arg(0))), ev.order_));
    };

    // ---- series transforms ----
    m["subst"] = [](Evaluator& ev, const Node& e) {
      const QSeries s = ev.series_arg(e.arg(0));
      const std::size_t k = positive(e, ev.int_arg(e.arg(1)));
      std::optional<TruncatedSeries> l;
      if (s.logq) l = ExactValue(static_cast<long>(k)) * compose_power(*s.logq, k);
      return Value::of(QSeries(compose_power(s.base, k), std::move(l)));
    };
    m["multisect"] = [](Evaluator& ev, const Node& e) {
      const QSeries s = ev.series_arg(e.arg(0));
      if (!s.log_free()) fail(e, "multisect of a series with a log(q) component");
      const std::size_t d = positive(e, ev.int_arg(e.arg(1)));
      const long r = ev.int_arg(e.arg(2));
      if (r < 0) fail(e, "negative residue");
      return Value::of(multisect(s.base, d, static_cast<std::size_t>(r)));
    };
    m["log"] = [](Evaluator& ev, const Node& e) {
      const Value v = ev.eval(e.arg(0));
      if (v.kind == Value::Kind::scalar) {
        const Rational& x = v.scalar.as_rational();
        if (x <= 0) fail(e, "log of a non-positive number");
        return Value::of(ExactValue::log_of(x));
      }
      const QSeries s = ev.to_series(v);
      if (!s.log_free()) fail(e, "log of a series with a log(q) component");
      return Value::of(log_series(s.base));
    };
    m["exp"] = [](Evaluator& ev, const Node& e) {
      const QSeries s = ev.series_arg(e.arg(0));
      if (!s.log_free()) fail(e, "exp of a series with a log(q) component");
      return Value::of(exp_series(s.base));
    };
    m["deriv"] = [](Evaluator& ev, const Node& e) {
      const QSeries s = ev.series_arg(e.arg(0));
      if (!s.log_free()) fail(e, "derivative of a series with a log(q) component");
      const long j = ev.int_arg(e.arg(1));
      if (j < 0) fail(e, "negative derivative order");
      return Value::of(derivative(s.base, static_cast<std::size_t>(j)));
    };
    m["coeff"] = [](Evaluator& ev, const Node& e) {
      const QSeries s = ev.series_arg(e.arg(0));
      if (!s.log_free()) fail(e, "coefficient of a series with a log(q) component");
      const long n = ev.int_arg(e.arg(1));
      if (n < 0 || static_cast<std::size_t>(n) > s.base.order()) fail(e, "coefficient index out of range");
      return Value::of(s.base[static_cast<std::size_t>(n)]);
    };

    // ---- q-products and theta functions ----
    m["etaq"] = [](Evaluator& ev, const Node& e) {
      const long k = static_cast<long>(positive(e, ev.int_arg(e.arg(0))));
      return Value::of(pochhammer(k, k, std::nullopt, ev.order_));
    };
    auto poch = [](bool plus) {
      return [plus](Evaluator& ev, const Node& e) {
        const long a = ev.int_arg(e.arg(0));
        const long step = static_cast<long>(positive(e, ev.int_arg(e.arg(1))));
        PochhammerCount count;
        if (e.args.size() > 2 && !(e.arg(2).kind == Node::Kind::ident && e.arg(2).name == "inf")) {
          const long c = ev.int_arg(e.arg(2));
          if (c < 0) fail(e, "negative Pochhammer length");
          count = static_cast<std::size_t>(c);
        }
        return Value::of(pochhammer(a, step, count, ev.order_, plus));
      };
    };
    m["poch"] = poch(false);
    m["npoch"] = poch(true);
    m["jac"] = [](Evaluator& ev, const Node& e) {
      return Value::of(jacobi_triple(ev.int_arg(e.arg(0)), ev.int_arg(e.arg(1)), ev.order_));
    };
    m["theta3"] = [](Evaluator& ev, const Node& e) {
      return Value::of(theta3(positive(e, ev.int_arg(e.arg(0))), ev.order_));
    };
    m["theta4"] = [](Evaluator& ev, const Node& e) {
      return Value::of(theta4(positive(e, ev.int_arg(e.arg(0))), ev.order_));
    };
    m["theta2sq"] = [](Evaluator& ev, const Node& e) {
      return Value::of(theta2_squared(positive(e, ev.int_arg(e.arg(0))), ev.order_));
    };
    m["digamma"] = [](Evaluator& ev, const Node& e) {
      // psi_Q(z) = -log(1 - Q) + log(Q) sum_{n >= 0} Q^{n+z} / (1 - Q^{n+z}), Q = q^k
      const Rational z = ev.scalar_arg(e.arg(0)).as_rational();
      const long k = static_cast<long>(positive(e, ev.int_arg(e.arg(1))));
      const std::size_t n_ord = ev.order_;
      const TruncatedSeries one_minus =
          TruncatedSeries::one(n_ord) - TruncatedSeries::monomial(n_ord, static_cast<std::size_t>(k), 1);
      TruncatedSeries tail(n_ord);
      for (long n = 0;; ++n) {
        const Rational ex = Rational(k) * (Rational(n) + z);
        if (boost::multiprecision::denominator(ex) != 1 || ex <= 0) {
          fail(e, "digamma needs k (n + z) to be a positive integer");
        }
        const auto x = numerator(ex).convert_to<std::size_t>();
        if (x > n_ord) break;
        std::vector<ExactValue> g(n_ord + 1);
        for (std::size_t i = x; i <= n_ord; i += x) g[i] = 1;
        tail = tail + TruncatedSeries(std::move(g));
      }
      return Value::of(QSeries(-log_series(one_minus), ExactValue(k) * tail));
    };
    m["mockeuler"] = [](Evaluator& ev, const Node& e) {
      return Value::of(mock_theta_eulerian(parse_mock_theta(e.arg(0).name), ev.order_));
    };
    m["mockbilateral"] = [](Evaluator& ev, const Node& e) {
      return Value::of(mock_theta_bilateral(parse_mock_theta(e.arg(0).name), ev.order_));
    };

    // ---- factorization ----
    m["facsum"] = [](Evaluator& ev, const Node& e) {
      const TriangleKind kind = parse_kind(e.arg(0));
      if (!e.arg_names[1].empty() && e.arg_names[1] != "f")
        fail(e.arg(1), "facsum has no argument '" + e.arg_names[1] + "'");
      const auto f = ev.function_arg(e.arg(1));
      long alpha = 1;
      long beta = 0;
      for (std::size_t i = 2; i < e.args.size(); ++i) {
        const std::string& key = e.arg_names[i];
        if (key == "alpha" || (key.empty() && i == 2)) {
          alpha = ev.int_arg(e.arg(i));
        } else if (key == "beta" || (key.empty() && i == 3)) {
          beta = ev.int_arg(e.arg(i));
        } else {
          fail(e.arg(i), "facsum has no argument '" + key + "'");
        }
      }
      const FactorizationTriangle& s = ev.triangle(kind, alpha, beta);
      const SequenceWindow rows = s.apply(SequenceWindow::tabulate(*f, ev.order_));
      std::vector<ExactValue> c(ev.order_ + 1);
      for (std::size_t n = 1; n <= ev.order_; ++n) c[n] = rows(n);
      return Value::of(TruncatedSeries(std::move(c)));
    };
    m["sinvapply"] = [](Evaluator& ev, const Node& e) {
      const auto f = ev.function_arg(e.arg(0));
      auto inv = std::make_shared<FactorizationTriangle>(s_inverse_closed(ev.order_));
      return Value::of(memoized("sinvapply", [inv, f](std::uint64_t n) {
        if (n > inv->order()) throw OutOfRange("sinvapply beyond the triangle order");
        ExactValue acc;
        for (std::uint64_t k = 1; k <= n; ++k) {
          const Rational& s = (*inv)(n, k);
          if (s != 0) acc += ExactValue(s) * (*f)(k);
        }
        return acc;
      }));
    };
    m["pairsum"] = [](Evaluator& ev, const Node& e) {
      const QSeries c = ev.series_arg(e.arg(0));
      if (!c.log_free()) fail(e, "C(q) with a log(q) component");
      const auto gamma = ev.function_arg(e.arg(1));
      const auto g = ev.function_arg(e.arg(2));
      const CustomPair pair = custom_pair(c.base, *gamma, ev.order_);
      const SequenceWindow rows = pair.forward.apply(SequenceWindow::tabulate(*g, ev.order_));
      std::vector<ExactValue> out(ev.order_ + 1);
      for (std::size_t n = 1; n <= ev.order_; ++n) out[n] = rows(n);
      return Value::of(TruncatedSeries(std::move(out)));
    };
    m["sentry"] = [](Evaluator& ev, const Node& e) {
      const std::uint64_t n = positive(e, ev.int_arg(e.arg(0)));
      const long k = ev.int_arg(e.arg(1));
      if (n > ev.order_ + 1) fail(e, "sentry row beyond the evaluation order");
      if (k < 1 || static_cast<std::uint64_t>(k) > n) return Value::of(ExactValue(0));
      static thread_local std::map<std::size_t, std::shared_ptr<FactorizationTriangle>> rows;
      auto& tri = rows[ev.order_ + 1];
      if (!tri)
        tri = std::make_shared<FactorizationTriangle>(
            s_triangle(TriangleKind::classical_minus, 1, 0, ev.order_ + 1));
      return Value::of(ExactValue((*tri)(n, static_cast<std::size_t>(k))));
    };

    // ---- function algebra ----
    m["at"] = [](Evaluator& ev, const Node& e) {
      const auto f = ev.function_arg(e.arg(0));
      return Value::of((*f)(positive(e, ev.int_arg(e.arg(1)))));
    };
    m["conv"] = [](Evaluator& ev, const Node& e) {
      std::shared_ptr<const ArithmeticFunction> acc = ev.function_arg(e.arg(0));
      for (std::size_t i = 1; i < e.args.size(); ++i) {
        const auto g = ev.function_arg(e.arg(i));
        const auto f = acc;
        acc = std::make_shared<const ArithmeticFunction>(memoized("conv", [f, g](std::uint64_t n) {
          ExactValue s;
          for (std::uint64_t d : sieve().divisors(n)) s += (*f)(d) * (*g)(n / d);
          return s;
        }));
      }
      return Value::of(*acc);
    };
    m["dinv"] = [](Evaluator& ev, const Node& e) {
      const auto f = ev.function_arg(e.arg(0));
      auto memo = std::make_shared<std::unordered_map<std::uint64_t, ExactValue>>();
      auto self = std::make_shared<std::function<ExactValue(std::uint64_t)>>();
      std::weak_ptr<std::function<ExactValue(std::uint64_t)>> weak = self;
      *self = [f, memo, weak](std::uint64_t n) -> ExactValue {
        if (const auto it = memo->find(n); it != memo->end()) return it->second;
        const ExactValue f1 = (*f)(1);
        if (f1.is_zero()) throw NotInvertible("Dirichlet inverse of a function with f(1) = 0");
        ExactValue v;
        if (n == 1) {
          v = ExactValue(Rational(1)) / f1;
        } else {
          const auto rec = weak.lock();
          ExactValue s;
          for (std::uint64_t d : sieve().divisors(n)) {
            if (d > 1) s += (*f)(d) * (*rec)(n / d);
          }
          v = -(s / f1);
        }
        memo->emplace(n, v);
        return v;
      };
      return Value::of(ArithmeticFunction("dinv", [self](std::uint64_t n) { return (*self)(n); }));
    };
    m["kfold"] = [](Evaluator& ev, const Node& e) {
      const auto f = ev.function_arg(e.arg(0));
      const long j = ev.int_arg(e.arg(1));
      if (j < 0) fail(e, "negative fold count");
      std::shared_ptr<const ArithmeticFunction> acc =
          std::make_shared<const ArithmeticFunction>(builtin("eps"));
      for (long i = 0; i < j; ++i) {
        const auto prev = acc;
        acc = std::make_shared<const ArithmeticFunction>(memoized("kfold", [f, prev](std::uint64_t n) {
          ExactValue s;
          for (std::uint64_t d : sieve().divisors(n)) s += (*f)(d) * (*prev)(n / d);
          return s;
        }));
      }
      return Value::of(*acc);
    };

    // ---- scalar helpers ----
    auto int2 = [](auto body) {
      return [body](Evaluator& ev, const Node& e) {
        return Value::of(ExactValue(body(e, ev.int_arg(e.arg(0)), ev.int_arg(e.arg(1)))));
      };
    };
    auto int1 = [](auto body) {
      return [body](Evaluator& ev, const Node& e) {
        return Value::of(ExactValue(body(e, ev.int_arg(e.arg(0)))));
      };
    };
    auto nonneg = [](const Node& at, long v) {
      if (v < 0) fail(at, "expected a non-negative integer");
      return static_cast<unsigned>(v);
    };
    m["binom"] = int2([](const Node&, long n, long k) { return binomial(n, k); });
    m["fact"] = int1([nonneg](const Node& at, long n) { return factorial(nonneg(at, n)); });
    m["bern"] = [nonneg](Evaluator& ev, const Node& e) {
      return Value::of(ExactValue(bernoulli(nonneg(e, ev.int_arg(e.arg(0))))));
    };
    m["bernpoly"] = [nonneg](Evaluator& ev, const Node& e) {
      const unsigned k = nonneg(e, ev.int_arg(e.arg(0)));
      return Value::of(ExactValue(bernoulli_poly(k, ev.scalar_arg(e.arg(1)).as_rational())));
    };
    m["stirling1"] =
        int2([nonneg](const Node& at, long n, long k) { return stirling1(nonneg(at, n), nonneg(at, k)); });
    m["stirling2"] =
        int2([nonneg](const Node& at, long n, long k) { return stirling2(nonneg(at, n), nonneg(at, k)); });
    m["gcd"] = int2([](const Node&, long a, long b) {
      return Integer(gcd(static_cast<std::uint64_t>(std::abs(a)), static_cast<std::uint64_t>(std::abs(b))));
    });
    m["lcm"] = int2([](const Node& at, long a, long b) {
      if (a == 0 || b == 0) fail(at, "lcm of zero");
      const auto x = static_cast<std::uint64_t>(std::abs(a));
      const auto y = static_cast<std::uint64_t>(std::abs(b));
      return Integer(x / gcd(x, y) * y);
    });
    m["mod"] = int2([](const Node& at, long a, long b) {
      if (b <= 0) fail(at, "mod needs a positive modulus");
      return Integer(((a % b) + b) % b);
    });
    m["divides"] = int2([](const Node& at, long a, long b) {
      if (a == 0) fail(at, "divides(0, n)");
      return Integer(b % a == 0 ? 1 : 0);
    });
    m["le"] = [](Evaluator& ev, const Node& e) {
      const bool le = ev.scalar_arg(e.arg(0)).as_rational() <= ev.scalar_arg(e.arg(1)).as_rational();
      return Value::of(ExactValue(le ? 1 : 0));
    };
    m["even"] = int1([](const Node&, long a) { return Integer(a % 2 == 0 ? 1 : 0); });
    m["isqrt"] = int1([](const Node& at, long a) {
      if (a < 0) fail(at, "isqrt of a negative number");
      return Integer(isqrt(static_cast<std::uint64_t>(a)));
    });
    m["partp"] = int1([](const Node&, long n) { return partition_p(n); });
    m["rc"] =
        int2([](const Node& at, long qq, long x) { return ramanujan_c(positive(at, qq), positive(at, x)); });
    m["floor"] = [](Evaluator& ev, const Node& e) {
      const Rational r = ev.scalar_arg(e.arg(0)).as_rational();
      Integer num = numerator(r);
      const Integer den = denominator(r);
      Integer fl = num / den;
      if (num < 0 && fl * den != num) fl -= 1;
      return Value::of(ExactValue(fl));
    };
    m["abs"] = [](Evaluator& ev, const Node& e) {
      const Rational r = ev.scalar_arg(e.arg(0)).as_rational();
      return Value::of(ExactValue(r < 0 ? Rational(-r) : r));
    };
    return m;
  }();
  return t;
}

QSeries evaluate(std::string_view text, std::size_t order) {
  const NodePtr e = parse(text);
  Evaluator ev(order);
  return ev.eval_series(*e);
}

}  // namespace lamcat::harness
