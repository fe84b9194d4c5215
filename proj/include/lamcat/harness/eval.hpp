#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "lamcat/arith.hpp"
#include "lamcat/factorization.hpp"
#include "lamcat/harness/expr.hpp"
#include "lamcat/lambert.hpp"
#include "lamcat/series.hpp"

namespace lamcat::harness {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// base + logq * log(q), where log(q) is an opaque unit.
struct QSeries {
  TruncatedSeries base;
  std::optional<TruncatedSeries> logq;

  explicit QSeries(TruncatedSeries b, std::optional<TruncatedSeries> l = std::nullopt)
      : base(std::move(b)), logq(std::move(l)) {}
  [[nodiscard]] std::size_t order() const {
    return logq ? std::min(base.order(), logq->order()) : base.order();
  }
  /// True when no log(q) component survives.
  [[nodiscard]] bool log_free() const { return !logq || logq->is_zero(); }
};

struct Value {
  enum class Kind { scalar, series, function };

  Kind kind = Kind::scalar;
  ExactValue scalar;
  std::shared_ptr<QSeries> series;
  std::shared_ptr<const ArithmeticFunction> function;

  static Value of(ExactValue v);
  static Value of(QSeries s);
  static Value of(TruncatedSeries s);
  static Value of(ArithmeticFunction f);

  [[nodiscard]] std::string kind_name() const;
};

/// Evaluates expressions at a fixed truncation order.  Instances are cheap
/// and not shared between threads.
class Evaluator {
 public:
  explicit Evaluator(std::size_t order);

  [[nodiscard]] std::size_t order() const { return order_; }

  Value eval(const Node& e);
  /// Evaluation promoted to a series; scalars become constant series.
  QSeries eval_series(const Node& e);

  /// Called with every Lambert spec this evaluator expands.
  std::function<void(const LambertSpec&)> on_lambert;

 private:
  friend struct Builtins;

  Value call(const Node& e);
  Value binary(const Node& e);
  Value apply(const Node& at, char op, const Value& a, const Value& b);
  static std::shared_ptr<const ArithmeticFunction> as_function(const Value& v);
  Value lookup(const Node& e);

  ExactValue scalar_arg(const Node& e);
  long int_arg(const Node& e);
  QSeries series_arg(const Node& e);
  std::shared_ptr<const ArithmeticFunction> function_arg(const Node& e);
  QSeries to_series(const Value& v) const;

  /// Binds `name` for the duration of a callback.
  template <class F>
  auto with_binding(const std::string& name, ExactValue v, F&& body) {
    env_.emplace_back(name, std::move(v));
    struct Pop {
      std::vector<std::pair<std::string, ExactValue>>& env;
      ~Pop() { env.pop_back(); }
    } pop{env_};
    return body();
  }

  const FactorizationTriangle& triangle(TriangleKind kind, long alpha, long beta);

  std::size_t order_;
  std::vector<std::pair<std::string, ExactValue>> env_;
  std::map<std::tuple<int, long, long>, std::shared_ptr<FactorizationTriangle>> triangles_;
};

/// parse + eval_series; throws ParseError, EvalError or DomainError.
QSeries evaluate(std::string_view text, std::size_t order);

}  // namespace lamcat::harness
