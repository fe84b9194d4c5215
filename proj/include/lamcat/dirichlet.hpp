#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lamcat/arith.hpp"
#include "lamcat/exact.hpp"

namespace lamcat {

/// Values f(1), ..., f(N) of an arithmetic function.  Indexing is 1-based.
class SequenceWindow {
 public:
  SequenceWindow() = default;
  /// values[i] holds f(i + 1).
  explicit SequenceWindow(std::vector<ExactValue> values) : values_(std::move(values)) {}

  static SequenceWindow tabulate(const ArithmeticFunction& f, std::size_t n);

  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const ExactValue& operator()(std::size_t n) const { return values_.at(n - 1); }
  [[nodiscard]] const std::vector<ExactValue>& values() const { return values_; }

  /// Function view; evaluation beyond the window throws OutOfRange.
  [[nodiscard]] ArithmeticFunction as_function(std::string name) const;

  friend bool operator==(const SequenceWindow&, const SequenceWindow&) = default;

 private:
  std::vector<ExactValue> values_;
};

class NotInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

/// (f * g)(n) on [1, N] by iterating over multiples, O(N log N).
SequenceWindow convolve(const SequenceWindow& f, const SequenceWindow& g);
SequenceWindow convolve(const ArithmeticFunction& f, const ArithmeticFunction& g, std::size_t n);

/// Dirichlet inverse from the defining recursion; f(1) must be nonzero.
SequenceWindow inverse_recursive(const SequenceWindow& f);
SequenceWindow inverse_recursive(const ArithmeticFunction& f, std::size_t n);

/// j-fold self convolution; f_{*0} = eps.
SequenceWindow kfold(const SequenceWindow& f, unsigned j);
SequenceWindow kfold(const ArithmeticFunction& f, unsigned j, std::size_t n);

/// Result of testing the two published closed forms for f^{-1} against the
/// recursive inverse.
struct InverseAdjudication {
  SequenceWindow recursive;
  /// sum_{j=1}^{Omega(n)} (-1)^j (f - f(1) eps)_{*j}(n) / f(1)^{j+1}
  SequenceWindow omega_form;
  /// sum_{j=1}^{Omega(n)} C(Omega(n), j) (-1)^j f_{*j}(n) / f(1)^{j+1}
  SequenceWindow binomial_form;
  std::optional<std::size_t> omega_form_mismatch;
  std::optional<std::size_t> binomial_form_mismatch;
};

/// Evaluates both closed forms literally, with sums starting at j = 1.
InverseAdjudication inverse_closed_forms(const ArithmeticFunction& f, std::size_t n);

/// F(x) = sum_{n <= x} f(n).
ExactValue summatory(const ArithmeticFunction& f, std::size_t x);

/// Sigma_f(x) = sum_{n <= x} (f * 1)(n), evaluated both as the partial sum of
/// the convolution and by the hyperbola form sum_{d <= x} f(d) floor(x / d).
/// Throws std::logic_error if the two disagree.
ExactValue sigma_f(const ArithmeticFunction& f, std::size_t x);

/// First index where two windows differ (over the common length).
std::optional<std::size_t> first_mismatch(const SequenceWindow& a, const SequenceWindow& b);

}  // namespace lamcat
