#pragma once

#include <cstddef>
#include <optional>

#include "lamcat/arith.hpp"
#include "lamcat/series.hpp"

namespace lamcat {

enum class Sign { minus, plus };

/// sum_{n >= t} f(n) q^{m e} / (1 -+ q^e)^power with e = alpha n - beta.
///
/// The classical L_f(q) is the default spec; L_f(alpha, beta; q), the
/// modified series (Sign::plus) and the binomial-power forms are the other
/// corners.
struct LambertSpec {
  ArithmeticFunction f;
  long alpha = 1;
  long beta = 0;
  Sign sign = Sign::minus;
  unsigned power = 1;
  unsigned m = 1;
  unsigned t = 1;

  explicit LambertSpec(ArithmeticFunction fn) : f(std::move(fn)) {}

  /// Throws DomainError unless 0 <= beta < alpha and power, m, t >= 1.
  void validate() const;
};

/// Exact expansion to order N, summing one closed binomial series per term.
TruncatedSeries series(const LambertSpec& spec, std::size_t order);

/// [q^n] by divisor enumeration:
///   sum over e | n with e = alpha k - beta, k >= t, j = n/e - m >= 0 of
///   (+-1)^j C(j + power - 1, power - 1) f(k).
ExactValue coefficient(const LambertSpec& spec, std::uint64_t n);

/// L_f(q) for the classical spec.
TruncatedSeries lambert(const ArithmeticFunction& f, std::size_t order);

/// sum f(n) q^n / (1 + q^n), built by the alternating expansion and by
/// L_f(q) - 2 L_f(q^2); throws std::logic_error if they differ.
TruncatedSeries modified(const ArithmeticFunction& f, std::size_t order);

/// sum f(n) q^{n^k} / (1 - q^{n^k}).
TruncatedSeries power_argument(const ArithmeticFunction& f, unsigned k, std::size_t order);

/// Three evaluations of q^j D^j [q^i / (1 - q^i)].
struct DerivativeExpansion {
  /// Formal j-th derivative, multiplied back by q^j.
  TruncatedSeries formal;
  /// sum_{m,k} [j m] {m k} (-1)^{j-k} k! i^m / (1 - q^i)^{k+1}, as printed.
  TruncatedSeries printed;
  /// sum_{m,k} [j m] {m k} (-1)^{j-m} k! i^m q^{ik} / (1 - q^i)^{k+1}.
  TruncatedSeries corrected;
};

DerivativeExpansion derivative_expansion(unsigned i, unsigned j, std::size_t order);

/// sum_n mu(n) L_f(q^n), which is the OGF of f.
TruncatedSeries ogf_from_lambert(const ArithmeticFunction& f, std::size_t order);

/// sum_n mu(n) L_f(q^n) / (1 - q), the OGF of the summatory function of f.
TruncatedSeries summatory_ogf(const ArithmeticFunction& f, std::size_t order);

/// sum_{n <= N} f(n) q^n.
TruncatedSeries ogf(const ArithmeticFunction& f, std::size_t order);

/// sum_n f(n) L_g(q^n).
TruncatedSeries lambert_double_sum(const ArithmeticFunction& f, const ArithmeticFunction& g,
                                   std::size_t order);

/// sum_n f(n) [L_g(q^n) - 2 L_g(q^{2n})].
TruncatedSeries modified_double_sum(const ArithmeticFunction& f, const ArithmeticFunction& g,
                                    std::size_t order);

/// 1 / (1 -+ q)^power to order N.
TruncatedSeries binomial_series(Sign sign, unsigned power, std::size_t order);

}  // namespace lamcat
