#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <cstddef>
#include <optional>
#include <string>

#include "lamcat/arith.hpp"
#include "lamcat/dirichlet.hpp"
#include "lamcat/lambert.hpp"
#include "lamcat/series.hpp"

namespace lamcat {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

enum class TriangleKind {
  classical_minus,
  classical_plus,
  generalized_distinct,
  generalized_unrestricted,
  custom,
};

std::string to_string(TriangleKind kind);

class SingularTriangle : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Lower-triangular exact matrix s_{n,k}, 1 <= k <= n <= N.
class FactorizationTriangle {
 public:
  FactorizationTriangle(RationalMatrix entries, TriangleKind kind, long alpha = 1, long beta = 0);

  [[nodiscard]] std::size_t order() const { return static_cast<std::size_t>(entries_.rows()); }
  /// s_{n,k} with 1-based indices; zero above the diagonal.
  [[nodiscard]] const Rational& operator()(std::size_t n, std::size_t k) const {
    return entries_(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(k - 1));
  }
  [[nodiscard]] const RationalMatrix& matrix() const { return entries_; }
  [[nodiscard]] TriangleKind kind() const { return kind_; }
  [[nodiscard]] long alpha() const { return alpha_; }
  [[nodiscard]] long beta() const { return beta_; }

  /// Exact inverse by forward substitution; throws SingularTriangle on a
  /// zero diagonal entry.
  [[nodiscard]] FactorizationTriangle inverse() const;

  /// Row sums sum_k s_{n,k} a_k for n = 1..N.
  [[nodiscard]] SequenceWindow apply(const SequenceWindow& a) const;

 private:
  RationalMatrix entries_;
  TriangleKind kind_;
  long alpha_;
  long beta_;
};

/// Prefactor product whose coefficients define the triangle:
///   classical_minus: (q; q)_inf, classical_plus: (-q; q)_inf,
///   generalized_distinct: (q^{alpha-beta}; q^alpha)_inf,
///   generalized_unrestricted: 1 / (q^{alpha-beta}; q^alpha)_inf.
TruncatedSeries triangle_prefactor(TriangleKind kind, long alpha, long beta, std::size_t order);

/// s_{n,k} = [q^n] prefactor * q^a / (1 -+ q^a) with a = alpha k - beta.
FactorizationTriangle s_triangle(TriangleKind kind, long alpha, long beta, std::size_t order);
FactorizationTriangle s_triangle(Sign sign, std::size_t order);

/// The factor C(q) with L = (1 / C) sum_n (sum_k s_{n,k} f(k)) q^n.
TruncatedSeries triangle_c(TriangleKind kind, long alpha, long beta, std::size_t order);

/// (1 / C) sum_n (sum_k s_{n,k} f(k)) q^n.
TruncatedSeries factorization_expansion(const FactorizationTriangle& s, const TruncatedSeries& c,
                                        const SequenceWindow& f);

/// s^{-1}_{n,k} = sum_{d | n} p(d - k) mu(n / d).
FactorizationTriangle s_inverse_closed(std::size_t order);

struct CustomPair {
  FactorizationTriangle inverse;  // closed form
  FactorizationTriangle forward;  // by exact inversion
};

/// s^{-1}_{n,k}(gamma) = sum_{d | n} [q^{d-k}] (1 / C) gamma(n / d), with the
/// forward triangle recovered by inversion.
CustomPair custom_pair(const TruncatedSeries& c, const ArithmeticFunction& gamma, std::size_t order);

/// f~(k)(gamma) = sum_{d | k} sum_{r | k/d} f(d) gamma(r).
SequenceWindow f_tilde(const ArithmeticFunction& f, const ArithmeticFunction& gamma, std::size_t order);

/// Whether L_f(q) = (1 / C) sum_n (sum_k s_{n,k}(gamma) f~(k)) q^n to order N.
bool custom_pair_identity(const TruncatedSeries& c, const ArithmeticFunction& gamma,
                          const ArithmeticFunction& f, std::size_t order);

enum class AbarReading {
  printed,    // d = beta (mod alpha), a_{(d - beta) / alpha}
  corrected,  // d = -beta (mod alpha), a_{(d + beta) / alpha}
};

/// a-bar_n = sum over qualifying d | n of a_index gamma~(n / d) with
/// gamma~ = gamma * 1.  Index 0 contributes nothing.
SequenceWindow generalized_abar(const SequenceWindow& a, long alpha, long beta,
                                const ArithmeticFunction& gamma, AbarReading reading);

/// Checks L_a(alpha, beta; q) = (1 / C) sum_n (sum_k sbar_{n,k} abar_k) q^n
/// where sbar is the inverse of the gamma triangle for C.  Returns the first
/// mismatching coefficient index.
std::optional<std::size_t> generalized_abar_mismatch(const SequenceWindow& a, long alpha, long beta,
                                                     const TruncatedSeries& c,
                                                     const ArithmeticFunction& gamma, AbarReading reading);

/// (f * 1)(n + 1) from the pentagonal recurrence, using the classical-minus
/// triangle for the correction sum.
ExactValue pentagonal_recurrence(const ArithmeticFunction& f, std::size_t n);

/// Sigma_f(x + 1) from the summatory recurrence with Sigma_f(x + 1 - k(3k+b)/2)
/// inside the sum.
ExactValue pentagonal_summatory(const ArithmeticFunction& f, std::size_t x);

/// floor((sqrt(24 n + 1) - b) / 6) for b = +-1.
long pentagonal_limit(std::size_t n, int b);

}  // namespace lamcat
