#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lamcat/exact.hpp"

namespace lamcat {

/// Arithmetic hooks a coefficient domain must provide for Series<Scalar>.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactValue> {
  static bool is_zero(const ExactValue& x) { return x.is_zero(); }
  static ExactValue from_rational(const Rational& r) { return ExactValue(r); }
  static ExactValue inverse(const ExactValue& x) {
    if (x.is_zero()) throw DomainError("inverse of zero");
    return ExactValue(Rational(1) / x.as_rational());
  }
};

template <>
struct ScalarTraits<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational from_rational(const Rational& r) { return r; }
  static Rational inverse(const Rational& x) {
    if (x == 0) throw DomainError("inverse of zero");
    return Rational(1) / x;
  }
};

template <>
struct ScalarTraits<double> {
  static bool is_zero(double x) { return x == 0.0; }
  static double from_rational(const Rational& r) { return r.convert_to<double>(); }
  static double inverse(double x) {
    if (x == 0.0) throw DomainError("inverse of zero");
    return 1.0 / x;
  }
};

template <>
struct ScalarTraits<std::complex<double>> {
  using C = std::complex<double>;
  static bool is_zero(const C& x) { return x == C{}; }
  static C from_rational(const Rational& r) { return C(r.convert_to<double>(), 0.0); }
  static C inverse(const C& x) {
    if (x == C{}) throw DomainError("inverse of zero");
    return C(1.0) / x;
  }
};

/// Formal power series in q truncated after q^order.
///
/// Coefficients 0..order are stored densely and never change after
/// construction.  Binary operations between series of different orders
/// truncate to the smaller order.
template <class Scalar>
class Series {
 public:
  using scalar_type = Scalar;
  using traits = ScalarTraits<Scalar>;

  /// The zero series of the given order.
  explicit Series(std::size_t order) : coeffs_(order + 1) {}
  /// Takes ownership of coefficients 0..coeffs.size()-1 (must be nonempty).
  explicit Series(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
  }

  static Series constant(std::size_t order, Scalar c) {
    std::vector<Scalar> v(order + 1);
    v[0] = std::move(c);
    return Series(std::move(v));
  }
  static Series one(std::size_t order) { return constant(order, traits::from_rational(Rational(1))); }
  /// c q^k; vanishes when k > order.
  static Series monomial(std::size_t order, std::size_t k, Scalar c) {
    std::vector<Scalar> v(order + 1);
    if (k <= order) v[k] = std::move(c);
    return Series(std::move(v));
  }
  static Series q(std::size_t order) { return monomial(order, 1, traits::from_rational(Rational(1))); }

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] const Scalar& operator[](std::size_t n) const { return coeffs_[n]; }
  [[nodiscard]] std::span<const Scalar> coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient, if any.
  [[nodiscard]] std::optional<std::size_t> valuation() const {
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
      if (!traits::is_zero(coeffs_[n])) return n;
    }
    return std::nullopt;
  }
  [[nodiscard]] bool is_zero() const { return !valuation().has_value(); }

  [[nodiscard]] Series truncated(std::size_t order) const {
    if (order >= this->order()) return *this;
    return Series(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<Scalar> coeffs_;
};

using TruncatedSeries = Series<ExactValue>;

template <class S>
Series<S> operator+(const Series<S>& a, const Series<S>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<S> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] + b[i];
  return Series<S>(std::move(out));
}

template <class S>
Series<S> operator-(const Series<S>& a, const Series<S>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<S> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = a[i] - b[i];
  return Series<S>(std::move(out));
}

template <class S>
Series<S> operator-(const Series<S>& a) {
  std::vector<S> out(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) out[i] = -a[i];
  return Series<S>(std::move(out));
}

template <class S>
Series<S> operator*(const S& c, const Series<S>& a) {
  std::vector<S> out(a.order() + 1);
  if (Series<S>::traits::is_zero(c)) return Series<S>(std::move(out));
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (!Series<S>::traits::is_zero(a[i])) out[i] = c * a[i];
  }
  return Series<S>(std::move(out));
}

/// Cauchy product truncated to the smaller order.  Zero coefficients are
/// skipped, so sparse factors (q^k, 1 - q^k, ...) multiply in O(N * nnz).
template <class S>
Series<S> operator*(const Series<S>& a, const Series<S>& b) {
  using T = typename Series<S>::traits;
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<S> out(n + 1);
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j <= n; ++j) {
    if (!T::is_zero(b[j])) nz_b.push_back(j);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (T::is_zero(a[i])) continue;
    for (std::size_t j : nz_b) {
      if (i + j > n) break;
      out[i + j] += a[i] * b[j];
    }
  }
  return Series<S>(std::move(out));
}

/// Multiplicative inverse; the constant term must be invertible.
template <class S>
Series<S> reciprocal(const Series<S>& a) {
  using T = typename Series<S>::traits;
  if (T::is_zero(a[0])) throw DomainError("reciprocal of a series with zero constant term");
  const std::size_t n = a.order();
  const S inv0 = T::inverse(a[0]);
  std::vector<std::size_t> nz;
  for (std::size_t k = 1; k <= n; ++k) {
    if (!T::is_zero(a[k])) nz.push_back(k);
  }
  std::vector<S> r(n + 1);
  r[0] = inv0;
  for (std::size_t m = 1; m <= n; ++m) {
    S acc{};
    for (std::size_t k : nz) {
      if (k > m) break;
      if (!T::is_zero(r[m - k])) acc += a[k] * r[m - k];
    }
    if (!T::is_zero(acc)) r[m] = -(inv0 * acc);
  }
  return Series<S>(std::move(r));
}

template <class S>
Series<S> operator/(const Series<S>& a, const Series<S>& b) {
  return a * reciprocal(b);
}

/// Substitution q -> q^k.
template <class S>
Series<S> compose_power(const Series<S>& a, std::size_t k) {
  if (k == 0) throw DomainError("compose_power needs k >= 1");
  std::vector<S> out(a.order() + 1);
  for (std::size_t m = 0; m * k <= a.order(); ++m) out[m * k] = a[m];
  return Series<S>(std::move(out));
}

/// Keeps the coefficients at indices congruent to r mod d.
template <class S>
Series<S> multisect(const Series<S>& a, std::size_t d, std::size_t r) {
  if (d == 0 || r >= d) throw DomainError("multisect needs 0 <= r < d");
  std::vector<S> out(a.order() + 1);
  for (std::size_t m = r; m <= a.order(); m += d) out[m] = a[m];
  return Series<S>(std::move(out));
}

/// j-th formal derivative d^j/dq^j.  The order drops by j; callers that
/// multiply back by q^j recover the original order via shift_up.
template <class S>
Series<S> derivative(const Series<S>& a, std::size_t j = 1) {
  using T = typename Series<S>::traits;
  if (j == 0) return a;
  const std::size_t n = a.order();
  if (j > n) return Series<S>(std::size_t{0});
  std::vector<S> out(n - j + 1);
  for (std::size_t m = 0; m + j <= n; ++m) {
    if (T::is_zero(a[m + j])) continue;
    Integer falling = 1;
    for (std::size_t i = 0; i < j; ++i) falling *= Integer(m + j - i);
    out[m] = T::from_rational(Rational(falling)) * a[m + j];
  }
  return Series<S>(std::move(out));
}

/// q^k * a, kept at the given order.
template <class S>
Series<S> shift_up(const Series<S>& a, std::size_t k, std::size_t order) {
  std::vector<S> out(order + 1);
  for (std::size_t m = 0; m <= a.order() && m + k <= order; ++m) out[m + k] = a[m];
  return Series<S>(std::move(out));
}

/// Formal logarithm of a series with constant term 1.
template <class S>
Series<S> log_series(const Series<S>& a) {
  using T = typename Series<S>::traits;
  if (!(a[0] == T::from_rational(Rational(1)))) {
    throw DomainError("log_series needs constant term 1");
  }
  const std::size_t n = a.order();
  // b = log a satisfies m b_m = m a_m - sum_{k=1}^{m-1} k b_k a_{m-k}.
  std::vector<S> b(n + 1);
  for (std::size_t m = 1; m <= n; ++m) {
    S acc = T::from_rational(Rational(static_cast<long>(m))) * a[m];
    for (std::size_t k = 1; k < m; ++k) {
      if (T::is_zero(b[k]) || T::is_zero(a[m - k])) continue;
      acc -= T::from_rational(Rational(static_cast<long>(k))) * b[k] * a[m - k];
    }
    b[m] = acc * T::from_rational(Rational(1, static_cast<long>(m)));
  }
  return Series<S>(std::move(b));
}

/// Formal exponential of a series with constant term 0.
template <class S>
Series<S> exp_series(const Series<S>& a) {
  using T = typename Series<S>::traits;
  if (!T::is_zero(a[0])) throw DomainError("exp_series needs constant term 0");
  const std::size_t n = a.order();
  // e = exp a satisfies m e_m = sum_{k=1}^{m} k a_k e_{m-k}.
  std::vector<S> e(n + 1);
  e[0] = T::from_rational(Rational(1));
  for (std::size_t m = 1; m <= n; ++m) {
    S acc{};
    for (std::size_t k = 1; k <= m; ++k) {
      if (T::is_zero(a[k]) || T::is_zero(e[m - k])) continue;
      acc += T::from_rational(Rational(static_cast<long>(k))) * a[k] * e[m - k];
    }
    e[m] = acc * T::from_rational(Rational(1, static_cast<long>(m)));
  }
  return Series<S>(std::move(e));
}

/// Integer power; negative exponents go through the reciprocal.
template <class S>
Series<S> pow(const Series<S>& a, long k) {
  if (k < 0) return pow(reciprocal(a), -k);
  Series<S> result = Series<S>::one(a.order());
  Series<S> base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

/// Number of factors in a q-Pochhammer product; nullopt means infinite.
using PochhammerCount = std::optional<std::size_t>;

/// (c q^a; q^step)_count = prod_{j < count} (1 - c q^{a + j*step}) with c = +1
/// (sign_plus = false) or c = -1 (sign_plus = true).  Infinite products stop
/// once the exponent exceeds the order.
TruncatedSeries pochhammer(long a, long step, PochhammerCount count, std::size_t order,
                           bool sign_plus = false);

/// Human-readable dump: "c0 + c1*q + c2*q^2 + ..." with zero terms omitted.
std::string to_string(const TruncatedSeries& s);

}  // namespace lamcat
