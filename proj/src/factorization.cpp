#include "lamcat/factorization.hpp"

#include <stdexcept>

namespace lamcat {

std::string to_string(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::classical_minus:
      return "classical-minus";
    case TriangleKind::classical_plus:
      return "classical-plus";
    case TriangleKind::generalized_distinct:
      return "generalized-distinct";
    case TriangleKind::generalized_unrestricted:
      return "generalized-unrestricted";
    case TriangleKind::custom:
      return "custom";
  }
  return "unknown";
}

namespace {

using Index = Eigen::Index;

RationalMatrix zero_matrix(std::size_t n) {
  const auto sz = static_cast<Index>(n);
  RationalMatrix m(sz, sz);
  for (Index i = 0; i < sz; ++i)
    for (Index j = 0; j < sz; ++j) m(i, j) = 0;
  return m;
}

// [q^i] (q; q)_inf from Euler's pentagonal number theorem.
int pentagonal_coefficient(long i) {
  if (i < 0) return 0;
  if (i == 0) return 1;
  for (long k = 1;; ++k) {
    const long lo = k * (3 * k - 1) / 2;
    if (lo > i) return 0;
    const int sign = k % 2 == 0 ? 1 : -1;
    if (lo == i || k * (3 * k + 1) / 2 == i) return sign;
  }
}

// s_{n,k} for the classical-minus triangle without building the matrix.
Integer classical_entry(std::size_t n, std::size_t k) {
  Integer acc = 0;
  for (std::size_t j = 1; j * k <= n; ++j) acc += pentagonal_coefficient(static_cast<long>(n - j * k));
  return acc;
}

ExactValue correction_sum(const ArithmeticFunction& f, std::size_t n) {
  ExactValue acc;
  for (std::size_t k = 1; k <= n; ++k) {
    const Integer s = classical_entry(n, k);
    if (s != 0) acc += ExactValue(s) * f(k);
  }
  return acc;
}

}  // namespace

FactorizationTriangle::FactorizationTriangle(RationalMatrix entries, TriangleKind kind, long alpha, long beta)
    : entries_(std::move(entries)), kind_(kind), alpha_(alpha), beta_(beta) {
  if (entries_.rows() != entries_.cols()) throw DomainError("triangle must be square");
}

FactorizationTriangle FactorizationTriangle::inverse() const {
  const Index n = entries_.rows();
  for (Index i = 0; i < n; ++i) {
    if (entries_(i, i) == 0) {
      throw SingularTriangle("triangle has a zero diagonal entry at n = " + std::to_string(i + 1));
    }
  }
  RationalMatrix identity = zero_matrix(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) identity(i, i) = 1;
  RationalMatrix inv = entries_.triangularView<Eigen::Lower>().solve(identity);
  return {std::move(inv), kind_, alpha_, beta_};
}

SequenceWindow FactorizationTriangle::apply(const SequenceWindow& a) const {
  const std::size_t n = std::min(order(), a.size());
  std::vector<ExactValue> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 1; k <= i; ++k) {
      const Rational& s = (*this)(i, k);
      if (s != 0 && !a(k).is_zero()) out[i - 1] += ExactValue(s) * a(k);
    }
  }
  return SequenceWindow(std::move(out));
}

TruncatedSeries triangle_prefactor(TriangleKind kind, long alpha, long beta, std::size_t order) {
  switch (kind) {
    case TriangleKind::classical_minus:
      return pochhammer(1, 1, std::nullopt, order);
    case TriangleKind::classical_plus:
      return pochhammer(1, 1, std::nullopt, order, true);
    case TriangleKind::generalized_distinct:
      return pochhammer(alpha - beta, alpha, std::nullopt, order);
    case TriangleKind::generalized_unrestricted:
      return reciprocal(pochhammer(alpha - beta, alpha, std::nullopt, order));
    case TriangleKind::custom:
      break;
  }
  throw DomainError("custom triangles have no built-in prefactor");
}

TruncatedSeries triangle_c(TriangleKind kind, long alpha, long beta, std::size_t order) {
  switch (kind) {
    case TriangleKind::classical_minus:
    case TriangleKind::classical_plus:
    case TriangleKind::generalized_distinct:
    case TriangleKind::generalized_unrestricted:
      return triangle_prefactor(kind, alpha, beta, order);
    case TriangleKind::custom:
      break;
  }
  throw DomainError("custom triangles have no built-in C(q)");
}

FactorizationTriangle s_triangle(TriangleKind kind, long alpha, long beta, std::size_t order) {
  if (beta < 0 || beta >= alpha) throw DomainError("triangle needs 0 <= beta < alpha");
  bool plus = kind == TriangleKind::classical_plus;
  if (kind == TriangleKind::classical_minus || plus) {
    alpha = 1;
    beta = 0;
  }
  const TruncatedSeries pre = triangle_prefactor(kind, alpha, beta, order);
  RationalMatrix s = zero_matrix(order);
  for (std::size_t k = 1; k <= order; ++k) {
    const long a = alpha * static_cast<long>(k) - beta;
    const auto ua = static_cast<std::size_t>(a);
    // q^a / (1 -+ q^a) = sum_{j >= 1} (+-1)^{j-1} q^{ja}
    for (std::size_t j = 1; j * ua <= order; ++j) {
      const Rational sign = plus && j % 2 == 0 ? Rational(-1) : Rational(1);
      for (std::size_t n = j * ua; n <= order; ++n) {
        const ExactValue& c = pre[n - j * ua];
        if (!c.is_zero()) {
          s(static_cast<Index>(n - 1), static_cast<Index>(k - 1)) += sign * c.as_rational();
        }
      }
    }
  }
  return {std::move(s), kind, alpha, beta};
}

FactorizationTriangle s_triangle(Sign sign, std::size_t order) {
  return s_triangle(sign == Sign::minus ? TriangleKind::classical_minus : TriangleKind::classical_plus, 1, 0,
                    order);
}

TruncatedSeries factorization_expansion(const FactorizationTriangle& s, const TruncatedSeries& c,
                                        const SequenceWindow& f) {
  const SequenceWindow row_sums = s.apply(f);
  const std::size_t order = std::min(row_sums.size(), c.order());
  std::vector<ExactValue> v(order + 1);
  for (std::size_t n = 1; n <= order; ++n) v[n] = row_sums(n);
  return TruncatedSeries(std::move(v)) / c.truncated(order);
}

FactorizationTriangle s_inverse_closed(std::size_t order) {
  RationalMatrix m = zero_matrix(order);
  const FactorSieve& sieve = FactorSieve::shared();
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::uint64_t d : sieve.divisors(n)) {
      const int mu = mobius(n / d);
      if (mu == 0) continue;
      for (std::size_t k = 1; k <= d; ++k) {
        m(static_cast<Index>(n - 1), static_cast<Index>(k - 1)) +=
            Rational(partition_p(static_cast<long>(d - k)) * mu);
      }
    }
  }
  return {std::move(m), TriangleKind::classical_minus};
}

CustomPair custom_pair(const TruncatedSeries& c, const ArithmeticFunction& gamma, std::size_t order) {
  const TruncatedSeries inv_c = reciprocal(c.truncated(order));
  RationalMatrix m = zero_matrix(order);
  const FactorSieve& sieve = FactorSieve::shared();
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::uint64_t d : sieve.divisors(n)) {
      const ExactValue g = gamma(n / d);
      if (g.is_zero()) continue;
      const Rational& gr = g.as_rational();
      for (std::size_t k = 1; k <= d; ++k) {
        const ExactValue& coeff = inv_c[d - k];
        if (!coeff.is_zero()) {
          m(static_cast<Index>(n - 1), static_cast<Index>(k - 1)) += coeff.as_rational() * gr;
        }
      }
    }
  }
  FactorizationTriangle inverse(std::move(m), TriangleKind::custom);
  FactorizationTriangle forward = inverse.inverse();
  return {std::move(inverse), std::move(forward)};
}

SequenceWindow f_tilde(const ArithmeticFunction& f, const ArithmeticFunction& gamma, std::size_t order) {
  const SequenceWindow fg = convolve(f, gamma, order);
  std::vector<ExactValue> ones(order, ExactValue(1));
  return convolve(fg, SequenceWindow(std::move(ones)));
}

bool custom_pair_identity(const TruncatedSeries& c, const ArithmeticFunction& gamma,
                          const ArithmeticFunction& f, std::size_t order) {
  const CustomPair pair = custom_pair(c, gamma, order);
  const TruncatedSeries rhs = factorization_expansion(pair.forward, c, f_tilde(f, gamma, order));
  return rhs == lambert(f, order);
}

SequenceWindow generalized_abar(const SequenceWindow& a, long alpha, long beta,
                                const ArithmeticFunction& gamma, AbarReading reading) {
  const std::size_t n = a.size();
  std::vector<ExactValue> ones(n, ExactValue(1));
  const SequenceWindow gamma_tilde =
      convolve(SequenceWindow::tabulate(gamma, n), SequenceWindow(std::move(ones)));
  const FactorSieve& sieve = FactorSieve::shared();
  std::vector<ExactValue> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::uint64_t d : sieve.divisors(i)) {
      const long sd = static_cast<long>(d);
      long index = 0;
      if (reading == AbarReading::printed) {
        if (((sd - beta) % alpha + alpha) % alpha != 0) continue;
        index = (sd - beta) / alpha;
      } else {
        if ((sd + beta) % alpha != 0) continue;
        index = (sd + beta) / alpha;
      }
      if (index < 1 || static_cast<std::size_t>(index) > n) continue;
      const ExactValue& ai = a(static_cast<std::size_t>(index));
      if (!ai.is_zero()) out[i - 1] += ai * gamma_tilde(i / d);
    }
  }
  return SequenceWindow(std::move(out));
}

std::optional<std::size_t> generalized_abar_mismatch(const SequenceWindow& a, long alpha, long beta,
                                                     const TruncatedSeries& c,
                                                     const ArithmeticFunction& gamma, AbarReading reading) {
  const std::size_t order = std::min(a.size(), c.order());
  const CustomPair pair = custom_pair(c, gamma, order);
  const SequenceWindow abar = generalized_abar(a, alpha, beta, gamma, reading);
  const TruncatedSeries rhs = factorization_expansion(pair.forward, c, abar);
  LambertSpec spec(a.as_function("a"));
  spec.alpha = alpha;
  spec.beta = beta;
  const TruncatedSeries lhs = series(spec, order);
  for (std::size_t n = 0; n <= order; ++n) {
    if (!(lhs[n] == rhs[n])) return n;
  }
  return std::nullopt;
}

long pentagonal_limit(std::size_t n, int b) {
  const auto r = static_cast<long>(isqrt(24 * n + 1));
  const long num = r - b;
  return num < 0 ? -1 : num / 6;
}

ExactValue pentagonal_recurrence(const ArithmeticFunction& f, std::size_t n) {
  // c[m] = (f * 1)(m) by the recurrence, c[0] = 0.
  std::vector<ExactValue> c(n + 2);
  for (std::size_t m = 0; m <= n; ++m) {
    ExactValue acc = correction_sum(f, m + 1);
    for (int b : {1, -1}) {
      const long lim = pentagonal_limit(m, b);
      for (long k = 1; k <= lim; ++k) {
        const long arg = static_cast<long>(m) + 1 - k * (3 * k + b) / 2;
        if (arg < 1) continue;
        const ExactValue& prev = c[static_cast<std::size_t>(arg)];
        if (k % 2 == 1) {
          acc += prev;
        } else {
          acc -= prev;
        }
      }
    }
    c[m + 1] = acc;
  }
  return c[n + 1];
}

ExactValue pentagonal_summatory(const ArithmeticFunction& f, std::size_t x) {
  // big_sigma[m] = Sigma_f(m), corr[m] = sum_{n=0}^{m-1} sum_k s_{n+1,k} f(k)
  std::vector<ExactValue> big_sigma(x + 2);
  ExactValue corr;
  for (std::size_t m = 0; m <= x; ++m) {
    corr += correction_sum(f, m + 1);
    ExactValue acc = corr;
    for (int b : {1, -1}) {
      const long lim = pentagonal_limit(m, b);
      for (long k = 1; k <= lim; ++k) {
        const long arg = static_cast<long>(m) + 1 - k * (3 * k + b) / 2;
        if (arg < 1) continue;
        const ExactValue& prev = big_sigma[static_cast<std::size_t>(arg)];
        if (k % 2 == 1) {
          acc += prev;
        } else {
          acc -= prev;
        }
      }
    }
    big_sigma[m + 1] = acc;
  }
  return big_sigma[x + 1];
}

}  // namespace lamcat
