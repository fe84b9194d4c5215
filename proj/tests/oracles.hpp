#pragma once

// Brute-force reference implementations, independent of the library.

#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "lamcat/exact.hpp"
#include "lamcat/series.hpp"

namespace oracle {

using lamcat::Integer;
using lamcat::Rational;

inline std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline int mu(std::uint64_t n) {
  int s = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    s = -s;
  }
  return s;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

inline Integer sigma(unsigned k, std::uint64_t n) {
  Integer s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += boost::multiprecision::pow(Integer(d), k);
  }
  return s;
}

inline unsigned omega(std::uint64_t n) { return static_cast<unsigned>(factor(n).size()); }

inline unsigned big_omega(std::uint64_t n) {
  unsigned s = 0;
  for (auto [p, e] : factor(n)) s += e;
  return s;
}

inline int liouville(std::uint64_t n) { return big_omega(n) % 2 ? -1 : 1; }

inline bool is_square(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

/// Partitions of n into parts <= max_part, by exhaustive recursion.
inline std::uint64_t count_partitions(long n, long max_part) {
  if (n == 0) return 1;
  std::uint64_t c = 0;
  for (long k = std::min(n, max_part); k >= 1; --k) c += count_partitions(n - k, k);
  return c;
}

/// Signed count of partitions of n into distinct parts, (-1)^{#parts}.
inline long signed_distinct(long n, long min_part = 1) {
  if (n == 0) return 1;
  long s = 0;
  for (long k = min_part; k <= n; ++k) s -= signed_distinct(n - k, k + 1);
  return s;
}

/// #{(a, b) : a^2 + b^2 = n} by scanning the square.
inline long lattice_count(long n) {
  long c = 0;
  for (long a = -n; a <= n; ++a) {
    for (long b = -n; b <= n; ++b) c += a * a + b * b == n;
  }
  return c;
}

/// sum_{d | n} f(d) g(n / d).
inline Rational dirichlet(const std::function<Rational(std::uint64_t)>& f,
                          const std::function<Rational(std::uint64_t)>& g, std::uint64_t n) {
  Rational s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += f(d) * g(n / d);
  }
  return s;
}

/// Schoolbook product of dense coefficient vectors.
inline std::vector<Rational> cauchy(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                    std::size_t order) {
  std::vector<Rational> out(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline std::vector<Rational> coeffs(const lamcat::TruncatedSeries& s) {
  std::vector<Rational> out;
  for (const auto& c : s.coeffs()) out.push_back(c.as_rational());
  return out;
}

/// Uniform random rational with small numerator and denominator.
inline Rational random_rational(std::mt19937& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return Rational(num(rng), den(rng));
}

inline lamcat::TruncatedSeries random_series(std::mt19937& rng, std::size_t order, bool unit = false) {
  std::vector<lamcat::ExactValue> c(order + 1);
  for (auto& x : c) x = random_rational(rng);
  if (unit && c[0].is_zero()) c[0] = lamcat::ExactValue(1);
  return lamcat::TruncatedSeries(std::move(c));
}

}  // namespace oracle
