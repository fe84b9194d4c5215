#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace lamcat::harness {

/// (f * 1)(n) for f = Id_1 and 1 <= n <= N, index 0 unused.
std::vector<std::int64_t> divisor_sums_naive(std::size_t n_max);
std::vector<std::int64_t> divisor_sums_sieve(std::size_t n_max);
/// Euler's pentagonal recurrence for the coefficients of L_f(q)(q;q)_inf,
/// then division by (q;q)_inf.
std::vector<std::int64_t> divisor_sums_pentagonal(std::size_t n_max);

/// The naive strategy is quadratic and skipped above this size.
inline constexpr std::size_t naive_cap = 20000;

struct BenchRow {
  std::size_t n = 0;
  std::optional<double> naive_ms;
  double sieve_ms = 0;
  double pentagonal_ms = 0;
  bool agree = false;
};

std::vector<BenchRow> bench(const std::vector<std::size_t>& sizes);

}  // namespace lamcat::harness
