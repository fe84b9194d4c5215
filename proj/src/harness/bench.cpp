#include "lamcat/harness/bench.hpp"

#include <chrono>

namespace lamcat::harness {

std::vector<std::int64_t> divisor_sums_naive(std::size_t n_max) {
  std::vector<std::int64_t> out(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::int64_t s = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) s += static_cast<std::int64_t>(d);
    }
    out[n] = s;
  }
  return out;
}

std::vector<std::int64_t> divisor_sums_sieve(std::size_t n_max) {
  std::vector<std::int64_t> out(n_max + 1, 0);
  for (std::size_t d = 1; d <= n_max; ++d) {
    for (std::size_t m = d; m <= n_max; m += d) out[m] += static_cast<std::int64_t>(d);
  }
  return out;
}

std::vector<std::int64_t> divisor_sums_pentagonal(std::size_t n_max) {
  // (q;q)_inf = sum_j e_j q^{g_j} over generalized pentagonal numbers
  std::vector<std::pair<std::size_t, std::int64_t>> pent{{0, 1}};
  for (std::size_t k = 1;; ++k) {
    const std::size_t g1 = k * (3 * k - 1) / 2;
    if (g1 > n_max) break;
    const std::int64_t sign = k % 2 == 1 ? -1 : 1;
    pent.emplace_back(g1, sign);
    const std::size_t g2 = k * (3 * k + 1) / 2;
    if (g2 <= n_max) pent.emplace_back(g2, sign);
  }
  // t_n = sum_k s_{n,k} f(k), with s_{n,k} = [q^n] (q;q)_inf q^k / (1 - q^k)
  std::vector<std::int64_t> t(n_max + 1, 0);
  for (std::size_t k = 1; k <= n_max; ++k) {
    for (const auto& [g, e] : pent) {
      for (std::size_t n = g + k; n <= n_max; n += k) t[n] += e * static_cast<std::int64_t>(k);
    }
  }
  std::vector<std::int64_t> out(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::int64_t s = t[n];
    for (std::size_t j = 1; j < pent.size() && pent[j].first <= n; ++j)
      s -= pent[j].second * out[n - pent[j].first];
    out[n] = s;
  }
  return out;
}

namespace {

template <class F>
double timed(F&& body, std::vector<std::int64_t>& out) {
  const auto start = std::chrono::steady_clock::now();
  out = body();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<BenchRow> bench(const std::vector<std::size_t>& sizes) {
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    BenchRow row;
    row.n = n;
    std::vector<std::int64_t> naive;
    std::vector<std::int64_t> sieve;
    std::vector<std::int64_t> pent;
    row.sieve_ms = timed([n] { return divisor_sums_sieve(n); }, sieve);
    row.pentagonal_ms = timed([n] { return divisor_sums_pentagonal(n); }, pent);
    row.agree = sieve == pent;
    if (n <= naive_cap) {
      row.naive_ms = timed([n] { return divisor_sums_naive(n); }, naive);
      row.agree = row.agree && naive == sieve;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lamcat::harness
