#include "lamcat/arith.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace lamcat {

// ---------------------------------------------------------------- sieve

FactorSieve::FactorSieve(std::uint32_t limit) : limit_(std::max<std::uint32_t>(limit, 1)) {
  spf_.assign(static_cast<std::size_t>(limit_) + 1, 0);
  for (std::uint32_t i = 2; i <= limit_; ++i) {
    if (spf_[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit_; j += i) {
      if (spf_[j] == 0) spf_[j] = i;
    }
  }
}

const FactorSieve& FactorSieve::shared() {
  static const FactorSieve sieve;
  return sieve;
}

void FactorSieve::check(std::uint64_t n) const {
  if (n == 0 || n > limit_) {
    throw OutOfRange("sieve argument " + std::to_string(n) + " outside [1, " + std::to_string(limit_) + "]");
  }
}

std::uint32_t FactorSieve::spf(std::uint64_t n) const {
  check(n);
  return spf_[n];
}

Factorization FactorSieve::factor(std::uint64_t n) const {
  check(n);
  Factorization out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

bool FactorSieve::is_prime(std::uint64_t n) const {
  check(n);
  return n > 1 && spf_[n] == n;
}

std::vector<std::uint64_t> FactorSieve::divisors(std::uint64_t n) const {
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : factor(n)) {
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// ---------------------------------------------------------------- kernels

namespace {

const FactorSieve& sieve() { return FactorSieve::shared(); }

Integer ipow(std::uint64_t base, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

int mobius(std::uint64_t n) {
  int s = 1;
  for (const auto& pp : sieve().factor(n)) {
    if (pp.exponent > 1) return 0;
    s = -s;
  }
  return s;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (const auto& pp : sieve().factor(n)) r = r / pp.prime * (pp.prime - 1);
  return r;
}

Integer divisor_sigma(unsigned k, std::uint64_t n) {
  Integer r = 1;
  for (const auto& [p, e] : sieve().factor(n)) {
    if (k == 0) {
      r *= e + 1;
      continue;
    }
    const Integer pk = ipow(p, k);
    r *= (ipow(p, k * (e + 1)) - 1) / (pk - 1);
  }
  return r;
}

unsigned little_omega(std::uint64_t n) { return static_cast<unsigned>(sieve().factor(n).size()); }

unsigned big_omega(std::uint64_t n) {
  unsigned s = 0;
  for (const auto& pp : sieve().factor(n)) s += pp.exponent;
  return s;
}

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (const auto& pp : sieve().factor(n)) r *= pp.prime;
  return r;
}

int liouville(std::uint64_t n) { return big_omega(n) % 2 == 0 ? 1 : -1; }

int mobius_k(unsigned k, std::uint64_t n) {
  if (k == 0) throw DomainError("mobius_k needs k >= 1");
  if (k == 1) return mobius(n);
  static std::mutex mu;
  static std::unordered_map<std::uint64_t, int> memo;  // key: n * 64 + k
  const std::uint64_t key = n * 64 + k;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  int acc = 0;
  for (std::uint64_t d = 1;; ++d) {
    std::uint64_t dk = 1;
    bool overflow = false;
    for (unsigned i = 0; i < k; ++i) {
      dk *= d;
      if (dk > n) {
        overflow = true;
        break;
      }
    }
    if (overflow) break;
    if (n % dk != 0) continue;
    acc += mobius_k(k - 1, n / dk) * mobius_k(k - 1, n / d);
  }
  std::lock_guard lock(mu);
  memo.emplace(key, acc);
  return acc;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mu);
  while (table.size() <= n) {
    const auto m = static_cast<long>(table.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational acc = 0;
    for (long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table[static_cast<std::size_t>(j)];
    table.push_back(-acc / Rational(m + 1));
  }
  return table[n];
}

Rational bernoulli_poly(unsigned k, const Rational& x) {
  Rational acc = 0;
  Rational xp = 1;  // x^(k-j), accumulated from j = k downwards
  for (long j = k; j >= 0; --j) {
    acc += Rational(binomial(k, j)) * bernoulli(static_cast<unsigned>(j)) * xp;
    xp *= x;
  }
  return acc;
}

namespace {

// Triangle tables grown on demand: row n holds entries k = 0..n.
struct StirlingTable {
  std::mutex mu;
  std::vector<std::vector<Integer>> rows{{Integer(1)}};
};

template <class Step>
Integer stirling_lookup(StirlingTable& t, unsigned n, unsigned k, Step step) {
  if (k > n) return 0;
  std::lock_guard lock(t.mu);
  while (t.rows.size() <= n) {
    const auto& prev = t.rows.back();
    const auto m = static_cast<unsigned>(t.rows.size() - 1);  // prev row index
    std::vector<Integer> row(m + 2);
    for (unsigned j = 0; j <= m + 1; ++j) {
      const Integer left = j >= 1 ? prev[j - 1] : Integer(0);
      const Integer same = j <= m ? prev[j] : Integer(0);
      row[j] = step(m, j, left, same);
    }
    t.rows.push_back(std::move(row));
  }
  return t.rows[n][k];
}

}  // namespace

Integer stirling1(unsigned n, unsigned k) {
  static StirlingTable table;
  // [m+1, j] = m [m, j] + [m, j-1]
  return stirling_lookup(table, n, k, [](unsigned m, unsigned, const Integer& left, const Integer& same) {
    return same * m + left;
  });
}

Integer stirling2(unsigned n, unsigned k) {
  static StirlingTable table;
  // {m+1, j} = j {m, j} + {m, j-1}
  return stirling_lookup(table, n, k, [](unsigned, unsigned j, const Integer& left, const Integer& same) {
    return same * j + left;
  });
}

Integer partition_p(long n) {
  if (n < 0) return 0;
  static std::mutex mu;
  static std::vector<Integer> table{Integer(1)};
  std::lock_guard lock(mu);
  while (table.size() <= static_cast<std::size_t>(n)) {
    const auto m = static_cast<long>(table.size());
    Integer acc = 0;
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const Integer sign = k % 2 == 1 ? 1 : -1;
      acc += sign * table[static_cast<std::size_t>(m - g1)];
      const long g2 = k * (3 * k + 1) / 2;
      if (g2 <= m) acc += sign * table[static_cast<std::size_t>(m - g2)];
    }
    table.push_back(acc);
  }
  return table[static_cast<std::size_t>(n)];
}

Integer r2(std::uint64_t n) {
  // 4 * (number of divisors = 1 mod 4 minus number = 3 mod 4)
  long acc = 0;
  for (std::uint64_t d : sieve().divisors(n)) {
    if (d % 4 == 1) ++acc;
    if (d % 4 == 3) --acc;
  }
  return Integer(4 * acc);
}

Integer ramanujan_tau(std::uint64_t n) {
  if (n == 0) return 0;
  static std::mutex mu;
  static std::vector<Integer> f{Integer(1)};  // coefficients of (q;q)^24
  std::lock_guard lock(mu);
  // q F'/F = -24 sum sigma_1(m) q^m  =>  k F_k = -24 sum_{m=1}^{k} sigma_1(m) F_{k-m}
  while (f.size() < n) {
    const std::size_t k = f.size();
    Integer acc = 0;
    for (std::size_t m = 1; m <= k; ++m) acc += divisor_sigma(1, m) * f[k - m];
    f.push_back(-24 * acc / static_cast<long>(k));
  }
  return f[n - 1];
}

Integer ramanujan_c(std::uint64_t q, std::uint64_t x) {
  Integer acc = 0;
  for (std::uint64_t d : sieve().divisors(gcd(q, x))) acc += Integer(d) * mobius(q / d);
  return acc;
}

// ---------------------------------------------------------------- builtins

namespace {

struct ParsedName {
  std::string base;
  std::optional<unsigned> param;
};

ParsedName split_name(std::string_view name) {
  std::size_t cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
  if (cut == name.size() || cut == 0) return {std::string(name), std::nullopt};
  unsigned v = 0;
  std::from_chars(name.data() + cut, name.data() + name.size(), v);
  return {std::string(name.substr(0, cut)), v};
}

constexpr std::array kFamilies = {"sigma", "id", "jordan", "dk", "dedekind", "lambdak", "muk", "chipow"};
constexpr std::array kPlain = {"mu",        "phi",       "d",        "liouville", "mangoldt", "absmu",
                               "omega",     "bigomega",  "twoomega", "rad",       "lsb",      "chiprime",
                               "chisquare", "chisqfree", "eps",      "one",       "r2",       "tau"};

bool is_family(std::string_view b) {
  return std::find(kFamilies.begin(), kFamilies.end(), b) != kFamilies.end();
}
bool is_plain(std::string_view b) { return std::find(kPlain.begin(), kPlain.end(), b) != kPlain.end(); }

bool is_kth_power(std::uint64_t n, unsigned k) {
  if (k == 0) throw DomainError("chipow needs k >= 1");
  for (const auto& pp : sieve().factor(n)) {
    if (pp.exponent % k != 0) return false;
  }
  return true;
}

ExactValue from_int(const Integer& z) { return ExactValue(z); }

}  // namespace

bool is_builtin(std::string_view name) {
  if (is_plain(name)) return true;
  auto [base, param] = split_name(name);
  return param ? is_family(base) : is_plain(base);
}

std::vector<std::string> builtin_families() {
  std::vector<std::string> out(kPlain.begin(), kPlain.end());
  for (const char* f : kFamilies) out.push_back(std::string(f) + "<k>");
  return out;
}

ArithmeticFunction builtin(std::string_view name) {
  const auto [base, param] = is_plain(name) ? ParsedName{std::string(name), std::nullopt} : split_name(name);
  const std::string full(name);
  if (param ? !is_family(base) : !is_plain(base)) {
    throw UnknownFunction("unknown arithmetic function '" + full + "'");
  }
  if (param) {
    const unsigned k = *param;
    if (base == "sigma") {
      return {full, [k](std::uint64_t n) { return from_int(divisor_sigma(k, n)); }, true};
    }
    if (base == "id") {
      return {full, [k](std::uint64_t n) { return from_int(ipow(n, k)); }, true};
    }
    if (base == "jordan") {
      return {full,
              [k](std::uint64_t n) {
                Rational r = Rational(ipow(n, k));
                for (const auto& pp : sieve().factor(n))
                  r *= Rational(1) - Rational(1) / Rational(ipow(pp.prime, k));
                return ExactValue(r);
              },
              true};
    }
    if (base == "dk") {
      return {full,
              [k](std::uint64_t n) {
                Integer r = 1;
                for (const auto& pp : sieve().factor(n)) r *= binomial(pp.exponent + k - 1, k - 1);
                return from_int(r);
              },
              true};
    }
    if (base == "dedekind") {
      return {full,
              [k](std::uint64_t n) {
                Rational r = Rational(ipow(n, k));
                for (const auto& pp : sieve().factor(n))
                  r *= Rational(1) + Rational(1) / Rational(ipow(pp.prime, k));
                return ExactValue(r);
              },
              true};
    }
    if (base == "lambdak") {
      // chi_{k-th powers} * mu, straight from the definition
      return {full,
              [k](std::uint64_t n) {
                long acc = 0;
                for (std::uint64_t d : sieve().divisors(n)) {
                  if (is_kth_power(d, k)) acc += mobius(n / d);
                }
                return ExactValue(acc);
              },
              true};
    }
    if (base == "muk") {
      return {full, [k](std::uint64_t n) { return ExactValue(mobius_k(k, n)); }, true};
    }
    // chipow
    return {full, [k](std::uint64_t n) { return ExactValue(is_kth_power(n, k) ? 1 : 0); }, true};
  }

  if (base == "mu") return {full, [](std::uint64_t n) { return ExactValue(mobius(n)); }, true};
  if (base == "phi") {
    return {full, [](std::uint64_t n) { return ExactValue(static_cast<long>(euler_phi(n))); }, true};
  }
  if (base == "d") return {full, [](std::uint64_t n) { return from_int(divisor_sigma(0, n)); }, true};
  if (base == "liouville") return {full, [](std::uint64_t n) { return ExactValue(liouville(n)); }, true};
  if (base == "mangoldt") {
    return {full, [](std::uint64_t n) {
              const auto f = sieve().factor(n);
              return f.size() == 1 ? ExactValue::log_prime(f[0].prime) : ExactValue();
            }};
  }
  if (base == "absmu") {
    return {full, [](std::uint64_t n) { return ExactValue(mobius(n) != 0 ? 1 : 0); }, true};
  }
  if (base == "omega") {
    return {full, [](std::uint64_t n) { return ExactValue(static_cast<long>(little_omega(n))); }};
  }
  if (base == "bigomega") {
    return {full, [](std::uint64_t n) { return ExactValue(static_cast<long>(big_omega(n))); }};
  }
  if (base == "twoomega") {
    return {full, [](std::uint64_t n) { return from_int(ipow(2, little_omega(n))); }, true};
  }
  if (base == "rad") {
    return {full, [](std::uint64_t n) { return ExactValue(static_cast<long>(radical(n))); }, true};
  }
  if (base == "lsb") return {full, [](std::uint64_t n) { return ExactValue(static_cast<long>(n % 2)); }};
  if (base == "chiprime") {
    return {full, [](std::uint64_t n) { return ExactValue(sieve().is_prime(n) ? 1 : 0); }};
  }
  if (base == "chisquare") {
    return {full, [](std::uint64_t n) { return ExactValue(is_kth_power(n, 2) ? 1 : 0); }, true};
  }
  if (base == "chisqfree") {
    return {full, [](std::uint64_t n) { return ExactValue(mobius(n) != 0 ? 1 : 0); }, true};
  }
  if (base == "eps") return {full, [](std::uint64_t n) { return ExactValue(n == 1 ? 1 : 0); }, true};
  if (base == "one") return {full, [](std::uint64_t) { return ExactValue(1); }, true};
  if (base == "r2") return {full, [](std::uint64_t n) { return from_int(r2(n)); }};
  // tau
  return {full, [](std::uint64_t n) { return from_int(ramanujan_tau(n)); }, true};
}

}  // namespace lamcat
