#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lamcat/exact.hpp"

namespace lamcat {

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Smallest-prime-factor table on [1, limit].
class FactorSieve {
 public:
  static constexpr std::uint32_t kDefaultLimit = 1'000'000;

  explicit FactorSieve(std::uint32_t limit = kDefaultLimit);

  /// Process-wide sieve with the default limit, built on first use.
  static const FactorSieve& shared();

  [[nodiscard]] std::uint32_t limit() const { return limit_; }
  [[nodiscard]] std::uint32_t spf(std::uint64_t n) const;
  [[nodiscard]] Factorization factor(std::uint64_t n) const;
  [[nodiscard]] bool is_prime(std::uint64_t n) const;
  /// All divisors of n in increasing order.
  [[nodiscard]] std::vector<std::uint64_t> divisors(std::uint64_t n) const;

 private:
  void check(std::uint64_t n) const;

  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

/// A map n -> ExactValue on the positive integers.
class ArithmeticFunction {
 public:
  using Eval = std::function<ExactValue(std::uint64_t)>;

  ArithmeticFunction(std::string name, Eval eval, bool multiplicative = false)
      : name_(std::move(name)), eval_(std::move(eval)), multiplicative_(multiplicative) {}

  /// f(n) for n >= 1.
  ExactValue operator()(std::uint64_t n) const {
    if (n == 0) throw OutOfRange("arithmetic function " + name_ + " evaluated at 0");
    return eval_(n);
  }

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] bool multiplicative() const { return multiplicative_; }
  [[nodiscard]] bool invertible() const { return !(*this)(1).is_zero(); }

 private:
  std::string name_;
  Eval eval_;
  bool multiplicative_;
};

class UnknownFunction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Named arithmetic functions.  Parametrized families take their parameter
/// as a numeric suffix: sigma2, id3, jordan2, dk3, dedekind1, lambdak2,
/// muk2, chipow3.  Plain names: mu, phi, d, liouville, mangoldt, absmu,
/// omega, bigomega, twoomega, rad, lsb, chiprime, chisquare, chisqfree,
/// eps, one, r2, tau.
ArithmeticFunction builtin(std::string_view name);
bool is_builtin(std::string_view name);
std::vector<std::string> builtin_families();

// Individual kernels, exposed for the oracles and the other modules.
int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
Integer divisor_sigma(unsigned k, std::uint64_t n);
unsigned little_omega(std::uint64_t n);
unsigned big_omega(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
int liouville(std::uint64_t n);
/// k-fold Moebius function; mu_1 = mu, higher k by the divisor recurrence.
int mobius_k(unsigned k, std::uint64_t n);

Integer binomial(long n, long k);
Integer factorial(unsigned n);
/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(unsigned n);
Rational bernoulli_poly(unsigned k, const Rational& x);
/// Unsigned Stirling numbers of the first kind (cycle counts).
Integer stirling1(unsigned n, unsigned k);
Integer stirling2(unsigned n, unsigned k);
/// Partition numbers by Euler's pentagonal recurrence; p(n) = 0 for n < 0.
Integer partition_p(long n);
/// Number of (a, b) in Z^2 with a^2 + b^2 = n.
Integer r2(std::uint64_t n);
/// Coefficient of q^n in q (q;q)_inf^24.
Integer ramanujan_tau(std::uint64_t n);
/// c_q(x) = sum_{d | (q, x)} d mu(q/d).
Integer ramanujan_c(std::uint64_t q, std::uint64_t x);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t isqrt(std::uint64_t n);

}  // namespace lamcat
