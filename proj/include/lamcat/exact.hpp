#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lamcat {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Raised when an operation leaves the algebraic domain it is defined on
/// (log*log products, division by a non-rational, zero constant terms, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rational-coefficient term of log p.
struct LogTerm {
  std::uint64_t prime;
  Rational coefficient;

  friend bool operator==(const LogTerm&, const LogTerm&) = default;
};

/// Exact scalar: a rational number plus a finite rational combination of
/// logarithms of primes.
///
/// The values form a vector space over the rationals spanned by 1 and the
/// log p.  Products are closed only when at least one factor is purely
/// rational; anything else throws DomainError.
class ExactValue {
 public:
  ExactValue() = default;
  ExactValue(Rational r) : rational_(std::move(r)) {}  // NOLINT(implicit)
  ExactValue(const Integer& z) : rational_(z) {}       // NOLINT(implicit)
  ExactValue(long v) : rational_(v) {}                 // NOLINT(implicit)
  ExactValue(int v) : rational_(v) {}                  // NOLINT(implicit)

  /// c * log p for a prime p.  The caller guarantees primality.
  static ExactValue log_prime(std::uint64_t p, Rational c = Rational(1));

  /// log x for a positive rational x, expanded over the primes of x.
  static ExactValue log_of(const Rational& x);

  [[nodiscard]] const Rational& rational() const { return rational_; }
  [[nodiscard]] const std::vector<LogTerm>& logs() const { return logs_; }
  [[nodiscard]] bool is_rational() const { return logs_.empty(); }
  [[nodiscard]] bool is_zero() const { return logs_.empty() && rational_ == 0; }

  /// Rational part; throws DomainError when log terms are present.
  [[nodiscard]] const Rational& as_rational() const;
  /// Integer value; throws DomainError unless this is an integer rational.
  [[nodiscard]] Integer as_integer() const;
  [[nodiscard]] long as_long() const;

  ExactValue& operator+=(const ExactValue& o);
  ExactValue& operator-=(const ExactValue& o);
  ExactValue& operator*=(const ExactValue& o);
  ExactValue& operator/=(const ExactValue& o);

  friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
  friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
  friend ExactValue operator*(ExactValue a, const ExactValue& b) { return a *= b; }
  friend ExactValue operator/(ExactValue a, const ExactValue& b) { return a /= b; }
  friend ExactValue operator-(ExactValue a);

  friend bool operator==(const ExactValue&, const ExactValue&) = default;

  /// `a/b` for rationals; `c + (a)*log(p) + ...` once log terms are present.
  [[nodiscard]] std::string to_string() const;

 private:
  void add_scaled(const ExactValue& o, int sign);
  void scale(const Rational& r);

  Rational rational_;
  std::vector<LogTerm> logs_;  // sorted by prime, no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const ExactValue& v);

std::string to_string(const Rational& r);

/// Trial-division factorization used for logarithms of arbitrary positive
/// integers (no sieve bound).
std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n);

}  // namespace lamcat
