#include "lamcat/exact.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace lamcat {

std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

ExactValue ExactValue::log_prime(std::uint64_t p, Rational c) {
  ExactValue v;
  if (c != 0) v.logs_.push_back({p, std::move(c)});
  return v;
}

ExactValue ExactValue::log_of(const Rational& x) {
  if (x <= 0) throw DomainError("log of a non-positive rational");
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  if (num > std::numeric_limits<std::uint64_t>::max() || den > std::numeric_limits<std::uint64_t>::max()) {
    throw DomainError("log argument too large to factor");
  }
  ExactValue v;
  for (auto [p, e] : trial_factor(num.convert_to<std::uint64_t>())) {
    v += log_prime(p, Rational(e));
  }
  for (auto [p, e] : trial_factor(den.convert_to<std::uint64_t>())) {
    v -= log_prime(p, Rational(e));
  }
  return v;
}

const Rational& ExactValue::as_rational() const {
  if (!logs_.empty()) throw DomainError("expected a rational value, got " + to_string());
  return rational_;
}

Integer ExactValue::as_integer() const {
  const Rational& r = as_rational();
  if (boost::multiprecision::denominator(r) != 1) {
    throw DomainError("expected an integer value, got " + to_string());
  }
  return boost::multiprecision::numerator(r);
}

long ExactValue::as_long() const {
  Integer z = as_integer();
  if (z > std::numeric_limits<long>::max() || z < std::numeric_limits<long>::min()) {
    throw DomainError("integer value out of machine range");
  }
  return z.convert_to<long>();
}

void ExactValue::add_scaled(const ExactValue& o, int sign) {
  if (sign > 0) {
    rational_ += o.rational_;
  } else {
    rational_ -= o.rational_;
  }
  if (o.logs_.empty()) return;
  std::vector<LogTerm> merged;
  merged.reserve(logs_.size() + o.logs_.size());
  auto a = logs_.begin();
  auto b = o.logs_.begin();
  while (a != logs_.end() || b != o.logs_.end()) {
    if (b == o.logs_.end() || (a != logs_.end() && a->prime < b->prime)) {
      merged.push_back(std::move(*a++));
    } else if (a == logs_.end() || b->prime < a->prime) {
      merged.push_back({b->prime, sign > 0 ? b->coefficient : Rational(-b->coefficient)});
      ++b;
    } else {
      Rational c = sign > 0 ? a->coefficient + b->coefficient : a->coefficient - b->coefficient;
      if (c != 0) merged.push_back({a->prime, std::move(c)});
      ++a;
      ++b;
    }
  }
  logs_ = std::move(merged);
}

void ExactValue::scale(const Rational& r) {
  rational_ *= r;
  if (r == 0) {
    logs_.clear();
    return;
  }
  for (auto& t : logs_) t.coefficient *= r;
}

ExactValue& ExactValue::operator+=(const ExactValue& o) {
  add_scaled(o, 1);
  return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& o) {
  add_scaled(o, -1);
  return *this;
}

ExactValue& ExactValue::operator*=(const ExactValue& o) {
  if (o.logs_.empty()) {
    scale(o.rational_);
  } else if (logs_.empty()) {
    ExactValue r = o;
    r.scale(rational_);
    *this = std::move(r);
  } else {
    throw DomainError("product of two logarithmic values");
  }
  return *this;
}

ExactValue& ExactValue::operator/=(const ExactValue& o) {
  if (!o.logs_.empty()) throw DomainError("division by a logarithmic value");
  if (o.rational_ == 0) throw DomainError("division by zero");
  scale(Rational(1) / o.rational_);
  return *this;
}

ExactValue operator-(ExactValue a) {
  a.scale(Rational(-1));
  return a;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

std::string ExactValue::to_string() const {
  if (logs_.empty()) return lamcat::to_string(rational_);
  std::ostringstream os;
  os << lamcat::to_string(rational_);
  for (const auto& t : logs_) {
    os << " + (" << lamcat::to_string(t.coefficient) << ")*log(" << t.prime << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactValue& v) { return os << v.to_string(); }

}  // namespace lamcat
