#include "lamcat/qseries.hpp"

#include <map>
#include <stdexcept>

namespace lamcat {

TruncatedSeries theta3(std::size_t k, std::size_t order) {
  if (k == 0) throw DomainError("theta3 needs k >= 1");
  std::vector<ExactValue> v(order + 1);
  v[0] = 1;
  for (std::size_t n = 1; k * n * n <= order; ++n) v[k * n * n] = 2;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries theta4(std::size_t k, std::size_t order) {
  if (k == 0) throw DomainError("theta4 needs k >= 1");
  std::vector<ExactValue> v(order + 1);
  v[0] = 1;
  for (std::size_t n = 1; k * n * n <= order; ++n) v[k * n * n] = n % 2 == 0 ? 2 : -2;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries theta2_squared(std::size_t k, std::size_t order) {
  if (k == 0 || k % 2 != 0) {
    throw DomainError("theta2 squared at q^k has half-integer exponents unless k is even");
  }
  std::vector<ExactValue> v(order + 1);
  for (std::size_t n = 0; k * n * (n + 1) <= order; ++n) v[k * n * (n + 1)] = 1;
  const TruncatedSeries s(std::move(v));
  return shift_up(ExactValue(4) * (s * s), k / 2, order);
}

TruncatedSeries jacobi_triple(long a, long m, std::size_t order) {
  if (m <= 0 || a <= 0 || a >= m) throw DomainError("J_{a,m} needs 0 < a < m");
  return pochhammer(a, m, std::nullopt, order) * pochhammer(m - a, m, std::nullopt, order) *
         pochhammer(m, m, std::nullopt, order);
}

namespace {

struct NormalizedTerm {
  ExactValue scale;  // constant factor, from the sign and a constant denominator
  long exponent;     // leading power of q after clearing negative exponents
  long x;            // denominator step, > 0, or 0 for a constant denominator
  int s1;
  bool quadratic;
};

NormalizedTerm normalize(const BilateralTerm& t) {
  NormalizedTerm n{ExactValue(t.sign), t.exponent, t.x, t.s1, t.quadratic};
  if (t.x == 0) {
    const long constant = 1 + t.s1 + (t.quadratic ? 1 : 0);
    if (constant == 0) throw DomainError("bilateral term with a vanishing denominator");
    n.scale = ExactValue(Rational(t.sign, constant));
    return n;
  }
  if (t.x < 0) {
    const long a = -t.x;
    n.x = a;
    if (t.quadratic) {
      n.exponent += 2 * a;
    } else {
      n.exponent += a;
      if (t.s1 == -1) n.scale = -n.scale;
    }
  }
  return n;
}

TruncatedSeries expand(const NormalizedTerm& t, std::size_t order) {
  if (t.exponent < 0) throw DomainError("bilateral term has a negative exponent");
  const auto e = static_cast<std::size_t>(t.exponent);
  if (t.x == 0) return TruncatedSeries::monomial(order, e, t.scale);
  const auto x = static_cast<std::size_t>(t.x);
  std::vector<ExactValue> den(order + 1);
  den[0] = 1;
  if (x <= order) den[x] = ExactValue(t.s1);
  if (t.quadratic && 2 * x <= order) den[2 * x] = 1;
  return t.scale * shift_up(reciprocal(TruncatedSeries(std::move(den))), e, order);
}

}  // namespace

TruncatedSeries bilateral_sum(const std::function<BilateralTerm(long)>& term, std::size_t order,
                              long window) {
  TruncatedSeries acc(order);
  const auto limit = static_cast<long>(order);
  for (int dir : {1, -1}) {
    long prev = 0;
    bool have_prev = false;
    for (long step = dir == 1 ? 0 : 1;; ++step) {
      if (window > 0 && step > window) break;
      const long r = dir * step;
      const NormalizedTerm t = normalize(term(r));
      if (t.exponent <= limit) {
        acc = acc + expand(t, order);
      } else if (window == 0 && have_prev && t.exponent > prev && step > 2) {
        break;
      }
      prev = t.exponent;
      have_prev = true;
      if (window == 0 && step > 4 * limit + 8) break;
    }
  }
  return acc;
}

MockTheta parse_mock_theta(std::string_view name) {
  static const std::map<std::string_view, MockTheta> names = {
      {"phi", MockTheta::phi},     {"psi", MockTheta::psi},     {"rho", MockTheta::rho},
      {"sigma", MockTheta::sigma}, {"gamma", MockTheta::gamma},
  };
  const auto it = names.find(name);
  if (it == names.end()) throw DomainError("unknown mock theta function " + std::string(name));
  return it->second;
}

std::string to_string(MockTheta name) {
  switch (name) {
    case MockTheta::phi:
      return "phi";
    case MockTheta::psi:
      return "psi";
    case MockTheta::rho:
      return "rho";
    case MockTheta::sigma:
      return "sigma";
    case MockTheta::gamma:
      return "gamma";
  }
  return "?";
}

TruncatedSeries mock_theta_eulerian(MockTheta name, std::size_t order) {
  TruncatedSeries acc(order);
  const auto limit = static_cast<long>(order);
  for (long n = 0;; ++n) {
    long e = 0;
    switch (name) {
      case MockTheta::phi:
        e = n * n;
        break;
      case MockTheta::psi:
        e = (n + 1) * (n + 1);
        break;
      case MockTheta::rho:
        e = n * (n + 1) / 2;
        break;
      case MockTheta::sigma:
        e = (n + 1) * (n + 2) / 2;
        break;
      case MockTheta::gamma:
        e = n * n;
        break;
    }
    if (e > limit) break;
    const auto un = static_cast<std::size_t>(n);
    TruncatedSeries num(order);
    TruncatedSeries den(order);
    switch (name) {
      case MockTheta::phi:
        num = pochhammer(1, 2, un, order);
        den = pochhammer(1, 1, 2 * un, order, true);
        break;
      case MockTheta::psi:
        num = pochhammer(1, 2, un, order);
        den = pochhammer(1, 1, 2 * un + 1, order, true);
        break;
      case MockTheta::rho:
      case MockTheta::sigma:
        num = pochhammer(1, 1, un, order, true);
        den = pochhammer(1, 2, un + 1, order);
        break;
      case MockTheta::gamma:
        num = pochhammer(1, 1, un, order);
        den = pochhammer(3, 3, un, order);
        break;
    }
    const bool negate = (name == MockTheta::phi || name == MockTheta::psi) && n % 2 == 1;
    const TruncatedSeries term = shift_up(num / den, static_cast<std::size_t>(e), order);
    acc = negate ? acc - term : acc + term;
  }
  return acc;
}

TruncatedSeries mock_theta_bilateral(MockTheta name, std::size_t order, long window) {
  std::function<BilateralTerm(long)> term;
  TruncatedSeries prefactor(order);
  switch (name) {
    case MockTheta::phi:
      term = [](long r) { return BilateralTerm{1, r * (3 * r + 1) / 2, 3 * r, 1, false}; };
      prefactor = ExactValue(2) * reciprocal(jacobi_triple(1, 3, order));
      break;
    case MockTheta::psi:
      term = [](long r) { return BilateralTerm{1, r * (3 * r + 1) / 2, 3 * r + 1, 1, false}; };
      prefactor = ExactValue(2) * reciprocal(jacobi_triple(1, 3, order));
      break;
    case MockTheta::rho:
      term = [](long r) { return BilateralTerm{r % 2 == 0 ? 1 : -1, r * (3 * r + 4), 6 * r + 1, -1, false}; };
      prefactor = reciprocal(jacobi_triple(1, 6, order));
      break;
    case MockTheta::sigma:
      term = [](long r) {
        return BilateralTerm{r % 2 == 0 ? 1 : -1, (r + 1) * (3 * r + 1), 6 * r + 3, -1, false};
      };
      prefactor = reciprocal(jacobi_triple(1, 6, order));
      break;
    case MockTheta::gamma:
      term = [](long r) { return BilateralTerm{r % 2 == 0 ? 1 : -1, r * (3 * r + 1) / 2, r, 1, true}; };
      prefactor = reciprocal(pochhammer(1, 1, std::nullopt, order));
      break;
  }
  return prefactor * bilateral_sum(term, order, window);
}

std::pair<TruncatedSeries, TruncatedSeries> mock_theta(MockTheta name, std::size_t order) {
  return {mock_theta_eulerian(name, order), mock_theta_bilateral(name, order)};
}

PartitionProductCheck partition_product_relation(std::size_t order) {
  TruncatedSeries log_unrestricted(order);
  TruncatedSeries log_distinct(order);
  for (std::size_t n = 1; n <= order; ++n) {
    TruncatedSeries one_minus = TruncatedSeries::one(order) - TruncatedSeries::monomial(order, n, 1);
    TruncatedSeries one_plus = TruncatedSeries::one(order) + TruncatedSeries::monomial(order, n, 1);
    log_unrestricted = log_unrestricted + log_series(reciprocal(one_minus));
    log_distinct = log_distinct + log_series(one_plus);
  }
  const TruncatedSeries euler = pochhammer(1, 1, std::nullopt, order);
  return {exp_series(log_unrestricted) == reciprocal(euler),
          exp_series(log_distinct) == pochhammer(1, 1, std::nullopt, order, true)};
}

}  // namespace lamcat
