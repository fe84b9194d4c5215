#include "lamcat/lambert.hpp"

#include <stdexcept>

namespace lamcat {

void LambertSpec::validate() const {
  if (beta < 0 || beta >= alpha) throw DomainError("lambert spec needs 0 <= beta < alpha");
  if (power < 1) throw DomainError("lambert spec needs power >= 1");
  if (m < 1 || t < 1) throw DomainError("lambert spec needs m, t >= 1");
}

namespace {

// (+-1)^j C(j + power - 1, power - 1)
Integer binomial_weight(Sign sign, unsigned power, std::uint64_t j) {
  Integer c = binomial(static_cast<long>(j + power - 1), static_cast<long>(power - 1));
  if (sign == Sign::plus && j % 2 == 1) c = -c;
  return c;
}

}  // namespace

TruncatedSeries binomial_series(Sign sign, unsigned power, std::size_t order) {
  std::vector<ExactValue> v(order + 1);
  for (std::size_t j = 0; j <= order; ++j) v[j] = binomial_weight(sign, power, j);
  return TruncatedSeries(std::move(v));
}

TruncatedSeries series(const LambertSpec& spec, std::size_t order) {
  spec.validate();
  std::vector<ExactValue> out(order + 1);
  std::vector<Integer> weights;
  for (std::uint64_t k = spec.t;; ++k) {
    const long e = spec.alpha * static_cast<long>(k) - spec.beta;
    const auto ue = static_cast<std::size_t>(e);
    if (ue * spec.m > order) break;
    const ExactValue fk = spec.f(k);
    if (fk.is_zero()) continue;
    for (std::size_t j = 0; ue * (spec.m + j) <= order; ++j) {
      if (weights.size() <= j) weights.push_back(binomial_weight(spec.sign, spec.power, j));
      out[ue * (spec.m + j)] += fk * ExactValue(weights[j]);
    }
  }
  return TruncatedSeries(std::move(out));
}

ExactValue coefficient(const LambertSpec& spec, std::uint64_t n) {
  spec.validate();
  if (n == 0) return {};
  ExactValue acc;
  for (std::uint64_t e : FactorSieve::shared().divisors(n)) {
    const auto se = static_cast<long>(e);
    if ((se + spec.beta) % spec.alpha != 0) continue;
    const auto k = static_cast<std::uint64_t>((se + spec.beta) / spec.alpha);
    if (k < spec.t) continue;
    const std::uint64_t quotient = n / e;
    if (quotient < spec.m) continue;
    const ExactValue fk = spec.f(k);
    if (fk.is_zero()) continue;
    acc += fk * ExactValue(binomial_weight(spec.sign, spec.power, quotient - spec.m));
  }
  return acc;
}

TruncatedSeries lambert(const ArithmeticFunction& f, std::size_t order) {
  return series(LambertSpec(f), order);
}

TruncatedSeries modified(const ArithmeticFunction& f, std::size_t order) {
  LambertSpec spec(f);
  spec.sign = Sign::plus;
  TruncatedSeries alternating = series(spec, order);
  const TruncatedSeries plain = lambert(f, order);
  const TruncatedSeries folded = plain - ExactValue(2) * compose_power(plain, 2);
  if (!(alternating == folded)) {
    throw std::logic_error("modified Lambert series: the two constructions differ");
  }
  return alternating;
}

TruncatedSeries power_argument(const ArithmeticFunction& f, unsigned k, std::size_t order) {
  if (k < 1) throw DomainError("power_argument needs k >= 1");
  std::vector<ExactValue> out(order + 1);
  for (std::uint64_t n = 1;; ++n) {
    std::uint64_t e = 1;
    bool overflow = false;
    for (unsigned i = 0; i < k; ++i) {
      e *= n;
      if (e > order) {
        overflow = true;
        break;
      }
    }
    if (overflow) break;
    const ExactValue fn = f(n);
    if (fn.is_zero()) continue;
    for (std::size_t idx = e; idx <= order; idx += e) out[idx] += fn;
  }
  return TruncatedSeries(std::move(out));
}

DerivativeExpansion derivative_expansion(unsigned i, unsigned j, std::size_t order) {
  if (i < 1 || j < 1) throw DomainError("derivative_expansion needs i, j >= 1");
  LambertSpec term(builtin("eps"));
  term.alpha = i;
  const TruncatedSeries base = series(term, order);  // q^i / (1 - q^i)
  TruncatedSeries formal = shift_up(derivative(base, j), j, order);

  TruncatedSeries printed(order);
  TruncatedSeries corrected(order);
  for (unsigned m = 0; m <= j; ++m) {
    const Integer s1 = stirling1(j, m);
    if (s1 == 0) continue;
    Integer ipow = 1;
    for (unsigned r = 0; r < m; ++r) ipow *= i;
    for (unsigned k = 0; k <= m; ++k) {
      const Integer s2 = stirling2(m, k);
      if (s2 == 0) continue;
      const Integer base_weight = s1 * s2 * factorial(k) * ipow;
      const TruncatedSeries geom = compose_power(binomial_series(Sign::minus, k + 1, order), i);
      const Integer printed_weight = (j - k) % 2 == 0 ? base_weight : Integer(-base_weight);
      const Integer corrected_weight = (j - m) % 2 == 0 ? base_weight : Integer(-base_weight);
      printed = printed + ExactValue(printed_weight) * geom;
      corrected = corrected + ExactValue(corrected_weight) * shift_up(geom, std::size_t{i} * k, order);
    }
  }
  return {std::move(formal), std::move(printed), std::move(corrected)};
}

TruncatedSeries ogf(const ArithmeticFunction& f, std::size_t order) {
  std::vector<ExactValue> out(order + 1);
  for (std::size_t n = 1; n <= order; ++n) out[n] = f(n);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries lambert_double_sum(const ArithmeticFunction& f, const ArithmeticFunction& g,
                                   std::size_t order) {
  const TruncatedSeries lg = lambert(g, order);
  std::vector<ExactValue> out(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    const ExactValue fn = f(n);
    if (fn.is_zero()) continue;
    for (std::size_t m = 1; m * n <= order; ++m) {
      if (!lg[m].is_zero()) out[m * n] += fn * lg[m];
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries modified_double_sum(const ArithmeticFunction& f, const ArithmeticFunction& g,
                                    std::size_t order) {
  const TruncatedSeries lg = lambert(g, order);
  const TruncatedSeries inner = lg - ExactValue(2) * compose_power(lg, 2);
  std::vector<ExactValue> out(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    const ExactValue fn = f(n);
    if (fn.is_zero()) continue;
    for (std::size_t m = 1; m * n <= order; ++m) {
      if (!inner[m].is_zero()) out[m * n] += fn * inner[m];
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries ogf_from_lambert(const ArithmeticFunction& f, std::size_t order) {
  return lambert_double_sum(builtin("mu"), f, order);
}

TruncatedSeries summatory_ogf(const ArithmeticFunction& f, std::size_t order) {
  return ogf_from_lambert(f, order) * binomial_series(Sign::minus, 1, order);
}

}  // namespace lamcat
