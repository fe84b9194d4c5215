#include "lamcat/special_sums.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lamcat {

namespace {

const FactorSieve& sieve() { return FactorSieve::shared(); }

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

ArithmeticFunction make(std::string name, ArithmeticFunction::Eval eval) {
  return {std::move(name), std::move(eval)};
}

TruncatedSeries from_coefficients(std::size_t order, const std::function<ExactValue(std::uint64_t)>& coeff) {
  std::vector<ExactValue> v(order + 1);
  for (std::size_t n = 1; n <= order; ++n) v[n] = coeff(n);
  return TruncatedSeries(std::move(v));
}

// 1 / (1 - q^d) to the given order.
TruncatedSeries geometric(std::uint64_t d, std::size_t order) {
  std::vector<ExactValue> v(order + 1);
  for (std::size_t i = 0; i <= order; i += d) v[i] = 1;
  return TruncatedSeries(std::move(v));
}

using Poly = std::vector<Rational>;

// Remainder of p modulo the monic polynomial m.
Poly poly_mod(Poly p, const std::vector<Integer>& m) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = p.size(); i-- > dm;) {
    const Rational c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) p[i - dm + j] -= c * Rational(m[j]);
  }
  if (p.size() > dm) p.resize(dm);
  return p;
}

}  // namespace

TruncatedSeries cyclotomic_phi_tilde(std::uint64_t n, std::size_t order) {
  if (n == 0) throw DomainError("cyclotomic_phi_tilde needs n >= 1");
  TruncatedSeries acc(order);
  for (std::uint64_t d : sieve().divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    acc = acc + ExactValue(static_cast<long>(d) * mu) * geometric(d, order);
  }
  return acc;
}

bool cyclotomic_reconstruction(std::uint64_t n, std::size_t order) {
  TruncatedSeries acc(order);
  for (std::uint64_t d : sieve().divisors(n)) acc = acc + cyclotomic_phi_tilde(d, order);
  return ExactValue(Rational(1, static_cast<long>(n))) * acc == geometric(n, order);
}

ExactValue ramanujan_coefficient_formula(const ArithmeticFunction& f, std::uint64_t x) {
  ExactValue acc;
  for (std::uint64_t n = 1; n <= x; ++n) {
    Integer inner = 0;
    for (std::uint64_t d : sieve().divisors(n)) inner += ramanujan_c(d, x);
    if (inner == 0) continue;
    acc += f(n) * ExactValue(Rational(inner, static_cast<long>(n)));
  }
  return acc;
}

ExactValue ramanujan_coefficient_formula_middle(const ArithmeticFunction& f, std::uint64_t x) {
  ExactValue acc;
  for (std::uint64_t d = 1; d <= x; ++d) {
    const Integer c = ramanujan_c(d, x);
    if (c == 0) continue;
    ExactValue inner;
    for (std::uint64_t n = 1; n <= x / d; ++n) {
      inner += f(n * d) * ExactValue(Rational(1, static_cast<long>(n * d)));
    }
    acc += ExactValue(c) * inner;
  }
  return acc;
}

ExactValue apostol_sum(const ApostolSpec& spec, std::uint64_t n) {
  if (spec.m == 0 || n == 0) throw DomainError("apostol_sum needs m, n >= 1");
  ExactValue acc;
  for (std::uint64_t d : sieve().divisors(gcd(spec.m, n))) {
    const ExactValue fd = spec.f(d);
    if (fd.is_zero()) continue;
    const std::uint64_t arg = spec.variant == ApostolVariant::s1 ? spec.m / d : (spec.m / d) * (n / d);
    acc += fd * spec.g(arg);
  }
  return acc;
}

ApostolCheck apostol_lambert_check(const ApostolSpec& spec, std::size_t order) {
  const ArithmeticFunction s = make("S", [spec](std::uint64_t n) { return apostol_sum(spec, n); });
  ApostolCheck out{lambert(s, order), TruncatedSeries(order), std::nullopt};
  if (spec.variant == ApostolVariant::s1) {
    const SequenceWindow fg1 = convolve(convolve(spec.f, spec.g, spec.m),
                                        SequenceWindow(std::vector<ExactValue>(spec.m, ExactValue(1))));
    out.rhs = from_coefficients(order, [&](std::uint64_t n) { return fg1(gcd(spec.m, n)); });
    return out;
  }
  const std::uint64_t a = spec.m;
  auto side = [&](bool corrected) {
    return from_coefficients(order, [&](std::uint64_t m) {
      ExactValue acc;
      for (std::uint64_t d : sieve().divisors(gcd(a, m))) {
        const ExactValue fd = spec.f(d);
        if (fd.is_zero()) continue;
        for (std::uint64_t r : sieve().divisors(m / d)) {
          acc += fd * spec.g(corrected ? a * r / d : a * r);
        }
      }
      return acc;
    });
  };
  out.rhs = side(false);
  out.rhs_corrected = side(true);
  return out;
}

std::vector<Rational> apostol_fourier(const ApostolSpec& spec, FourierReading reading) {
  const std::uint64_t m = spec.m;
  std::vector<Rational> a(m);
  for (std::uint64_t k = 1; k <= m; ++k) {
    ExactValue acc;
    for (std::uint64_t d : sieve().divisors(gcd(m, k))) {
      if (reading == FourierReading::standard) {
        acc += spec.g(d) * spec.f(m / d) * ExactValue(Rational(static_cast<long>(d), static_cast<long>(m)));
      } else {
        acc += spec.g(d) * spec.f(k / d) * ExactValue(Rational(static_cast<long>(d), static_cast<long>(k)));
      }
    }
    a[k - 1] = acc.as_rational();
  }
  return a;
}

std::vector<Integer> cyclotomic_polynomial(std::uint64_t m) {
  if (m == 0) throw DomainError("cyclotomic_polynomial needs m >= 1");
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> p(m + 1, Integer(0));
  p[0] = -1;
  p[m] = 1;
  for (std::uint64_t d : sieve().divisors(m)) {
    if (d == m) continue;
    const std::vector<Integer> phi = cyclotomic_polynomial(d);
    const std::size_t dd = phi.size() - 1;
    std::vector<Integer> quotient(p.size() - dd, Integer(0));
    for (std::size_t i = p.size(); i-- > dd;) {
      const Integer c = p[i];
      quotient[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= c * phi[j];
    }
    p = std::move(quotient);
  }
  return p;
}

std::optional<Rational> fourier_value(const std::vector<Rational>& coeffs, std::uint64_t n,
                                      FourierReading reading) {
  const std::uint64_t m = coeffs.size();
  Poly p(m, Rational(0));
  for (std::uint64_t k = 1; k <= m; ++k) {
    const Rational& c = reading == FourierReading::printed ? coeffs[m - 1] : coeffs[k - 1];
    p[(k * n) % m] += c;
  }
  const Poly r = poly_mod(std::move(p), cyclotomic_polynomial(m));
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return r.empty() ? Rational(0) : r[0];
}

std::complex<double> fourier_value_numeric(const std::vector<Rational>& coeffs, std::uint64_t n,
                                           FourierReading reading) {
  const std::uint64_t m = coeffs.size();
  std::complex<double> acc{};
  for (std::uint64_t k = 1; k <= m; ++k) {
    const Rational& c = reading == FourierReading::printed ? coeffs[m - 1] : coeffs[k - 1];
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * n) % m) / static_cast<double>(m);
    acc += c.convert_to<double>() * std::polar(1.0, angle);
  }
  return acc;
}

std::optional<std::uint64_t> apostol_fourier_mismatch(const ApostolSpec& spec, FourierReading reading) {
  const std::vector<Rational> a = apostol_fourier(spec, reading);
  for (std::uint64_t n = 1; n <= 3 * spec.m; ++n) {
    const std::optional<Rational> v = fourier_value(a, n, reading);
    if (!v || !(ExactValue(*v) == apostol_sum(spec, n))) return n;
  }
  return std::nullopt;
}

ExactValue coprime_sum(const ArithmeticFunction& f, std::uint64_t n) {
  ExactValue acc;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (gcd(d, n) == 1) acc += f(d);
  }
  return acc;
}

ExactValue gcd_sum(const ArithmeticFunction& f, std::uint64_t n) {
  ExactValue acc;
  for (std::uint64_t d = 1; d <= n; ++d) acc += f(gcd(d, n));
  return acc;
}

std::vector<GcdTransformResult> gcd_transform_checks(const ArithmeticFunction& f, std::uint64_t m,
                                                     std::size_t order) {
  std::vector<GcdTransformResult> out;
  // sum_k (sum_{d | k} mu(d) / (1 - q^{md})) f(k) q^k
  auto mu_geometric_rhs = [&](std::uint64_t step) {
    TruncatedSeries acc(order);
    for (std::uint64_t k = 1; k <= order; ++k) {
      const ExactValue fk = f(k);
      if (fk.is_zero()) continue;
      TruncatedSeries inner(order);
      for (std::uint64_t d : sieve().divisors(k)) {
        const int mu = mobius(d);
        if (mu != 0) inner = inner + ExactValue(mu) * geometric(step * d, order);
      }
      acc = acc + fk * shift_up(inner, k, order);
    }
    return acc;
  };

  const ArithmeticFunction coprime = make("coprime", [f](std::uint64_t n) { return coprime_sum(f, n); });
  out.push_back({"coprime", lambert(coprime, order), mu_geometric_rhs(1)});

  const ArithmeticFunction restricted = make("gcd=m", [f, m](std::uint64_t n) {
    ExactValue acc;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (gcd(d, n) == m) acc += f(d);
    }
    return acc;
  });
  const TruncatedSeries rhs_m = mu_geometric_rhs(m);
  out.push_back({"gcd(d,n)=m lambert", lambert(restricted, order), rhs_m});
  out.push_back({"gcd(d,n)=m ogf", ogf(restricted, order), rhs_m});

  const ArithmeticFunction gcd_f = make("gcdsum", [f](std::uint64_t n) { return gcd_sum(f, n); });
  const TruncatedSeries chain_lhs = lambert(gcd_f, order);
  const SequenceWindow f_phi = convolve(f, builtin("phi"), order);
  out.push_back({"gcd chain: f*phi", chain_lhs, lambert(f_phi.as_function("f*phi"), order)});
  LambertSpec squared(f);
  squared.power = 2;
  out.push_back({"gcd chain: squared denominator", chain_lhs, series(squared, order)});
  const SequenceWindow f1 = convolve(f, builtin("one"), order);
  out.push_back({"gcd chain: (f*1)(gcd)", chain_lhs, from_coefficients(order, [&](std::uint64_t n) {
                   ExactValue acc;
                   for (std::uint64_t k = 1; k <= n; ++k) acc += f1(gcd(k, n));
                   return acc;
                 })});
  return out;
}

Integer kamp_phi(std::uint64_t a, std::uint64_t n) {
  Integer acc = 0;
  for (std::uint64_t d : sieve().divisors(gcd(a, n))) acc += Integer(d) * euler_phi(n / d);
  return acc;
}

namespace {

long tent(long k, long a) { return a - std::labs(k - a); }

Integer d_of_gcd(long x, long a) {
  if (x <= 0) return 0;
  return divisor_sigma(0, gcd(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(a)));
}

}  // namespace

TruncatedSeries kamp_numerator_minus(std::uint64_t a, std::size_t order) {
  std::vector<ExactValue> v(order + 1);
  const long sa = static_cast<long>(a);
  for (long k = 1; k <= 2 * sa && static_cast<std::size_t>(k) <= order; ++k) {
    const long t = tent(k, sa);
    v[static_cast<std::size_t>(k)] = Integer(t) * d_of_gcd(t, sa);
  }
  return TruncatedSeries(std::move(v));
}

TruncatedSeries kamp_numerator_plus(std::uint64_t a, std::size_t order) {
  std::vector<ExactValue> v(order + 1);
  const long sa = static_cast<long>(a);
  for (long k = 1; k <= 4 * sa && static_cast<std::size_t>(k) <= order; ++k) {
    const long t = tent(k, 2 * sa);
    Integer c = Integer(t) * d_of_gcd(t, sa);
    if (k % 2 == 0) {
      const long t2 = tent(k / 2, sa);
      c -= Integer(t2) * d_of_gcd(t2, sa);
    }
    v[static_cast<std::size_t>(k)] = c;
  }
  return TruncatedSeries(std::move(v));
}

KampResult kamp_identities(std::uint64_t a, std::size_t order) {
  const ArithmeticFunction phi_a = make("phi_a", [a](std::uint64_t n) { return ExactValue(kamp_phi(a, n)); });
  const TruncatedSeries minus_lhs = lambert(phi_a, order);
  LambertSpec plus(phi_a);
  plus.sign = Sign::plus;
  const TruncatedSeries plus_lhs = series(plus, order);
  const TruncatedSeries den_minus =
      pow(TruncatedSeries::one(order) - TruncatedSeries::monomial(order, a, 1), 2);
  const TruncatedSeries den_plus =
      pow(TruncatedSeries::one(order) - TruncatedSeries::monomial(order, 2 * a, 1), 2);
  return {minus_lhs == kamp_numerator_minus(a, order) / den_minus,
          plus_lhs == kamp_numerator_plus(a, order) / den_plus};
}

Integer lcm_sum(std::uint64_t n, unsigned power) {
  Integer acc = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    Integer l = Integer(k / gcd(k, n)) * n;
    Integer p = 1;
    for (unsigned i = 0; i < power; ++i) p *= l;
    acc += p;
  }
  return acc;
}

LcmCheck lcm_identity_checks(std::size_t order) {
  const ArithmeticFunction sums = make("lcmsum", [](std::uint64_t n) { return ExactValue(lcm_sum(n)); });
  const TruncatedSeries lhs = lambert(sums, order);
  const TruncatedSeries printed = from_coefficients(order, [](std::uint64_t m) {
    Integer inner = 0;
    for (std::uint64_t d : sieve().divisors(m)) {
      for (std::uint64_t r : sieve().divisors(m / d)) {
        const std::uint64_t e = m / (d * r);
        inner += Integer(d) * divisor_sigma(2, d) * mobius(e) * Integer(e * e);
      }
    }
    return ExactValue(Rational(divisor_sigma(1, m) + inner, 2));
  });
  const ArithmeticFunction mu_id2 =
      make("mu*id2", [](std::uint64_t n) { return ExactValue(Integer(mobius(n)) * Integer(n * n)); });
  const ArithmeticFunction id2_id3 =
      make("id2+id3", [](std::uint64_t n) { return ExactValue(Integer(n * n) + Integer(n * n * n)); });
  const SequenceWindow partial = convolve(builtin("id1"), mu_id2, order);
  const SequenceWindow full = convolve(partial, SequenceWindow::tabulate(id2_id3, order));
  std::vector<ExactValue> halved;
  for (const ExactValue& v : full.values()) halved.push_back(v * ExactValue(Rational(1, 2)));
  const TruncatedSeries f1_side = lambert(SequenceWindow(std::move(halved)).as_function("f1"), order);
  return {lhs == printed, lhs == f1_side};
}

ExactValue lcm_power_coefficient(unsigned power, std::uint64_t n) {
  const ArithmeticFunction inv_id2m = make("mu*id2m", [power](std::uint64_t k) {
    return ExactValue(Integer(mobius(k)) * Integer(ipow(k, 2 * power)));
  });
  ExactValue acc(divisor_sigma(power, n));
  for (unsigned i = 1; i <= power + 1; ++i) {
    const Rational w = Rational(binomial(power + 1, i)) * bernoulli(power + 1 - i) / Rational(power + 1);
    if (w == 0) continue;
    const SequenceWindow a = convolve(builtin("one"), builtin("id" + std::to_string(power)), n);
    const SequenceWindow b =
        convolve(a, SequenceWindow::tabulate(builtin("id" + std::to_string(power + i)), n));
    const SequenceWindow c = convolve(b, SequenceWindow::tabulate(inv_id2m, n));
    acc += ExactValue(w) * c(n);
  }
  return acc;
}

HadamardResult hadamard_product_lambert(const ArithmeticFunction& h, const ArithmeticFunction& f,
                                        std::size_t order) {
  const ArithmeticFunction hf = make("h*f", [h, f](std::uint64_t n) { return h(n) * f(n); });
  HadamardResult out{lambert(hf, order), TruncatedSeries(order), TruncatedSeries(order)};
  const SequenceWindow hmu = convolve(h, builtin("mu"), order);
  const TruncatedSeries lf = lambert(f, order);
  for (std::uint64_t d = 1; d <= order; ++d) {
    if (hmu(d).is_zero()) continue;
    out.multisection = out.multisection + hmu(d) * multisect(lf, d, 0);
    const ArithmeticFunction selected =
        make("sel", [f, d](std::uint64_t n) { return n % d == 0 ? f(n) : ExactValue(); });
    out.term_index = out.term_index + hmu(d) * lambert(selected, order);
  }
  return out;
}

ExactValue h_ab_sum(unsigned a, unsigned b, const ArithmeticFunction& f, const ArithmeticFunction& g,
                    std::uint64_t n) {
  if (b < 1 || b > a) throw DomainError("h_ab_sum needs 1 <= b <= a");
  ExactValue acc;
  for (std::uint64_t d = 1;; ++d) {
    const std::uint64_t da = ipow(d, a);
    if (da > n) break;
    if (n % da != 0) continue;
    acc += f(n / da) * g(n / ipow(d, b));
  }
  return acc;
}

HabCheck h_ab_checks(unsigned a, unsigned b, const ArithmeticFunction& f, const ArithmeticFunction& g,
                     std::size_t order) {
  const ArithmeticFunction h =
      make("h_ab", [a, b, f, g](std::uint64_t n) { return h_ab_sum(a, b, f, g, n); });
  HabCheck out{lambert(h, order), TruncatedSeries(order), ogf(h, order),
               lambert_double_sum(builtin("mu"), h, order)};
  const TruncatedSeries lhat = power_argument(f, a, order);
  for (std::uint64_t d = 1; d <= order; ++d) {
    ExactValue c;
    for (std::uint64_t r : sieve().divisors(d)) {
      const int mu = mobius(d / r);
      if (mu != 0) c += ExactValue(mu) * g(ipow(r, a - b));
    }
    if (!c.is_zero()) out.multisection_rhs = out.multisection_rhs + c * multisect(lhat, d, 0);
  }
  return out;
}

std::vector<DivisorSumIdentity> prime_log_divisor_sums(std::uint64_t n) {
  std::vector<DivisorSumIdentity> out;
  const std::vector<std::uint64_t> divisors = sieve().divisors(n);
  std::vector<std::uint64_t> primes;
  for (const PrimePower& pp : sieve().factor(n)) primes.push_back(pp.prime);
  const unsigned w = static_cast<unsigned>(primes.size());
  const std::uint64_t gamma = radical(n);
  auto log_of = [](std::uint64_t x) { return ExactValue::log_of(Rational(static_cast<long>(x))); };
  auto rat = [](std::uint64_t x) { return Rational(static_cast<long>(x)); };
  auto powi = [](Rational base, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
  };

  // omega-mu sums with f = Id1, phi, Id2, 1/Id1
  struct OmegaCase {
    std::string name;
    bool absolute;
    bool complete_form;
    std::function<Rational(std::uint64_t)> f;
  };
  const std::vector<OmegaCase> omega_cases = {
      {"O1 mu*omega*Id1", false, false, [&](std::uint64_t d) { return rat(d); }},
      {"O2 |mu|*omega*phi", true, false,
       [](std::uint64_t d) { return Rational(static_cast<long>(euler_phi(d))); }},
      {"O3 mu*omega*Id2", false, true, [&](std::uint64_t d) { return rat(d * d); }},
      {"O4 |mu|*omega/Id1", true, true, [&](std::uint64_t d) { return Rational(1) / rat(d); }},
  };
  for (const OmegaCase& c : omega_cases) {
    Rational lhs = 0;
    Rational plain = 0;
    for (std::uint64_t d : divisors) {
      const int mu = mobius(d);
      if (mu == 0) continue;
      const Rational weight = c.absolute ? Rational(1) : Rational(mu);
      lhs += weight * little_omega(d) * c.f(d);
      plain += weight * c.f(d);
    }
    Rational prod = 1;
    Rational sum = 0;
    for (std::uint64_t p : primes) {
      const Rational fp = c.f(p);
      prod *= c.absolute ? Rational(1) + fp : Rational(1) - fp;
      sum += c.absolute ? fp / (Rational(1) + fp) : fp / (fp - Rational(1));
    }
    const Rational rhs = (c.complete_form ? plain : prod) * sum;
    out.push_back({c.name, n, lhs, rhs});
  }

  auto divisor_log_sum = [&](const std::function<Rational(std::uint64_t)>& weight) {
    ExactValue acc;
    for (std::uint64_t d : divisors) {
      const Rational wd = weight(d);
      if (wd != 0 && d > 1) acc += ExactValue(wd) * log_of(d);
    }
    return acc;
  };
  auto prime_log_sum = [&](const std::function<Rational(std::uint64_t)>& weight) {
    ExactValue acc;
    for (std::uint64_t p : primes) acc += ExactValue::log_prime(p, weight(p));
    return acc;
  };
  const Rational phi_n = rat(euler_phi(n));

  out.push_back({"B1", n, divisor_log_sum([&](std::uint64_t d) { return Rational(mobius(d)) / rat(d); }),
                 ExactValue(phi_n / rat(n)) *
                     prime_log_sum([&](std::uint64_t p) { return Rational(1) / (Rational(1) - rat(p)); })});

  const unsigned k2 = 2;
  Rational psi = 1;
  for (std::uint64_t p : primes) psi *= Rational(1) + Rational(1) / powi(rat(p), k2);
  out.push_back({"B2 k=2", n, divisor_log_sum([&](std::uint64_t d) {
                   return Rational(mobius(d) != 0 ? 1 : 0) / powi(rat(d), k2);
                 }),
                 ExactValue(psi) *
                     prime_log_sum([&](std::uint64_t p) { return Rational(1) / (powi(rat(p), k2) + 1); })});

  out.push_back(
      {"B3", n, divisor_log_sum([&](std::uint64_t d) {
         return Rational(mobius(d) != 0 ? 1 : 0) / Rational(static_cast<long>(euler_phi(d)));
       }),
       ExactValue(rat(n) / phi_n) * prime_log_sum([&](std::uint64_t p) { return Rational(1) / rat(p); })});

  const ExactValue b4_lhs =
      divisor_log_sum([&](std::uint64_t d) { return Rational(mobius(d)) / Rational(divisor_sigma(0, d)); });
  out.push_back({"B4 printed", n, b4_lhs, ExactValue(Rational(-powi(2, w))) * log_of(gamma)});
  out.push_back({"B4 reading", n, b4_lhs, ExactValue(Rational(-1) / powi(2, w)) * log_of(gamma)});

  for (int e : {1, 2}) {
    const long k = 3;
    const long sgn = e == 1 ? -1 : 1;
    const ExactValue lhs = divisor_log_sum([&](std::uint64_t d) {
      const int mu = mobius(d);
      const Rational mue = e == 1 ? Rational(mu) : Rational(mu * mu);
      return mue * Rational(powi(rat(k), little_omega(d)));  // d_k(d) = k^omega(d) on squarefree d
    });
    const Rational rhs_scale = powi(Rational(1 + sgn * k), w) * Rational(k) / Rational(k + sgn);
    out.push_back({"B5 e=" + std::to_string(e) + " k=3", n, lhs, ExactValue(rhs_scale) * log_of(gamma)});
  }

  {
    const ExactValue lhs =
        divisor_log_sum([&](std::uint64_t d) { return Rational(mobius(d)) * Rational(divisor_sigma(1, d)); });
    const Rational scale = Rational(w % 2 == 0 ? 1 : -1) * rat(gamma);
    const ExactValue rhs =
        ExactValue(scale) *
        (log_of(gamma) + prime_log_sum([&](std::uint64_t p) { return Rational(1) / rat(p); }));
    out.push_back({"B6", n, lhs, rhs});
  }

  for (int e : {1, 2}) {
    const long sgn = e == 1 ? -1 : 1;
    const ExactValue lhs = divisor_log_sum([&](std::uint64_t d) {
      const int mu = mobius(d);
      return (e == 1 ? Rational(mu) : Rational(mu * mu)) * rat(d);
    });
    Rational prod = 1;
    for (std::uint64_t p : primes) prod *= Rational(1) + Rational(sgn) * rat(p);
    const ExactValue rhs =
        ExactValue(prod) * prime_log_sum([&](std::uint64_t p) { return rat(p) / (rat(p) + Rational(sgn)); });
    out.push_back({"B7 e=" + std::to_string(e) + " f=Id1", n, lhs, rhs});
  }

  for (long k = 1; k <= 5; ++k) {
    Rational lhs = 0;
    for (std::uint64_t d : divisors) {
      if (mobius(d) != 0) lhs += powi(Rational(k), little_omega(d));
    }
    out.push_back({"B8 k=" + std::to_string(k), n, lhs, powi(Rational(k + 1), w)});
  }
  return out;
}

}  // namespace lamcat
