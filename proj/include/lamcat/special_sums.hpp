#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lamcat/arith.hpp"
#include "lamcat/dirichlet.hpp"
#include "lamcat/lambert.hpp"
#include "lamcat/series.hpp"

namespace lamcat {

/// Phi~_n(q) = sum_{d | n} d mu(n / d) / (1 - q^d).
TruncatedSeries cyclotomic_phi_tilde(std::uint64_t n, std::size_t order);

/// Whether 1 / (1 - q^n) = (1/n) sum_{d | n} Phi~_d(q) to order N.
bool cyclotomic_reconstruction(std::uint64_t n, std::size_t order);

/// sum_{n <= x} (f(n) / n) sum_{d | n} c_d(x).
ExactValue ramanujan_coefficient_formula(const ArithmeticFunction& f, std::uint64_t x);
/// sum_{d <= x} c_d(x) sum_{n <= x/d} f(nd) / (nd).
ExactValue ramanujan_coefficient_formula_middle(const ArithmeticFunction& f, std::uint64_t x);

enum class ApostolVariant { s1, s2 };

struct ApostolSpec {
  ApostolVariant variant;
  ArithmeticFunction f;
  ArithmeticFunction g;
  std::uint64_t m;
};

/// S1: sum_{d | (m,n)} f(d) g(m/d);  S2: sum_{d | (m,n)} f(d) g(mn/d^2).
ExactValue apostol_sum(const ApostolSpec& spec, std::uint64_t n);

/// Both sides of the Lambert identity for the spec, to order N.
struct ApostolCheck {
  TruncatedSeries lhs;
  TruncatedSeries rhs;
  /// Only for S2: the right side with g(a r / d) in place of g(a r).
  std::optional<TruncatedSeries> rhs_corrected;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

ApostolCheck apostol_lambert_check(const ApostolSpec& spec, std::size_t order);

enum class FourierReading {
  printed,    // every term weighted by a_m with a_k = sum g(d) f(k/d) d/k
  k_indexed,  // a_k in the k-th term, same a_k
  standard,   // a_k = sum_{d | (m,k)} g(d) f(m/d) d/m
};

/// a_1, ..., a_m for the S1 spec under the given reading (exact).
std::vector<Rational> apostol_fourier(const ApostolSpec& spec, FourierReading reading);

/// sum_k a_k zeta_m^{kn} evaluated exactly in Q(zeta_m).  Returns nullopt if
/// the value is not rational.
std::optional<Rational> fourier_value(const std::vector<Rational>& coeffs, std::uint64_t n,
                                      FourierReading reading);

/// Same sum in floating point.
std::complex<double> fourier_value_numeric(const std::vector<Rational>& coeffs, std::uint64_t n,
                                           FourierReading reading);

/// First n in 1..3m where the reading fails to reproduce S1 exactly.
std::optional<std::uint64_t> apostol_fourier_mismatch(const ApostolSpec& spec, FourierReading reading);

/// Cyclotomic polynomial Phi_m as integer coefficients, low degree first.
std::vector<Integer> cyclotomic_polynomial(std::uint64_t m);

/// sum_{d <= n, (d, n) = 1} f(d).
ExactValue coprime_sum(const ArithmeticFunction& f, std::uint64_t n);
/// sum_{d <= n} f(gcd(d, n)).
ExactValue gcd_sum(const ArithmeticFunction& f, std::uint64_t n);

struct GcdTransformResult {
  std::string name;
  TruncatedSeries lhs;
  TruncatedSeries rhs;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

/// The coprime-sum identity, the two readings of the (d,k)=m variant for the
/// given m, and the gcd-argument chain.
std::vector<GcdTransformResult> gcd_transform_checks(const ArithmeticFunction& f, std::uint64_t m,
                                                     std::size_t order);

/// phi_a(n) = sum_{d | (a,n)} d phi(n/d).
Integer kamp_phi(std::uint64_t a, std::uint64_t n);
/// sum_{k=1}^{2a} (a - |k - a|) d(gcd(a - |k - a|, a)) q^k.
TruncatedSeries kamp_numerator_minus(std::uint64_t a, std::size_t order);
/// p[a](q) with the Iverson bracket on even k, k = 1..4a.
TruncatedSeries kamp_numerator_plus(std::uint64_t a, std::size_t order);

struct KampResult {
  bool minus_holds;
  bool plus_holds;
};

KampResult kamp_identities(std::uint64_t a, std::size_t order);

/// sum_{k <= n} lcm(k, n)^power.
Integer lcm_sum(std::uint64_t n, unsigned power = 1);

/// Whether L over the lcm sums equals the printed sigma_2 double sum, and
/// L_{f1} with f1 = (Id1 * mu Id2 * (Id2 + Id3)) / 2, to order N.
struct LcmCheck {
  bool printed_holds;
  bool f1_holds;
};
LcmCheck lcm_identity_checks(std::size_t order);

/// Coefficient of the second lcm identity under the q^n reading.
ExactValue lcm_power_coefficient(unsigned power, std::uint64_t n);

/// Three sides of the Hadamard-product identity for h, f.
struct HadamardResult {
  /// sum h(n) f(n) q^n / (1 - q^n)
  TruncatedSeries direct;
  /// sum_d (h * mu)(d) multisect(L_f, d, 0), the root-of-unity average made exact.
  TruncatedSeries multisection;
  /// sum_d (h * mu)(d) sum_{d | n} f(n) q^n / (1 - q^n)
  TruncatedSeries term_index;
};

HadamardResult hadamard_product_lambert(const ArithmeticFunction& h, const ArithmeticFunction& f,
                                        std::size_t order);

/// h_{a,b}(f, g; n) = sum_{d^a | n} f(n / d^a) g(n / d^b).
ExactValue h_ab_sum(unsigned a, unsigned b, const ArithmeticFunction& f, const ArithmeticFunction& g,
                    std::uint64_t n);

struct HabCheck {
  TruncatedSeries lambert_lhs;
  /// sum_d (sum_{r | d} g(r^{a-b}) mu(d/r)) multisect(Lhat_{f,a}, d, 0)
  TruncatedSeries multisection_rhs;
  TruncatedSeries ogf_lhs;
  /// sum_n mu(n) L_h(q^n)
  TruncatedSeries ogf_rhs;
};

HabCheck h_ab_checks(unsigned a, unsigned b, const ArithmeticFunction& f, const ArithmeticFunction& g,
                     std::size_t order);

struct DivisorSumIdentity {
  std::string name;
  std::uint64_t n;
  ExactValue lhs;
  ExactValue rhs;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

/// Both sides of the omega-mu divisor sums and the prime-log divisor sums at
/// n, for a representative f per identity.
std::vector<DivisorSumIdentity> prime_log_divisor_sums(std::uint64_t n);

}  // namespace lamcat
