#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "lamcat/arith.hpp"
#include "lamcat/lambert.hpp"
#include "lamcat/series.hpp"
#include "oracles.hpp"

using namespace lamcat;

TEST_CASE("exact values print as fractions and log combinations") {
  CHECK(ExactValue(Rational(3, 6)).to_string() == "1/2");
  CHECK(ExactValue(-4).to_string() == "-4");
  const ExactValue v = ExactValue(Rational(1, 3)) + ExactValue::log_prime(2, Rational(-1, 2));
  CHECK(v.to_string() == "1/3 + (-1/2)*log(2)");
  CHECK(ExactValue::log_of(Rational(12)) == ExactValue::log_prime(2, 2) + ExactValue::log_prime(3));
  CHECK(ExactValue::log_of(Rational(1)).is_zero());
  CHECK_THROWS_AS(ExactValue::log_prime(2) * ExactValue::log_prime(3), DomainError);
  CHECK_THROWS_AS(ExactValue(1) / ExactValue::log_prime(5), DomainError);
  CHECK((ExactValue::log_of(Rational(6)) - ExactValue::log_prime(3)) == ExactValue::log_prime(2));
}

TEST_CASE("products match schoolbook convolution") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 25)(rng);
    const auto a = oracle::random_series(rng, n);
    const auto b = oracle::random_series(rng, n);
    CHECK(oracle::coeffs(a * b) == oracle::cauchy(oracle::coeffs(a), oracle::coeffs(b), n));
  }
}

TEST_CASE("reciprocal is a two-sided inverse") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 30)(rng);
    const auto a = oracle::random_series(rng, n, true);
    CHECK(a * reciprocal(a) == TruncatedSeries::one(n));
  }
  CHECK_THROWS_AS(reciprocal(TruncatedSeries::q(5)), DomainError);
}

TEST_CASE("mixed orders truncate to the smaller one") {
  const auto a = TruncatedSeries::one(10);
  const auto b = TruncatedSeries::q(4);
  CHECK((a + b).order() == 4);
  CHECK((a * b).order() == 4);
}

TEST_CASE("log and exp are inverse") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = oracle::random_series(rng, 15);
    std::vector<ExactValue> c(a.coeffs().begin(), a.coeffs().end());
    c[0] = ExactValue(0);
    const TruncatedSeries z(std::move(c));
    CHECK(log_series(exp_series(z)) == z);
  }
  CHECK_THROWS_AS(log_series(TruncatedSeries::q(3)), DomainError);
}

TEST_CASE("pow agrees with repeated products") {
  std::mt19937 rng(3);
  const auto a = oracle::random_series(rng, 12, true);
  TruncatedSeries acc = TruncatedSeries::one(12);
  for (long k = 0; k <= 6; ++k) {
    CHECK(pow(a, k) == acc);
    CHECK(pow(a, -k) * acc == TruncatedSeries::one(12));
    acc = acc * a;
  }
}

TEST_CASE("compose_power and derivative") {
  const auto geo = reciprocal(TruncatedSeries::one(20) - TruncatedSeries::q(20));
  const auto sub = compose_power(geo, 3);
  for (std::size_t n = 0; n <= 20; ++n) CHECK(sub[n] == ExactValue(n % 3 == 0 ? 1 : 0));
  // d/dq 1/(1-q) = 1/(1-q)^2 with coefficients n + 1.
  const auto d = derivative(geo);
  CHECK(d.order() == 19);
  for (std::size_t n = 0; n <= 19; ++n) CHECK(d[n] == ExactValue(static_cast<long>(n + 1)));
  const auto d3 = derivative(geo, 3);
  CHECK(d3[2] == ExactValue(60));  // 5*4*3
}

TEST_CASE("pochhammer products") {
  // (q; q)_inf via the pentagonal theorem, signed distinct-partition counts.
  const auto euler = pochhammer(1, 1, std::nullopt, 30);
  for (long n = 0; n <= 30; ++n) CHECK(euler[n] == ExactValue(oracle::signed_distinct(n)));
  // (q; q)_3 = (1-q)(1-q^2)(1-q^3)
  const auto finite = pochhammer(1, 1, 3, 10);
  const auto one = TruncatedSeries::one(10);
  auto expect = (one - TruncatedSeries::q(10)) * (one - TruncatedSeries::monomial(10, 2, 1)) *
                (one - TruncatedSeries::monomial(10, 3, 1));
  CHECK(finite == expect);
  // (-q; q)_inf counts partitions into distinct parts.
  const auto plus = pochhammer(1, 1, std::nullopt, 12, true);
  CHECK(plus[10] == ExactValue(10));
}

TEST_CASE("multisection matches the root-of-unity average") {
  const std::size_t order = 20;
  const std::size_t d = 3;
  const auto lf = lambert(builtin("phi"), order);
  const auto cut = multisect(lf, d, 0);
  // (1/d) sum_m L_phi(w^m q) evaluated coefficientwise in floating point.
  for (std::size_t n = 0; n <= order; ++n) {
    std::complex<double> avg = 0;
    for (std::size_t m = 0; m < d; ++m) {
      const double angle = 2 * std::numbers::pi * static_cast<double>(m * n) / d;
      avg += lf[n].as_rational().convert_to<double>() * std::polar(1.0, angle);
    }
    avg /= static_cast<double>(d);
    CHECK(std::abs(avg - cut[n].as_rational().convert_to<double>()) < 1e-9);
  }
}

TEST_CASE("series rendering") {
  const auto s = TruncatedSeries::one(3) - ExactValue(Rational(1, 2)) * TruncatedSeries::q(3);
  CHECK(to_string(s) == "1 + -1/2*q + O(q^4)");
  CHECK(to_string(TruncatedSeries(5)) == "0 + O(q^6)");
}
