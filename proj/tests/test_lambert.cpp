#include "doctest.h"
#include "lamcat/dirichlet.hpp"
#include "lamcat/lambert.hpp"
#include "oracles.hpp"

using namespace lamcat;

namespace {

/// [q^n] of sum_{k >= t} f(k) q^{m e} / (1 -+ q^e)^power by expanding every
/// term as a dense series and adding.
Rational brute_coefficient(const LambertSpec& s, std::size_t n) {
  Rational total = 0;
  for (long k = s.t; s.alpha * k - s.beta <= static_cast<long>(n); ++k) {
    const long e = s.alpha * k - s.beta;
    if (e <= 0) continue;
    // (1 -+ x)^{-power} = sum_j C(j + power - 1, power - 1) (+-x)^j
    for (long j = 0; static_cast<long>(s.m) * e + j * e <= static_cast<long>(n); ++j) {
      if (static_cast<long>(s.m) * e + j * e != static_cast<long>(n)) continue;
      Rational c = Rational(binomial(j + s.power - 1, s.power - 1));
      if (s.sign == Sign::plus && j % 2) c = -c;
      total += c * s.f(static_cast<std::uint64_t>(k)).as_rational();
    }
  }
  return total;
}

}  // namespace

TEST_CASE("classical Lambert coefficients are divisor sums") {
  for (const char* name : {"mu", "phi", "id1", "liouville", "absmu", "jordan2", "sigma1"}) {
    const auto f = builtin(name);
    const auto s = lambert(f, 60);
    CAPTURE(name);
    CHECK(s[0].is_zero());
    for (std::uint64_t n = 1; n <= 60; ++n) {
      ExactValue sum;
      for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) sum += f(d);
      }
      CHECK(s[n] == sum);
    }
  }
}

TEST_CASE("series and coefficient agree with brute force on random specs") {
  std::mt19937 rng(404);
  const char* names[] = {"mu", "phi", "one", "id1", "liouville", "d"};
  for (int trial = 0; trial < 60; ++trial) {
    LambertSpec spec(builtin(names[rng() % 6]));
    spec.alpha = std::uniform_int_distribution<long>(1, 4)(rng);
    spec.beta = std::uniform_int_distribution<long>(0, spec.alpha - 1)(rng);
    spec.sign = rng() % 2 ? Sign::plus : Sign::minus;
    spec.power = std::uniform_int_distribution<unsigned>(1, 3)(rng);
    spec.m = std::uniform_int_distribution<unsigned>(1, 3)(rng);
    spec.t = std::uniform_int_distribution<unsigned>(1, 2)(rng);
    const std::size_t order = 30;
    const auto s = series(spec, order);
    for (std::size_t n = 0; n <= order; ++n) {
      CAPTURE(trial);
      CAPTURE(n);
      CHECK(s[n].as_rational() == brute_coefficient(spec, n));
      if (n) CHECK(coefficient(spec, n) == s[n]);
    }
  }
}

TEST_CASE("spec validation") {
  LambertSpec s(builtin("one"));
  s.alpha = 2;
  s.beta = 2;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s.beta = 1;
  CHECK_NOTHROW(s.validate());
  s.power = 0;
  CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("modified series and double sums") {
  const auto phi = builtin("phi");
  const auto d = builtin("d");
  const auto mod = modified(phi, 40);
  LambertSpec plus(phi);
  plus.sign = Sign::plus;
  CHECK(mod == series(plus, 40));
  // sum_n f(n) L_g(q^n) = L_{f*g}
  const auto fg = convolve(phi, d, 40).as_function("phi*d");
  CHECK(lambert_double_sum(phi, d, 40) == lambert(fg, 40));
  CHECK(modified_double_sum(phi, d, 40) == modified(fg, 40));
}

TEST_CASE("generating-function helpers") {
  const auto sigma1 = builtin("sigma1");
  CHECK(ogf_from_lambert(sigma1, 50) == ogf(sigma1, 50));
  const auto s = summatory_ogf(builtin("phi"), 30);
  for (std::size_t x = 1; x <= 30; ++x) CHECK(s[x] == summatory(builtin("phi"), x));
  const auto p = power_argument(builtin("one"), 2, 50);
  for (std::uint64_t n = 1; n <= 50; ++n) {
    long c = 0;
    for (std::uint64_t k = 1; k * k <= n; ++k) c += n % (k * k) == 0;
    CHECK(p[n] == ExactValue(c));
  }
  const auto b = binomial_series(Sign::minus, 3, 10);
  CHECK(b[4] == ExactValue(15));
}

TEST_CASE("derivative expansion readings") {
  for (unsigned i = 1; i <= 4; ++i) {
    for (unsigned j = 1; j <= 5; ++j) {
      const auto e = derivative_expansion(i, j, 40);
      CAPTURE(i);
      CAPTURE(j);
      CHECK(e.corrected == e.formal);
    }
  }
  CHECK_FALSE(derivative_expansion(2, 3, 40).printed == derivative_expansion(2, 3, 40).formal);
}
