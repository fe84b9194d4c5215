#include "doctest.h"
#include "lamcat/factorization.hpp"
#include "oracles.hpp"

using namespace lamcat;

namespace {

bool is_identity(const RationalMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("s_{n,k} is a signed count of distinct partitions") {
  // [q^n] (q;q)_inf q^k / (1 - q^k) = sum_{j >= 1} [q^{n - jk}] (q;q)_inf
  const auto s = s_triangle(Sign::minus, 18);
  for (long n = 1; n <= 18; ++n) {
    for (long k = 1; k <= n; ++k) {
      long expect = 0;
      for (long j = 1; j * k <= n; ++j) expect += oracle::signed_distinct(n - j * k);
      CHECK(s(n, k) == Rational(expect));
    }
  }
}

TEST_CASE("closed-form inverse of the classical triangle") {
  const auto s = s_triangle(Sign::minus, 30);
  const auto inv = s_inverse_closed(30);
  CHECK(is_identity(s.matrix() * inv.matrix()));
  CHECK(is_identity(inv.matrix() * s.matrix()));
  CHECK(inv.matrix() == s.inverse().matrix());
}

TEST_CASE("classical factorization reproduces L_f") {
  for (Sign sign : {Sign::minus, Sign::plus}) {
    const auto s = s_triangle(sign, 40);
    const auto kind = sign == Sign::minus ? TriangleKind::classical_minus : TriangleKind::classical_plus;
    const auto c = triangle_c(kind, 1, 0, 40);
    for (const char* name : {"phi", "mu", "sigma1"}) {
      const auto f = builtin(name);
      LambertSpec spec(f);
      spec.sign = sign;
      CHECK(factorization_expansion(s, c, SequenceWindow::tabulate(f, 40)) == series(spec, 40));
    }
  }
}

TEST_CASE("generalized (2, 1) factorization") {
  for (auto kind : {TriangleKind::generalized_distinct, TriangleKind::generalized_unrestricted}) {
    const auto s = s_triangle(kind, 2, 1, 24);
    const auto c = triangle_c(kind, 2, 1, 24);
    for (const char* name : {"one", "mu", "id1"}) {
      LambertSpec spec(builtin(name));
      spec.alpha = 2;
      spec.beta = 1;
      CAPTURE(name);
      CAPTURE(to_string(kind));
      CHECK(factorization_expansion(s, c, SequenceWindow::tabulate(spec.f, 24)) == series(spec, 24));
    }
  }
}

TEST_CASE("pentagonal recurrence for divisor sums") {
  const auto sigma1 = builtin("sigma1");
  for (std::size_t n = 0; n < 100; ++n) {
    CHECK(pentagonal_recurrence(builtin("id1"), n) == sigma1(n + 1));
  }
  const auto phi = builtin("phi");
  for (std::size_t x = 0; x < 40; ++x) {
    CHECK(pentagonal_summatory(phi, x) == ExactValue(static_cast<long>((x + 1) * (x + 2) / 2)));
  }
  CHECK(pentagonal_limit(0, 1) == 0);
  CHECK(pentagonal_limit(5, -1) == 2);
}

TEST_CASE("custom factorization pairs") {
  std::vector<ExactValue> cc(31);
  cc[0] = ExactValue(1);
  cc[1] = ExactValue(-1);
  cc[2] = ExactValue(-1);
  const TruncatedSeries c(cc);
  for (const char* g : {"id1", "one", "phi"}) {
    for (const char* f : {"phi", "mu", "sigma2"}) {
      CAPTURE(g);
      CAPTURE(f);
      CHECK(custom_pair_identity(c, builtin(g), builtin(f), 30));
    }
  }
  const auto pair = custom_pair(c, builtin("id1"), 20);
  CHECK(is_identity(pair.inverse.matrix() * pair.forward.matrix()));
}

TEST_CASE("generalized a-bar readings") {
  std::vector<ExactValue> cc(41);
  cc[0] = ExactValue(1);
  cc[1] = ExactValue(-1);
  cc[2] = ExactValue(-1);
  const TruncatedSeries c(cc);
  const auto a = SequenceWindow::tabulate(builtin("phi"), 40);
  CHECK_FALSE(generalized_abar_mismatch(a, 3, 1, c, builtin("id1"), AbarReading::corrected).has_value());
  CHECK(generalized_abar_mismatch(a, 3, 1, c, builtin("id1"), AbarReading::printed).has_value());
  // beta = 0 makes the two readings coincide.
  CHECK(generalized_abar(a, 2, 0, builtin("id1"), AbarReading::printed) ==
        generalized_abar(a, 2, 0, builtin("id1"), AbarReading::corrected));
}

TEST_CASE("singular triangles are reported") {
  RationalMatrix m = RationalMatrix::Zero(2, 2);
  m(0, 0) = 1;
  const FactorizationTriangle t(m, TriangleKind::custom);
  CHECK_THROWS_AS(t.inverse(), SingularTriangle);
}
