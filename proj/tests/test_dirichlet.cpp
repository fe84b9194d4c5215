#include "doctest.h"
#include "lamcat/dirichlet.hpp"
#include "oracles.hpp"

using namespace lamcat;

namespace {

SequenceWindow random_window(std::mt19937& rng, std::size_t n, bool invertible) {
  std::vector<ExactValue> v(n);
  for (auto& x : v) x = oracle::random_rational(rng, 5);
  if (invertible && v[0].is_zero()) v[0] = ExactValue(Rational(3, 2));
  return SequenceWindow(std::move(v));
}

std::function<Rational(std::uint64_t)> view(const SequenceWindow& w) {
  return [&w](std::uint64_t n) { return w(n).as_rational(); };
}

}  // namespace

TEST_CASE("convolution matches the divisor-sum definition") {
  std::mt19937 rng(101);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_window(rng, 60, false);
    const auto g = random_window(rng, 60, false);
    const auto h = convolve(f, g);
    for (std::uint64_t n = 1; n <= 60; ++n)
      CHECK(h(n).as_rational() == oracle::dirichlet(view(f), view(g), n));
  }
  const auto phi1 = convolve(builtin("phi"), builtin("one"), 100);
  for (std::uint64_t n = 1; n <= 100; ++n) CHECK(phi1(n) == ExactValue(static_cast<long>(n)));
}

TEST_CASE("convolution is commutative and associative") {
  std::mt19937 rng(7);
  const auto f = random_window(rng, 48, false);
  const auto g = random_window(rng, 48, false);
  const auto h = random_window(rng, 48, false);
  CHECK(convolve(f, g) == convolve(g, f));
  CHECK(convolve(convolve(f, g), h) == convolve(f, convolve(g, h)));
}

TEST_CASE("recursive inverse is a Dirichlet inverse") {
  std::mt19937 rng(33);
  const auto eps = SequenceWindow::tabulate(builtin("eps"), 80);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_window(rng, 80, true);
    CHECK(convolve(f, inverse_recursive(f)) == eps);
  }
  CHECK(inverse_recursive(builtin("one"), 50) == SequenceWindow::tabulate(builtin("mu"), 50));
  CHECK_THROWS_AS(inverse_recursive(builtin("chiprime"), 10), NotInvertible);
}

TEST_CASE("k-fold convolution") {
  const auto one = builtin("one");
  CHECK(kfold(one, 0, 30) == SequenceWindow::tabulate(builtin("eps"), 30));
  CHECK(kfold(one, 1, 30) == SequenceWindow::tabulate(one, 30));
  CHECK(kfold(one, 2, 30) == SequenceWindow::tabulate(builtin("d"), 30));
  CHECK(kfold(one, 3, 30) == SequenceWindow::tabulate(builtin("dk3"), 30));
}

TEST_CASE("closed forms for the inverse") {
  // Both sums start at j = 1, so they vanish at n = 1 where f^{-1}(1) = 1/f(1).
  const ArithmeticFunction f("sigma1+1", [](std::uint64_t n) { return ExactValue(divisor_sigma(1, n) + 1); });
  const auto adj = inverse_closed_forms(f, 64);
  CHECK(adj.omega_form_mismatch == std::optional<std::size_t>(1));
  CHECK(adj.binomial_form_mismatch == std::optional<std::size_t>(1));
  CHECK(adj.recursive(1) == ExactValue(Rational(1, 2)));
  CHECK(adj.omega_form(1).is_zero());
  // Away from n = 1 the Omega form agrees.
  for (std::uint64_t n = 2; n <= 64; ++n) CHECK(adj.omega_form(n) == adj.recursive(n));
}

TEST_CASE("summatory functions") {
  CHECK(summatory(builtin("phi"), 10) == ExactValue(32));
  CHECK(summatory(builtin("mu"), 30) == ExactValue(-3));
  // Sigma_f(x) = sum_{d <= x} f(d) floor(x/d), cross-checked internally.
  CHECK(sigma_f(builtin("one"), 10) == ExactValue(27));
  CHECK(sigma_f(builtin("id1"), 6) == ExactValue(33));
}

TEST_CASE("window views and mismatches") {
  const auto w = SequenceWindow::tabulate(builtin("phi"), 5);
  const auto f = w.as_function("phi5");
  CHECK(f(5) == ExactValue(4));
  CHECK_THROWS_AS(f(6), OutOfRange);
  auto v = w.values();
  v[3] = ExactValue(9);
  CHECK(first_mismatch(w, SequenceWindow(v)) == std::optional<std::size_t>(4));
  CHECK_FALSE(first_mismatch(w, w).has_value());
}
