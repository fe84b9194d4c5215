#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "lamcat/series.hpp"

namespace lamcat {

/// theta_3(q^k) = 1 + 2 sum_{n >= 1} q^{k n^2}.
TruncatedSeries theta3(std::size_t k, std::size_t order);
/// theta_4(q^k) = 1 + 2 sum_{n >= 1} (-1)^n q^{k n^2}.
TruncatedSeries theta4(std::size_t k, std::size_t order);
/// theta_2(q^k)^2 = 4 q^{k/2} (sum_{n >= 0} q^{k n(n+1)})^2 in the nome
/// convention theta_2(q) = 2 q^{1/4} sum q^{n(n+1)}.  Only even k keeps the
/// exponents integral; odd k throws DomainError.
TruncatedSeries theta2_squared(std::size_t k, std::size_t order);

/// J_{a,m} = (q^a, q^{m-a}, q^m; q^m)_inf.
TruncatedSeries jacobi_triple(long a, long m, std::size_t order);

/// One term c q^e / D(q) of a bilateral sum, with e possibly negative before
/// normalization.  The denominator is 1 + s1 q^{x} (+ q^{2x} when `quadratic`).
struct BilateralTerm {
  int sign = 1;
  long exponent = 0;
  long x = 0;
  int s1 = 1;
  bool quadratic = false;
};

/// sum_{r in Z} term(r), including r in both directions until the normalized
/// leading exponent of a term exceeds the order and keeps increasing.
TruncatedSeries bilateral_sum(const std::function<BilateralTerm(long)>& term, std::size_t order,
                              long window = 0);

enum class MockTheta { phi, psi, rho, sigma, gamma };

MockTheta parse_mock_theta(std::string_view name);
std::string to_string(MockTheta name);

/// (Eulerian left side, bilateral right side).
std::pair<TruncatedSeries, TruncatedSeries> mock_theta(MockTheta name, std::size_t order);
TruncatedSeries mock_theta_eulerian(MockTheta name, std::size_t order);
TruncatedSeries mock_theta_bilateral(MockTheta name, std::size_t order, long window = 0);

struct PartitionProductCheck {
  bool unrestricted;  // exp(sum log(1/(1-q^n))) = 1/(q;q)_inf
  bool distinct;      // exp(sum log(1+q^n)) = (-q;q)_inf
};

PartitionProductCheck partition_product_relation(std::size_t order);

}  // namespace lamcat
