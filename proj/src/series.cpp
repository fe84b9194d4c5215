#include "lamcat/series.hpp"

#include <sstream>

namespace lamcat {

TruncatedSeries pochhammer(long a, long step, PochhammerCount count, std::size_t order, bool sign_plus) {
  if (step <= 0) throw DomainError("pochhammer step must be positive");
  std::vector<ExactValue> acc(order + 1);
  acc[0] = 1;
  const ExactValue c = sign_plus ? ExactValue(1) : ExactValue(-1);
  for (std::size_t j = 0; !count || j < *count; ++j) {
    const long e = a + static_cast<long>(j) * step;
    if (e <= 0) throw DomainError("pochhammer factor with nonpositive exponent");
    const auto ue = static_cast<std::size_t>(e);
    if (ue > order) break;  // exponents increase, remaining factors are 1
    // multiply in place by (1 + c q^e), high to low
    for (std::size_t m = order; m >= ue; --m) {
      if (!acc[m - ue].is_zero()) acc[m] += c * acc[m - ue];
      if (m == ue) break;
    }
  }
  return TruncatedSeries(std::move(acc));
}

std::string to_string(const TruncatedSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (s[n].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool compound = !s[n].is_rational();
    if (n == 0) {
      os << s[n];
      continue;
    }
    if (!(s[n] == ExactValue(1))) {
      if (compound) {
        os << '(' << s[n] << ")*";
      } else {
        os << s[n] << '*';
      }
    }
    os << 'q';
    if (n > 1) os << '^' << n;
  }
  if (first) os << '0';
  os << " + O(q^" << s.order() + 1 << ')';
  return os.str();
}

}  // namespace lamcat
