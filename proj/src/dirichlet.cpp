#include "lamcat/dirichlet.hpp"

#include <stdexcept>

namespace lamcat {

SequenceWindow SequenceWindow::tabulate(const ArithmeticFunction& f, std::size_t n) {
  std::vector<ExactValue> v;
  v.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) v.push_back(f(i));
  return SequenceWindow(std::move(v));
}

ArithmeticFunction SequenceWindow::as_function(std::string name) const {
  auto values = std::make_shared<const std::vector<ExactValue>>(values_);
  return {std::move(name), [values](std::uint64_t n) {
            if (n > values->size()) throw OutOfRange("sequence window exhausted");
            return (*values)[n - 1];
          }};
}

SequenceWindow convolve(const SequenceWindow& f, const SequenceWindow& g) {
  const std::size_t n = std::min(f.size(), g.size());
  std::vector<ExactValue> out(n);
  for (std::size_t d = 1; d <= n; ++d) {
    const ExactValue& fd = f(d);
    if (fd.is_zero()) continue;
    for (std::size_t m = d, e = 1; m <= n; m += d, ++e) {
      const ExactValue& ge = g(e);
      if (!ge.is_zero()) out[m - 1] += fd * ge;
    }
  }
  return SequenceWindow(std::move(out));
}

SequenceWindow convolve(const ArithmeticFunction& f, const ArithmeticFunction& g, std::size_t n) {
  return convolve(SequenceWindow::tabulate(f, n), SequenceWindow::tabulate(g, n));
}

SequenceWindow inverse_recursive(const SequenceWindow& f) {
  const std::size_t n = f.size();
  if (n == 0) return {};
  if (f(1).is_zero()) throw NotInvertible("Dirichlet inverse needs f(1) != 0");
  const ExactValue inv1 = ExactValue(Rational(1) / f(1).as_rational());
  std::vector<ExactValue> out(n);
  out[0] = inv1;
  // Accumulate sum_{d | m, d > 1} f(d) g(m / d) while walking m upward: every
  // contribution to index m comes from strictly smaller indices.
  std::vector<ExactValue> pending(n);
  for (std::size_t m = 1; m <= n; ++m) {
    if (m > 1) out[m - 1] = -(inv1 * pending[m - 1]);
    const ExactValue& gm = out[m - 1];
    if (gm.is_zero()) continue;
    for (std::size_t d = 2; d * m <= n; ++d) {
      if (!f(d).is_zero()) pending[d * m - 1] += f(d) * gm;
    }
  }
  return SequenceWindow(std::move(out));
}

SequenceWindow inverse_recursive(const ArithmeticFunction& f, std::size_t n) {
  return inverse_recursive(SequenceWindow::tabulate(f, n));
}

namespace {

SequenceWindow epsilon(std::size_t n) {
  std::vector<ExactValue> v(n);
  if (n > 0) v[0] = 1;
  return SequenceWindow(std::move(v));
}

}  // namespace

SequenceWindow kfold(const SequenceWindow& f, unsigned j) {
  SequenceWindow acc = epsilon(f.size());
  for (unsigned i = 0; i < j; ++i) acc = convolve(f, acc);
  return acc;
}

SequenceWindow kfold(const ArithmeticFunction& f, unsigned j, std::size_t n) {
  return kfold(SequenceWindow::tabulate(f, n), j);
}

InverseAdjudication inverse_closed_forms(const ArithmeticFunction& f, std::size_t n) {
  InverseAdjudication out;
  const SequenceWindow fw = SequenceWindow::tabulate(f, n);
  out.recursive = inverse_recursive(fw);
  const Rational f1 = fw(1).as_rational();

  // f - f(1) eps
  std::vector<ExactValue> shifted = fw.values();
  shifted[0] -= ExactValue(f1);
  const SequenceWindow g(std::move(shifted));

  unsigned max_omega = 0;
  for (std::size_t m = 1; m <= n; ++m) max_omega = std::max(max_omega, big_omega(m));

  std::vector<ExactValue> omega_form(n);
  std::vector<ExactValue> binomial_form(n);
  SequenceWindow g_pow = epsilon(n);
  SequenceWindow f_pow = epsilon(n);
  Rational f1_pow = f1;  // f(1)^{j+1}, starting at j = 0
  for (unsigned j = 1; j <= max_omega; ++j) {
    g_pow = convolve(g, g_pow);
    f_pow = convolve(fw, f_pow);
    f1_pow *= f1;
    const Rational sign = j % 2 == 0 ? Rational(1) : Rational(-1);
    for (std::size_t m = 1; m <= n; ++m) {
      const unsigned om = big_omega(m);
      if (j > om) continue;
      omega_form[m - 1] += g_pow(m) * ExactValue(sign / f1_pow);
      binomial_form[m - 1] += f_pow(m) * ExactValue(Rational(binomial(om, j)) * sign / f1_pow);
    }
  }
  out.omega_form = SequenceWindow(std::move(omega_form));
  out.binomial_form = SequenceWindow(std::move(binomial_form));
  out.omega_form_mismatch = first_mismatch(out.recursive, out.omega_form);
  out.binomial_form_mismatch = first_mismatch(out.recursive, out.binomial_form);
  return out;
}

ExactValue summatory(const ArithmeticFunction& f, std::size_t x) {
  ExactValue acc;
  for (std::size_t n = 1; n <= x; ++n) acc += f(n);
  return acc;
}

ExactValue sigma_f(const ArithmeticFunction& f, std::size_t x) {
  const SequenceWindow fw = SequenceWindow::tabulate(f, x);
  std::vector<ExactValue> ones(x, ExactValue(1));
  const SequenceWindow conv = convolve(fw, SequenceWindow(std::move(ones)));
  ExactValue partial;
  for (std::size_t n = 1; n <= x; ++n) partial += conv(n);
  ExactValue hyperbola;
  for (std::size_t d = 1; d <= x; ++d) hyperbola += fw(d) * ExactValue(static_cast<long>(x / d));
  if (!(partial == hyperbola)) {
    throw std::logic_error("sigma_f: partial-sum and hyperbola forms disagree");
  }
  return partial;
}

std::optional<std::size_t> first_mismatch(const SequenceWindow& a, const SequenceWindow& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t m = 1; m <= n; ++m) {
    if (!(a(m) == b(m))) return m;
  }
  return std::nullopt;
}

}  // namespace lamcat
