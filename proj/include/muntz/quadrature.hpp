#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace muntz::quad {

using Complex = std::complex<double>;

// Gauss-Legendre nodes/weights on [-1, 1].
extern const double kGL8[8][2];
extern const double kGL16[16][2];

struct Estimate {
  Complex value{0.0, 0.0};
  double error = 0.0;  // |GL16 - GL8| over the same panels
};

template <class F>
Complex gl_panel(const double (*rule)[2], int n, F&& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Complex s{0.0, 0.0};
  for (int i = 0; i < n; ++i) s += rule[i][1] * f(c + h * rule[i][0]);
  return h * s;
}

// Composite integration over [a, b] with a fixed panel count; the error
// estimate compares the 16- and 8-point rules on identical panels.
template <class F>
Estimate integrate(F&& f, double a, double b, int panels) {
  Estimate e;
  Complex coarse{0.0, 0.0};
  for (int k = 0; k < panels; ++k) {
    const double x0 = a + (b - a) * k / panels;
    const double x1 = a + (b - a) * (k + 1) / panels;
    e.value += gl_panel(kGL16, 16, f, x0, x1);
    coarse += gl_panel(kGL8, 8, f, x0, x1);
  }
  e.error = std::abs(e.value - coarse);
  return e;
}

// Panel count that resolves oscillation frequency `omega` over [a, b]
// with the 16-point rule (keeps omega * h comfortably below the rule order).
inline int panels_for(double a, double b, double omega, double min_width = 0.0) {
  const double len = b - a;
  double h = 8.0 / std::max(omega, 1e-3);
  if (min_width > 0.0 && h > min_width) h = min_width;
  int p = static_cast<int>(std::ceil(len / h));
  return p < 1 ? 1 : p;
}

enum class TailKind { None, Exponential, Polynomial };

struct TailModel {
  TailKind kind = TailKind::None;
  double rate = 0.0;   // exp: log|f| ~ c - rate * t ; poly: ~ c - rate * log t
  double c = 0.0;
  // Integral bound of |f| over [T, inf) under the fitted model.
  double bound_from(double T) const;
  bool convergent() const { return kind != TailKind::None; }
};

// Least-squares fit of log|f| samples against t (exponential model) and
// log t (polynomial model); keeps whichever fits better, or None when
// neither decays.
TailModel fit_tail(const std::vector<std::pair<double, double>>& t_logmod);

}  // namespace muntz::quad
