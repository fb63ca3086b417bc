#pragma once

#include <complex>

namespace muntz {

using Complex = std::complex<double>;

// Principal-branch complex log-Gamma. Core: Stirling series with argument
// raising on Re z >= 0.5 (accurate to ~1e-14 relative); reflection through
// sin(pi z) for Re z < 0.5. exp(log_gamma(z)) equals Gamma(z) on the whole
// cut plane; poles at nonpositive integers raise an error.
Complex log_gamma(Complex z);

struct GammaEvaluation {
  Complex argument;
  double log_modulus;   // log |Gamma(z)|, branch-free
  Complex principal_log;
};

inline GammaEvaluation evaluate_gamma(Complex z) {
  const Complex lg = log_gamma(z);
  return {z, lg.real(), lg};
}

// log(sin(pi z)) with overflow-safe scaling for large |Im z|.
// exp of the result is exactly sin(pi z).
Complex log_sin_pi(Complex z);

// c1(z) = log|Gamma(1/2+z)| - x log|z+1/2| + |y arg(z+1/2)| + x,  x = Re z.
// The residual of the first-order Gamma modulus asymptotic; bounded by 10
// on Re z >= 0.
double gamma_asymptotic_residual(Complex z);

// psi(s) = 2 + s log|(s-1)/(s+1)| on s >= 0; -inf at the s = 1 singularity.
double malliavin_psi(double s);

// The unique zero of malliavin_psi in (5/6, 6/7), bisected to 1e-12.
double psi_root();

// eps3(x) = -int_0^x log|(1-t)/(1+t)| dt = (1-x)log|1-x| + (1+x)log(1+x),
// evaluated in closed form; increasing and positive on (0, inf).
double epsilon3(double x);

}  // namespace muntz
