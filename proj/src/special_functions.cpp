#include "muntz/special_functions.hpp"

#include <cmath>
#include <limits>

#include "muntz/errors.hpp"

namespace muntz {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.8378770664093455;  // log(2 pi)

// B_{2k} / (2k (2k-1)) for the Stirling correction series.
constexpr double kStirling[] = {
    0.083333333333333329,    -0.0027777777777777779, 0.00079365079365079365,
    -0.00059523809523809529, 0.00084175084175084171, -0.0019175269175269176,
    0.00641025641025641,     -0.029550653594771242,  0.17964437236883057,
    -1.3924322169059011,
};

// Stirling series, valid for |z| >= 20 with Re z >= 0.
Complex stirling_log_gamma(Complex z) {
  const Complex lz = std::log(z);
  Complex acc = (z - 0.5) * lz - z + 0.5 * kLog2Pi;
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex term = inv;
  for (double c : kStirling) {
    acc += c * term;
    term *= inv2;
  }
  return acc;
}

bool near_nonpositive_integer(Complex z) {
  if (z.real() > 0.5) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) < 1e-14 &&
         std::abs(z.imag()) < 1e-14;
}

}  // namespace

Complex log_sin_pi(Complex z) {
  // factor out the dominant exponential so cosh(pi Im z) never overflows
  if (z.imag() >= 0.0) {
    const Complex w = Complex(0.0, 2.0 * kPi) * z;  // |e^w| <= 1
    // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2 i)
    return -Complex(0.0, kPi) * z + std::log((1.0 - std::exp(w)) * Complex(0.0, 0.5));
  }
  return std::conj(log_sin_pi(std::conj(z)));
}

Complex log_gamma(Complex z) {
  if (near_nonpositive_integer(z))
    fail(ErrorCode::PoleProximity, "log_gamma: pole at nonpositive integer");
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) sin(pi z) = pi
    return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  // raise until the Stirling series is deep in its accurate range
  Complex shift(0.0, 0.0);
  Complex w = z;
  while (std::abs(w) < 20.0) {
    shift += std::log(w);
    w += 1.0;
  }
  return stirling_log_gamma(w) - shift;
}

double gamma_asymptotic_residual(Complex z) {
  if (z.real() < 0.0)
    fail(ErrorCode::DomainViolation,
         "gamma_asymptotic_residual: requires Re z >= 0");
  const Complex zh = z + 0.5;
  const double log_mod = log_gamma(zh).real();
  return log_mod - z.real() * std::log(std::abs(zh)) +
         std::abs(z.imag() * std::arg(zh)) + z.real();
}

double malliavin_psi(double s) {
  if (s < 0.0) fail(ErrorCode::DomainViolation, "malliavin_psi: s >= 0 required");
  if (s == 1.0) return -std::numeric_limits<double>::infinity();
  return 2.0 + s * std::log(std::abs((s - 1.0) / (s + 1.0)));
}

double psi_root() {
  double lo = 5.0 / 6.0, hi = 6.0 / 7.0;
  // psi is decreasing on [0,1): psi(lo) > 0 > psi(hi)
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (malliavin_psi(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double epsilon3(double x) {
  if (x < 0.0) fail(ErrorCode::DomainViolation, "epsilon3: x >= 0 required");
  const double u = 1.0 - x;
  const double left = (u == 0.0) ? 0.0 : u * std::log(std::abs(u));
  return left + (1.0 + x) * std::log1p(x);
}

}  // namespace muntz
