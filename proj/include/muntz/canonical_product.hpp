#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "muntz/exponent_sequence.hpp"

namespace muntz {

using Complex = std::complex<double>;

// A complex value carried in the log domain; value = is_zero ? 0 : exp(log).
// tail_bound is an absolute bound on the error of `log`.
struct LogValue {
  Complex log{0.0, 0.0};
  bool is_zero = false;
  double tail_bound = 0.0;

  Complex value() const;  // exponentiates; raises Overflow past double range
};

// Canonical product G(z) = prod_n ((lambda_n - z)/(lambda_n + z)) e^{2z/lambda_n}
// truncated at order N with an analytic tail correction
//   log((1-w)/(1+w)) + 2w = -2 sum_{k>=1} w^{2k+1}/(2k+1),  w = z/lambda_n,
// summed over n > N through the rule's tail power sums. Zeros at lambda_n,
// poles at -lambda_n; evaluation refuses points inside the pole guard.
class TruncatedProduct {
 public:
  TruncatedProduct(ExponentSequence seq, std::size_t N, double pole_guard = -1.0);

  // Smallest truncation with lambda_N >= 10 R so that |z| <= R meets the
  // 1e-10 relative-accuracy contract.
  static TruncatedProduct for_radius(ExponentSequence seq, double radius);

  LogValue eval_log(Complex z) const;
  Complex eval(Complex z) const;

  // Product over n != k (0-based k < N) of the same factors, log domain.
  LogValue eval_log_rest(Complex z, std::size_t k) const;

  const ExponentSequence& sequence() const { return seq_; }
  std::size_t truncation_order() const { return N_; }
  double pole_guard() const { return guard_; }
  // radius of the stated 1e-10 accuracy contract
  double contract_radius() const;
  // largest |z| the tail model accepts before truncation-insufficient
  double max_safe_radius() const;

 private:
  void check_poles(Complex z) const;

  ExponentSequence seq_;
  std::size_t N_ = 0;
  double guard_ = 0.0;
  double lambda_next_ = 0.0;        // lambda_{N+1}, inf for complete lists
  std::vector<double> tail_sums_;   // S_3, S_5, ..., S_13 beyond N
};

// C(Lambda, delta0): right half-plane minus delta0-disks around the
// exponents, delta0 = gap/4. Membership is non-strict on the disk boundary.
class SieveRegion {
 public:
  explicit SieveRegion(const ExponentSequence& seq);
  double delta0() const { return delta0_; }
  bool contains(Complex z) const;

 private:
  const ExponentSequence* seq_;
  double delta0_;
};

struct FuchsPoint {
  Complex z;
  double log_mod_G;
  double upper_ratio;  // (log|G| - x lambda(|z|)) / x
  bool in_sieve;
};

struct FuchsReport {
  double a_upper = 0.0;
  double a_lower = 0.0;
  bool pass = false;
  std::size_t used = 0;
  std::size_t skipped_near_imaginary = 0;
  std::vector<FuchsPoint> points;
};

// Empirical constants of the two-sided growth envelope
//   exp{x lambda(|z|) - A x} <= |G(z)| <= exp{x lambda(|z|) + A x}.
// Upper constant over all grid points with x > 1e-6 (the bound is vacuous
// on the imaginary axis where |G| = 1); lower constant over the sieve
// subset, which must be nonempty.
FuchsReport certify_fuchs_bounds(const TruncatedProduct& prod,
                                 const std::vector<Complex>& grid);

// Growth-model parameters entering the damped kernels.
struct KernelParams {
  double b = 0.0;
  double A2 = 0.0;
  double a0 = 0.0;  // 2 A2 - 2b log(2b); 2 A2 when b = 0
  static KernelParams from(double b, double A2);
  static KernelParams for_sequence(const ExponentSequence& seq);
};

// g0(z) = G(z) e^{-a0 z} / Gamma(1/2 + 2 b z)
LogValue log_g0(const TruncatedProduct& prod, const KernelParams& kp, Complex z);
Complex evaluate_g0(const TruncatedProduct& prod, const KernelParams& kp, Complex z);

// g(z) = z^2 G(z) e^{-A z} / (Gamma(1/2 + (2 alpha/pi) z) (1+z)^4)
LogValue log_g(const TruncatedProduct& prod, double alpha, double A, Complex z);
Complex evaluate_g(const TruncatedProduct& prod, double alpha, double A, Complex z);

// psi_k(z) = z^2 g0(z) / ((1+z)^4 (z - lambda_k)), k 0-based. The removable
// singularity at lambda_k is built in analytically: the k-th factor over
// (z - lambda_k) is -e^2 e^{2u/lambda_k} / (2 lambda_k + u), u = z - lambda_k,
// so no numerical differencing happens anywhere.
LogValue log_psi_k(const TruncatedProduct& prod, const KernelParams& kp,
                   std::size_t k, Complex z);
Complex evaluate_psi_k(const TruncatedProduct& prod, const KernelParams& kp,
                       std::size_t k, Complex z);

// lambda_k^2 g0'(lambda_k) / (1 + lambda_k)^4 == psi_k(lambda_k)
LogValue log_psi_k_at_zero(const TruncatedProduct& prod, const KernelParams& kp,
                           std::size_t k);

// First m derivatives at z0 by trapezoidal Cauchy integrals on a circle of
// the given radius (f analytic in the closed disk). Spectrally accurate.
std::vector<Complex> cauchy_derivatives(const std::function<Complex(Complex)>& f,
                                        Complex z0, double radius, int m,
                                        int n_points = 64);

// Default decay constant for the sector kernel: empirical Fuchs upper
// constant plus the Gamma-asymptotic bound 10.
double suggest_kernel_constant(const FuchsReport& report);

}  // namespace muntz
