#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "muntz/canonical_product.hpp"
#include "muntz/exponent_sequence.hpp"

namespace muntz {

using BoundaryFn = std::function<Complex(Complex)>;

// Half-line / arc quadrature controls. Tolerances are targets; every result
// carries a-posteriori estimates from node-doubling plus analytic tail
// bounds. Pole avoidance is inherited from the product's sieve-derived
// guard inside the kernels (the contours stay on Re z >= 0 where the
// products only have zeros).
struct QuadratureSpec {
  double tolerance = 1e-9;        // absolute target per transform
  double cutoff_radius = 5e4;     // hard cap on half-line truncation
  double sigma_max = 0.0;         // radial depth cap (0 = auto)
  double max_exponent_hint = 80;  // largest monomial exponent to resolve
};

struct FunctionalResult {
  Complex value{0.0, 0.0};
  double quadrature_error = 0.0;
  double truncation_error = 0.0;
  double total_error() const { return quadrature_error + truncation_error; }
};

// A kernel q analytic on Re z >= 0, evaluated in the log domain, with the
// decay metadata the contour engine needs.
class ContourKernel {
 public:
  virtual ~ContourKernel() = default;
  virtual LogValue log_eval(Complex z) const = 0;
  // |q(t)| <~ C e^{-rate t} on the positive real axis
  virtual double real_axis_rate() const = 0;
  // |q(it)| <~ C e^{growth |t|} / |t|^q on the imaginary axis
  virtual double imag_axis_growth() const = 0;
  // phase drift rate along the imaginary axis (for node planning)
  virtual double phase_rate() const = 0;
  // structural scale to resolve on the real axis (zero spacing)
  virtual double real_axis_feature() const { return 1.0; }
};

// g(z) = z^2 G(z) e^{-Az} / (Gamma(1/2 + (2 alpha/pi) z)(1+z)^4)
class SectorGKernel : public ContourKernel {
 public:
  SectorGKernel(const TruncatedProduct& prod, double alpha, double A);
  LogValue log_eval(Complex z) const override;
  double real_axis_rate() const override { return rate_; }
  double imag_axis_growth() const override { return alpha_; }
  double phase_rate() const override;
  double real_axis_feature() const override;
  double alpha() const { return alpha_; }
  double decay_constant() const { return A_; }

 private:
  const TruncatedProduct* prod_;
  double alpha_, A_, a0_, rate_;
};

// psi_k(z) e^{-delta z}
class DampedPsiKernel : public ContourKernel {
 public:
  DampedPsiKernel(const TruncatedProduct& prod, const KernelParams& kp,
                  std::size_t k, double delta);
  LogValue log_eval(Complex z) const override;
  double real_axis_rate() const override { return delta_; }
  double imag_axis_growth() const override;
  double phase_rate() const override;
  double real_axis_feature() const override;

 private:
  const TruncatedProduct* prod_;
  KernelParams kp_;
  std::size_t k_;
  double delta_;
};

// h_l(zeta) = int_{L_l} q(z) zeta^{-z} dz along L_l = { t e^{i pi l / 2} }.
// Public contract: l = 0 needs |zeta| > 1; l = +-1 needs the kernel's
// growth angle < -l arg(zeta) < pi. Quadrature follows the decay rate; on
// slow rays with real-axis decay the tail is carried over a bent contour.
FunctionalResult half_line_transform(const ContourKernel& kernel, int l,
                                     Complex zeta, const QuadratureSpec& spec);

// The sector functional built from a kernel's half-line transforms:
//   T(f) = (1/2pi) int_{-a}^{a} f(e^{i th}) h0(e^{i th}) d th
//        + (1/2pi i) int_0^1 [ f(s e^{-i a}) h1(s e^{-i a})
//                            - f(s e^{ i a}) h-1(s e^{ i a}) ] ds/s.
// Transform values along the boundary are cached at construction; apply()
// only samples f.
class SectorFunctional {
 public:
  SectorFunctional(std::shared_ptr<const ContourKernel> kernel, double alpha,
                   QuadratureSpec spec);

  FunctionalResult apply(const BoundaryFn& f) const;
  // Upper estimate of the operator norm (arc + radial absolute integrals
  // plus fitted tail addend).
  double norm_upper() const;
  double sigma_max() const { return sigma_max_; }
  double alpha() const { return alpha_; }
  const ContourKernel& kernel() const { return *kernel_; }
  // sampling densities the quadrature demands of boundary data
  double arc_spacing() const { return arc_spacing_; }
  double radial_spacing() const { return radial_spacing_; }

 private:
  struct Node {
    double pos;       // theta on the arc, sigma on the radial edge
    double weight;    // quadrature weight (includes panel scaling)
    Complex H;        // cached transform value at the boundary point
    double H_err;     // inner quadrature estimate
    double H_trunc;   // inner truncation estimate
  };
  void build_tables();

  std::shared_ptr<const ContourKernel> kernel_;
  double alpha_;
  QuadratureSpec spec_;
  double sigma_max_ = 0.0;
  double arc_spacing_ = 0.0, radial_spacing_ = 0.0;
  std::vector<Node> arc16_, arc8_;        // h0(e^{i theta})
  std::vector<Node> radial16_, radial8_;  // h1(e^{-sigma} e^{-i alpha})
  double radial_tail_bound_ = 0.0;        // int_{sigma_max}^inf |h1| d sigma
};

// psi_k(lambda_m) e^{-delta lambda_m} functionals T_{k,delta} for k < K.
// Realized as SectorFunctionals over the damped kernels psi_k e^{-delta z}.
class BiorthogonalSystem {
 public:
  BiorthogonalSystem(const TruncatedProduct& prod, const KernelParams& kp,
                     double alpha, std::size_t K, double delta,
                     QuadratureSpec spec);

  std::size_t terms() const { return funcs_.size(); }
  double delta() const { return delta_; }
  double lambda(std::size_t k) const;
  FunctionalResult apply(std::size_t k, const BoundaryFn& f) const;
  Complex psi_at_zero(std::size_t k) const;  // psi_k(lambda_k)
  // closed-form T_{k,delta}(zeta^{lambda_m}) = psi_k(lambda_m) e^{-d lambda_m}
  Complex expected_monomial(std::size_t k, std::size_t m) const;

 private:
  const TruncatedProduct* prod_;
  KernelParams kp_;
  double alpha_, delta_;
  std::vector<SectorFunctional> funcs_;
};

struct ExpansionTerm {
  double lambda;
  Complex a;
  double error;  // propagated absolute estimate
};

struct MuntzExpansion {
  std::vector<ExpansionTerm> terms;  // strictly increasing exponents
  double convergence_radius = 1.0;
  // max over k of |a_k(delta) - a_k(delta/2)| minus combined estimates;
  // <= 0 when the recovery is delta-independent within error bars
  double delta_independence_gap = 0.0;
};

// a_k = e^{delta lambda_k} psi_k(lambda_k)^{-1} T_{k,delta}(f); recomputed
// at delta/2 to confirm delta independence.
MuntzExpansion recover_coefficients(const TruncatedProduct& prod,
                                    const KernelParams& kp, double alpha,
                                    const BoundaryFn& f, std::size_t K,
                                    double delta, const QuadratureSpec& spec);

struct Reconstruction {
  Complex value{0.0, 0.0};
  double tail_bound = 0.0;
  bool divergence_risk = false;  // set when |z| >= 1
};

Reconstruction reconstruct(const MuntzExpansion& expansion, Complex z);

// Boundary data given as sample tables instead of an evaluator: values on
// the arc at angles theta and on both radial edges at log-depths sigma
// (point = e^{-sigma} e^{+- i alpha}). make_boundary_fn validates the
// sampling density against what the functional's quadrature demands and
// returns an interpolating evaluator.
struct SampledBoundary {
  std::vector<double> arc_theta;      // increasing, spanning [-alpha, alpha]
  std::vector<Complex> arc_values;
  std::vector<double> edge_sigma;     // increasing from 0
  std::vector<Complex> edge_minus;    // f(e^{-sigma} e^{-i alpha})
  std::vector<Complex> edge_plus;     // f(e^{-sigma} e^{+i alpha})
};

BoundaryFn make_boundary_fn(const SampledBoundary& data,
                            const SectorFunctional& target);

struct CrosscheckResult {
  Complex quadrature_side{0.0, 0.0};
  Complex direct_side{0.0, 0.0};
  double residual = 0.0;
  double combined_estimate = 0.0;
};

// Applies the cached sector functional to zeta^z and compares against the
// direct kernel value g(z): the two sides of the contour representation.
CrosscheckResult representation_crosscheck(const SectorFunctional& T,
                                           const TruncatedProduct& prod,
                                           double alpha, double A, Complex z);

struct WitnessReport {
  double lower_bound = 0.0;   // |g(mu)| / ||T||-upper
  double ls_residual = 0.0;   // sup-norm residual of the least-squares fit
  bool consistent = false;    // ls_residual >= lower_bound - slack
  double norm_upper = 0.0;
  double g_mu_abs = 0.0;
  double slack = 0.0;
};

// Certified incompleteness evidence for z^mu against span{z^{lambda_k}}:
// the functional gives a distance lower bound; a boundary least-squares fit
// gives an upper-side residual that must dominate it.
WitnessReport incompleteness_witness(const SectorFunctional& T,
                                     const TruncatedProduct& prod, double mu,
                                     std::size_t K, double slack = 1e-8);

}  // namespace muntz
