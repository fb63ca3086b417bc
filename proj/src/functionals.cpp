#include "muntz/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "muntz/errors.hpp"
#include "muntz/quadrature.hpp"
#include "muntz/special_functions.hpp"

namespace muntz {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// contour plumbing: kernels sampled once along straight segments, transforms
// H(zeta) evaluated as weighted exponential sums over the cached samples
// ---------------------------------------------------------------------------

struct SegNode {
  double t;
  double w;
  Complex klog;
  bool zero;
};

struct Segment {
  Complex origin{0.0, 0.0};
  Complex dir{1.0, 0.0};  // unit direction; dz = dir dt
  double t_end = 0.0;
  std::vector<SegNode> fine, coarse;
  // envelope fit of log|k(z(t))| - strip_rate * t over the tail of the segment
  quad::TailModel stripped;
  double strip_rate = 0.0;
  bool terminal = false;  // contour ends here; tail bound applies
};

void sample_segment(Segment& seg, const ContourKernel& kernel, double t0,
                    double t1, int panels) {
  seg.t_end = t1;
  std::vector<std::pair<double, double>> env;
  for (int p = 0; p < panels; ++p) {
    const double a = t0 + (t1 - t0) * p / panels;
    const double b = t0 + (t1 - t0) * (p + 1) / panels;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (int i = 0; i < 16; ++i) {
      const double t = c + h * quad::kGL16[i][0];
      const LogValue lv = kernel.log_eval(seg.origin + seg.dir * t);
      seg.fine.push_back({t, h * quad::kGL16[i][1], lv.log, lv.is_zero});
      if (!lv.is_zero && t > t0 + 0.5 * (t1 - t0))
        env.push_back({t, lv.log.real() - seg.strip_rate * t});
    }
    for (int i = 0; i < 8; ++i) {
      const double t = c + h * quad::kGL8[i][0];
      const LogValue lv = kernel.log_eval(seg.origin + seg.dir * t);
      seg.coarse.push_back({t, h * quad::kGL8[i][1], lv.log, lv.is_zero});
    }
  }
  seg.stripped = quad::fit_tail(env);
}

// integral bound of e^{model(t)} e^{-extra_rate t} over [T, inf)
double model_tail_bound(const quad::TailModel& m, double T, double extra_rate) {
  if (!m.convergent()) {
    if (extra_rate <= 1e-12) return kInf;
    return std::exp(-extra_rate * T);  // flat-envelope fallback, |f| ~ 1
  }
  if (m.kind == quad::TailKind::Exponential) {
    const double r = m.rate + extra_rate;
    if (r <= 1e-12) return kInf;
    return std::exp(m.c - (m.rate + extra_rate) * T) / r;
  }
  // polynomial envelope e^c t^{-p}
  if (extra_rate > 1e-12)
    return std::exp(m.c - extra_rate * T) * std::pow(T, -m.rate) / extra_rate;
  if (m.rate > 1.0)
    return std::exp(m.c) * std::pow(T, 1.0 - m.rate) / (m.rate - 1.0);
  return kInf;
}

struct HEval {
  Complex v16{0.0, 0.0}, v8{0.0, 0.0};
  double trunc = 0.0;
};

HEval contour_H(const std::vector<Segment>& segs, Complex log_zeta) {
  HEval out;
  for (const auto& seg : segs) {
    const Complex base = -seg.origin * log_zeta;
    const Complex slope = -seg.dir * log_zeta;
    Complex s16{0.0, 0.0}, s8{0.0, 0.0};
    for (const auto& n : seg.fine) {
      if (n.zero) continue;
      const Complex e = n.klog + base + slope * n.t;
      if (e.real() > 700.0)
        fail(ErrorCode::Overflow, "contour integrand exceeds double range");
      s16 += n.w * std::exp(e);
    }
    for (const auto& n : seg.coarse) {
      if (n.zero) continue;
      s8 += n.w * std::exp(n.klog + base + slope * n.t);
    }
    out.v16 += seg.dir * s16;
    out.v8 += seg.dir * s8;
    if (seg.terminal) {
      // |zeta^{-z}| decays along the segment at rate Re(dir * log_zeta)
      const double rate_zeta = (seg.dir * log_zeta).real();
      const double extra = rate_zeta - seg.strip_rate;
      const double offset = std::exp(std::min(600.0, base.real()));
      out.trunc += offset * model_tail_bound(seg.stripped, seg.t_end, extra);
    }
  }
  return out;
}

double panel_width(double omega, double feature, double hard_cap = 2.0) {
  double w = 8.0 / std::max(omega, 1.0);
  w = std::min(w, std::max(0.2, feature / 2.0));
  return std::min(w, hard_cap);
}

int panel_count(double len, double width) {
  int p = static_cast<int>(std::ceil(len / width));
  return p < 1 ? 1 : p;
}

// Contour plan for the half-line L_l serving arguments with
// log|zeta| >= log_rho_min and arg zeta = theta (edges) or |arg| <= theta.
std::vector<Segment> plan_contour(const ContourKernel& k, int l,
                                  double log_rho_min, double theta,
                                  const QuadratureSpec& spec) {
  const double L = -std::log(spec.tolerance) + 4.0;
  std::vector<Segment> segs;
  if (l == 0) {
    const double rate = k.real_axis_rate() + log_rho_min;
    if (rate <= 1e-3)
      fail(ErrorCode::Nonconvergent,
           "half-line transform: nonpositive decay rate on the real ray");
    const double T = std::min(spec.cutoff_radius, L / rate);
    Segment seg;
    seg.terminal = true;
    seg.strip_rate = 0.0;
    const double w = panel_width(std::abs(theta) + 1.0, k.real_axis_feature());
    sample_segment(seg, k, 0.0, T, panel_count(T, w));
    segs.push_back(std::move(seg));
    return segs;
  }

  const Complex dir(0.0, l > 0 ? 1.0 : -1.0);
  const double edge_rate = (l > 0 ? -theta : theta) - k.imag_axis_growth();
  const double omega_v = k.phase_rate() + std::abs(log_rho_min) + 1.0;

  if (edge_rate >= 0.15) {
    // strictly inside the angular domain: one decaying ray
    const double T = std::min(spec.cutoff_radius, L / edge_rate);
    Segment seg;
    seg.dir = dir;
    seg.terminal = true;
    seg.strip_rate = k.imag_axis_growth();
    sample_segment(seg, k, 0.0, T, panel_count(T, panel_width(omega_v, 1.0)));
    segs.push_back(std::move(seg));
    return segs;
  }

  const double horiz_rate = k.real_axis_rate() + log_rho_min;
  if (horiz_rate > 0.3) {
    // edge case with real-axis decay: vertical leg, then a horizontal tail
    const double T0 = 25.0;
    Segment v;
    v.dir = dir;
    v.strip_rate = k.imag_axis_growth();
    sample_segment(v, k, 0.0, T0, panel_count(T0, panel_width(omega_v, 1.0)));
    segs.push_back(std::move(v));

    Segment h;
    h.origin = dir * T0;
    h.dir = Complex(1.0, 0.0);
    h.terminal = true;
    h.strip_rate = 0.0;
    const double U = L / horiz_rate;
    const double omega_h = std::abs(theta) + k.imag_axis_growth() + 1.0;
    sample_segment(h, k, 0.0, U, panel_count(U, panel_width(omega_h, 1.0)));
    segs.push_back(std::move(h));
    return segs;
  }

  // no exponential decay available: polynomial envelope, honest truncation
  const double T = std::min(spec.cutoff_radius, 4000.0);
  Segment seg;
  seg.dir = dir;
  seg.terminal = true;
  seg.strip_rate = k.imag_axis_growth();
  sample_segment(seg, k, 0.0, T, panel_count(T, panel_width(omega_v, 1.0)));
  segs.push_back(std::move(seg));
  return segs;
}

Complex boundary_point(double sigma, double alpha_signed) {
  return std::exp(Complex(-sigma, alpha_signed));
}

}  // namespace

// ---------------------------------------------------------------------------
// kernels
// ---------------------------------------------------------------------------

SectorGKernel::SectorGKernel(const TruncatedProduct& prod, double alpha, double A)
    : prod_(&prod), alpha_(alpha), A_(A) {
  if (alpha < 0.0 || alpha >= kPi)
    fail(ErrorCode::BadConfig, "sector kernel: alpha in [0, pi) required");
  const GrowthConstants gc = estimate_growth_constants(prod.sequence());
  const double b_kernel = alpha / kPi;
  if (gc.b > b_kernel + 1e-9)
    fail(ErrorCode::Nonconvergent,
         "sector kernel: sequence growth slope exceeds alpha/pi; the "
         "half-line transforms diverge on the real axis");
  a0_ = KernelParams::from(b_kernel, gc.A2).a0;
  // slope slack buys super-exponential decay; credit it at moderate radii
  rate_ = A_ - a0_ + 2.0 * (b_kernel - gc.b) * std::log(10.0);
  if (rate_ <= 0.2)
    fail(ErrorCode::Nonconvergent,
         "sector kernel: decay constant A too small for the sequence growth");
}

LogValue SectorGKernel::log_eval(Complex z) const {
  return log_g(*prod_, alpha_, A_, z);
}

double SectorGKernel::phase_rate() const { return A_ + alpha_ + 3.0; }

double SectorGKernel::real_axis_feature() const {
  return prod_->sequence().gap();
}

DampedPsiKernel::DampedPsiKernel(const TruncatedProduct& prod,
                                 const KernelParams& kp, std::size_t k,
                                 double delta)
    : prod_(&prod), kp_(kp), k_(k), delta_(delta) {
  if (delta <= 0.0) fail(ErrorCode::BadConfig, "damped kernel: delta > 0 required");
}

LogValue DampedPsiKernel::log_eval(Complex z) const {
  LogValue v = log_psi_k(*prod_, kp_, k_, z);
  if (!v.is_zero) v.log -= delta_ * z;
  return v;
}

double DampedPsiKernel::imag_axis_growth() const { return kPi * kp_.b; }

double DampedPsiKernel::phase_rate() const {
  return kp_.a0 + delta_ + 2.0 * kp_.b + 3.0;
}

double DampedPsiKernel::real_axis_feature() const {
  return prod_->sequence().gap();
}

// ---------------------------------------------------------------------------
// half-line transform (public, single argument)
// ---------------------------------------------------------------------------

FunctionalResult half_line_transform(const ContourKernel& kernel, int l,
                                     Complex zeta, const QuadratureSpec& spec) {
  if (l < -1 || l > 1)
    fail(ErrorCode::BadConfig, "half_line_transform: l in {-1,0,1}");
  const double rho = std::abs(zeta);
  const double theta = std::arg(zeta);
  if (l == 0) {
    if (rho <= 1.0)
      fail(ErrorCode::DomainViolation, "h_0 requires |zeta| > 1");
  } else {
    const double a = -l * theta;
    if (!(a > kernel.imag_axis_growth() && a < kPi))
      fail(ErrorCode::DomainViolation,
           "h_l requires growth-angle < -l arg(zeta) < pi");
  }
  const auto plan = plan_contour(kernel, l, std::log(rho), theta, spec);
  const HEval h = contour_H(plan, std::log(zeta));
  if (!std::isfinite(h.trunc))
    fail(ErrorCode::Nonconvergent, "half-line transform tail does not converge");
  FunctionalResult out;
  out.value = h.v16;
  out.quadrature_error = std::abs(h.v16 - h.v8) + 1e-15 * std::abs(h.v16);
  out.truncation_error = h.trunc;
  return out;
}

// ---------------------------------------------------------------------------
// SectorFunctional
// ---------------------------------------------------------------------------

SectorFunctional::SectorFunctional(std::shared_ptr<const ContourKernel> kernel,
                                   double alpha, QuadratureSpec spec)
    : kernel_(std::move(kernel)), alpha_(alpha), spec_(spec) {
  if (alpha_ <= 0.0 || alpha_ >= kPi)
    fail(ErrorCode::BadConfig, "sector functional: alpha in (0, pi) required");
  sigma_max_ = spec_.sigma_max > 0.0 ? spec_.sigma_max : 28.0;
  // radial arguments reach |zeta| = e^{-sigma_max}; when the kernel decays on
  // the real axis its bent tail must still converge there
  const double rr = kernel_->real_axis_rate();
  const double edge_rate = alpha_ - kernel_->imag_axis_growth();
  if (edge_rate < 0.15 && rr > 0.0)
    sigma_max_ = std::min(sigma_max_, rr - 1.5);
  if (sigma_max_ <= 2.0)
    fail(ErrorCode::Nonconvergent,
         "sector functional: radial window collapsed; increase the kernel "
         "decay constant");
  build_tables();
}

void SectorFunctional::build_tables() {
  // --- arc: h0 at e^{i theta}, theta in [-alpha, alpha]
  {
    const auto plan = plan_contour(*kernel_, 0, 0.0, alpha_, spec_);
    const double w = std::min(0.5, 8.0 / std::max(spec_.max_exponent_hint, 4.0));
    const int panels = panel_count(2.0 * alpha_, w);
    arc_spacing_ = 2.0 * alpha_ / panels;
    for (int p = 0; p < panels; ++p) {
      const double a = -alpha_ + 2.0 * alpha_ * p / panels;
      const double b = -alpha_ + 2.0 * alpha_ * (p + 1) / panels;
      const double c = 0.5 * (a + b), h = 0.5 * (b - a);
      for (int i = 0; i < 16; ++i) {
        const double th = c + h * quad::kGL16[i][0];
        const HEval he = contour_H(plan, Complex(0.0, th));
        arc16_.push_back({th, h * quad::kGL16[i][1], he.v16,
                          std::abs(he.v16 - he.v8) + 1e-15 * std::abs(he.v16),
                          he.trunc});
      }
      for (int i = 0; i < 8; ++i) {
        const double th = c + h * quad::kGL8[i][0];
        const HEval he = contour_H(plan, Complex(0.0, th));
        arc8_.push_back({th, h * quad::kGL8[i][1], he.v16, 0.0, 0.0});
      }
    }
  }
  // --- radial edge: h1 at e^{-sigma} e^{-i alpha}; h_{-1} follows by
  // conjugation for real-symmetric kernels
  {
    const auto plan = plan_contour(*kernel_, 1, -sigma_max_, -alpha_, spec_);
    // dyadic refinement toward sigma = 0 resolves steep monomials, then unit
    // panels out to sigma_max (geometric refinement near s = 0 in s-space)
    std::vector<double> edges{0.0};
    for (double e = 1.0 / 128.0; e < 1.0; e *= 2.0) edges.push_back(e);
    for (double e = 1.0; e < sigma_max_; e += 1.0) edges.push_back(e);
    edges.push_back(sigma_max_);
    radial_spacing_ = 1.0;
    std::vector<std::pair<double, double>> env;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
      const double c = 0.5 * (edges[p] + edges[p + 1]);
      const double h = 0.5 * (edges[p + 1] - edges[p]);
      for (int i = 0; i < 16; ++i) {
        const double sg = c + h * quad::kGL16[i][0];
        const HEval he = contour_H(plan, Complex(-sg, -alpha_));
        radial16_.push_back({sg, h * quad::kGL16[i][1], he.v16,
                             std::abs(he.v16 - he.v8) + 1e-15 * std::abs(he.v16),
                             he.trunc});
        if (sg > 0.5 * sigma_max_ && std::abs(he.v16) > 0.0)
          env.push_back({sg, std::log(std::abs(he.v16))});
      }
      for (int i = 0; i < 8; ++i) {
        const double sg = c + h * quad::kGL8[i][0];
        const HEval he = contour_H(plan, Complex(-sg, -alpha_));
        radial8_.push_back({sg, h * quad::kGL8[i][1], he.v16, 0.0, 0.0});
      }
    }
    const quad::TailModel m = quad::fit_tail(env);
    radial_tail_bound_ = 3.0 * model_tail_bound(m, sigma_max_, 0.0);
    if (!std::isfinite(radial_tail_bound_))
      radial_tail_bound_ = 10.0 * model_tail_bound(m, sigma_max_, 1e-9);
  }
}

FunctionalResult SectorFunctional::apply(const BoundaryFn& f) const {
  FunctionalResult out;
  // arc part
  Complex a16{0.0, 0.0}, a8{0.0, 0.0};
  double a_err = 0.0, a_trunc = 0.0;
  for (const auto& n : arc16_) {
    const Complex fv = f(boundary_point(0.0, n.pos));
    a16 += n.weight * fv * n.H;
    a_err += n.weight * std::abs(fv) * n.H_err;
    a_trunc += n.weight * std::abs(fv) * n.H_trunc;
  }
  for (const auto& n : arc8_) a8 += n.weight * f(boundary_point(0.0, n.pos)) * n.H;

  // radial part; H_{-1}(sigma) = conj(H_1(sigma)) for real kernels
  Complex r16{0.0, 0.0}, r8{0.0, 0.0};
  double r_err = 0.0, r_trunc = 0.0;
  double f_edge_sup = 0.0;
  for (const auto& n : radial16_) {
    const Complex fm = f(boundary_point(n.pos, -alpha_));
    const Complex fp = f(boundary_point(n.pos, alpha_));
    r16 += n.weight * (fm * n.H - fp * std::conj(n.H));
    r_err += n.weight * (std::abs(fm) + std::abs(fp)) * n.H_err;
    r_trunc += n.weight * (std::abs(fm) + std::abs(fp)) * n.H_trunc;
    if (n.pos > sigma_max_ - 1.5)
      f_edge_sup = std::max({f_edge_sup, std::abs(fm), std::abs(fp)});
  }
  for (const auto& n : radial8_) {
    const Complex fm = f(boundary_point(n.pos, -alpha_));
    const Complex fp = f(boundary_point(n.pos, alpha_));
    r8 += n.weight * (fm * n.H - fp * std::conj(n.H));
  }

  const Complex arc_val = a16 / (2.0 * kPi);
  const Complex rad_val = r16 / Complex(0.0, 2.0 * kPi);
  out.value = arc_val + rad_val;
  out.quadrature_error = (std::abs(a16 - a8) + std::abs(r16 - r8) + a_err + r_err) /
                         (2.0 * kPi);
  out.truncation_error =
      (a_trunc + r_trunc + 2.0 * f_edge_sup * radial_tail_bound_) / (2.0 * kPi);
  return out;
}

double SectorFunctional::norm_upper() const {
  double s = 0.0;
  for (const auto& n : arc16_) s += n.weight * (std::abs(n.H) + n.H_err + n.H_trunc);
  for (const auto& n : radial16_)
    s += 2.0 * n.weight * (std::abs(n.H) + n.H_err + n.H_trunc);
  s += 2.0 * radial_tail_bound_;
  return s / (2.0 * kPi);
}

// ---------------------------------------------------------------------------
// biorthogonal system
// ---------------------------------------------------------------------------

BiorthogonalSystem::BiorthogonalSystem(const TruncatedProduct& prod,
                                       const KernelParams& kp, double alpha,
                                       std::size_t K, double delta,
                                       QuadratureSpec spec)
    : prod_(&prod), kp_(kp), alpha_(alpha), delta_(delta) {
  if (K == 0 || K > prod.truncation_order())
    fail(ErrorCode::BadConfig, "biorthogonal system: K within truncation order");
  // the arc transforms reach t ~ L/delta along the real ray
  const double reach = (-std::log(spec.tolerance) + 4.0) / delta_;
  if (reach > prod.max_safe_radius())
    fail(ErrorCode::HorizonTooSmall,
         "biorthogonal system: product truncation cannot reach the arc "
         "transform depth; rebuild with for_radius(>= " +
             std::to_string(reach / 5.0) + ")");
  spec.max_exponent_hint =
      std::max(spec.max_exponent_hint, prod.sequence().value(K - 1) * 1.25);
  funcs_.reserve(K);
  for (std::size_t k = 0; k < K; ++k) {
    auto kernel = std::make_shared<DampedPsiKernel>(prod, kp_, k, delta_);
    funcs_.emplace_back(std::move(kernel), alpha_, spec);
  }
}

double BiorthogonalSystem::lambda(std::size_t k) const {
  return prod_->sequence().value(k);
}

FunctionalResult BiorthogonalSystem::apply(std::size_t k,
                                           const BoundaryFn& f) const {
  return funcs_.at(k).apply(f);
}

Complex BiorthogonalSystem::psi_at_zero(std::size_t k) const {
  return log_psi_k_at_zero(*prod_, kp_, k).value();
}

Complex BiorthogonalSystem::expected_monomial(std::size_t k, std::size_t m) const {
  if (m == k)
    return psi_at_zero(k) * std::exp(-delta_ * lambda(k));
  return {0.0, 0.0};  // psi_k vanishes at the other exponents
}

// ---------------------------------------------------------------------------
// coefficient recovery / reconstruction
// ---------------------------------------------------------------------------

namespace {

MuntzExpansion recover_once(const TruncatedProduct& prod, const KernelParams& kp,
                            double alpha, const BoundaryFn& f, std::size_t K,
                            double delta, const QuadratureSpec& spec) {
  BiorthogonalSystem sys(prod, kp, alpha, K, delta, spec);
  MuntzExpansion ex;
  for (std::size_t k = 0; k < K; ++k) {
    const double lam = sys.lambda(k);
    const FunctionalResult t = sys.apply(k, f);
    const Complex psi0 = sys.psi_at_zero(k);
    const double scale = std::abs(psi0) * std::exp(-delta * lam);
    if (scale <= t.total_error())
      fail(ErrorCode::IllConditioned,
           "coefficient recovery: |psi_k(lambda_k)| e^{-delta lambda_k} below "
           "the quadrature error estimate");
    const Complex a = std::exp(delta * lam) * t.value / psi0;
    const double err = std::exp(delta * lam) * t.total_error() / std::abs(psi0);
    ex.terms.push_back({lam, a, err});
  }
  return ex;
}

}  // namespace

MuntzExpansion recover_coefficients(const TruncatedProduct& prod,
                                    const KernelParams& kp, double alpha,
                                    const BoundaryFn& f, std::size_t K,
                                    double delta, const QuadratureSpec& spec) {
  MuntzExpansion ex = recover_once(prod, kp, alpha, f, K, delta, spec);
  const MuntzExpansion check = recover_once(prod, kp, alpha, f, K, delta / 2.0, spec);
  double gap = -kInf;
  for (std::size_t k = 0; k < K; ++k) {
    const double diff = std::abs(ex.terms[k].a - check.terms[k].a);
    const double allowed = ex.terms[k].error + check.terms[k].error;
    gap = std::max(gap, diff - allowed);
    // keep the tighter of the two runs
    if (check.terms[k].error < ex.terms[k].error) ex.terms[k] = check.terms[k];
  }
  ex.delta_independence_gap = gap;
  return ex;
}

Reconstruction reconstruct(const MuntzExpansion& expansion, Complex z) {
  Reconstruction out;
  if (expansion.terms.empty()) return out;
  const double r = std::abs(z);
  if (r >= 1.0) out.divergence_risk = true;
  if (r == 0.0) return out;
  if (z.real() < 0.0 && z.imag() == 0.0)
    fail(ErrorCode::DomainViolation,
         "reconstruct: z on the negative real axis has no principal power");
  const Complex logz = std::log(z);
  double coeff_err = 0.0;
  for (const auto& term : expansion.terms) {
    out.value += term.a * std::exp(term.lambda * logz);
    coeff_err += term.error * std::pow(r, term.lambda);
  }
  // geometric extrapolation of the omitted tail from the last term
  const auto& last = expansion.terms.back();
  double dlam = last.lambda;
  if (expansion.terms.size() >= 2)
    dlam = last.lambda - expansion.terms[expansion.terms.size() - 2].lambda;
  const double q = r < 1.0 ? std::pow(r, dlam) : 1.0;
  const double last_mag = std::abs(last.a) * std::pow(r, last.lambda);
  out.tail_bound = coeff_err + (q < 1.0 ? last_mag * q / (1.0 - q) : kInf);
  return out;
}

// ---------------------------------------------------------------------------
// representation crosscheck & incompleteness witness
// ---------------------------------------------------------------------------

namespace {

Complex interp_table(const std::vector<double>& xs,
                     const std::vector<Complex>& ys, double x) {
  auto it = std::lower_bound(xs.begin(), xs.end(), x);
  if (it == xs.begin()) return ys.front();
  if (it == xs.end()) return ys.back();
  const std::size_t i = static_cast<std::size_t>(it - xs.begin());
  const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return ys[i - 1] * (1.0 - t) + ys[i] * t;
}

void check_density(const std::vector<double>& xs, double lo, double hi,
                   double need, const char* what) {
  if (xs.size() < 2 || xs.front() > lo + 1e-9 || xs.back() < hi - 1e-9)
    fail(ErrorCode::InsufficientSamples,
         std::string("sampled boundary does not cover the ") + what);
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i] - xs[i - 1] > need)
      fail(ErrorCode::InsufficientSamples,
           std::string("sampled boundary coarser than the quadrature "
                       "demands on the ") +
               what);
}

}  // namespace

BoundaryFn make_boundary_fn(const SampledBoundary& data,
                            const SectorFunctional& target) {
  if (data.arc_theta.size() != data.arc_values.size() ||
      data.edge_sigma.size() != data.edge_minus.size() ||
      data.edge_sigma.size() != data.edge_plus.size())
    fail(ErrorCode::BadConfig, "sampled boundary: mismatched table sizes");
  const double alpha = target.alpha();
  check_density(data.arc_theta, -alpha, alpha, target.arc_spacing(), "arc");
  check_density(data.edge_sigma, 0.0, target.sigma_max(),
                target.radial_spacing(), "radial edges");
  SampledBoundary copy = data;
  return [copy, alpha](Complex zeta) -> Complex {
    const double rho = std::abs(zeta);
    if (std::abs(rho - 1.0) < 1e-12)
      return interp_table(copy.arc_theta, copy.arc_values, std::arg(zeta));
    const double sigma = -std::log(rho);
    return std::arg(zeta) < 0.0
               ? interp_table(copy.edge_sigma, copy.edge_minus, sigma)
               : interp_table(copy.edge_sigma, copy.edge_plus, sigma);
  };
}

CrosscheckResult representation_crosscheck(const SectorFunctional& T,
                                           const TruncatedProduct& prod,
                                           double alpha, double A, Complex z) {
  if (z.real() <= 0.0)
    fail(ErrorCode::DomainViolation, "crosscheck: Re z > 0 required");
  CrosscheckResult out;
  const FunctionalResult rhs = T.apply([z](Complex zeta) {
    return zeta == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : std::pow(zeta, z);
  });
  const LogValue lhs = log_g(prod, alpha, A, z);
  out.quadrature_side = rhs.value;
  out.direct_side = lhs.value();
  out.residual = std::abs(out.quadrature_side - out.direct_side);
  out.combined_estimate = rhs.total_error() +
                          std::abs(out.direct_side) * lhs.tail_bound +
                          1e-13 * (std::abs(out.direct_side) + 1.0);
  return out;
}

namespace {

// least squares min ||A x - b||_2 by modified Gram-Schmidt with
// reorthogonalization; returns the residual vector b - A x
std::vector<Complex> ls_residual(std::vector<std::vector<Complex>> cols,
                                 std::vector<Complex> b) {
  const std::size_t K = cols.size();
  const std::size_t M = b.size();
  std::vector<std::vector<Complex>> q = cols;
  std::vector<std::vector<Complex>> R(K, std::vector<Complex>(K, 0.0));
  for (std::size_t j = 0; j < K; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        Complex dot{0.0, 0.0};
        for (std::size_t m = 0; m < M; ++m) dot += std::conj(q[i][m]) * q[j][m];
        R[i][j] += dot;
        for (std::size_t m = 0; m < M; ++m) q[j][m] -= dot * q[i][m];
      }
    }
    double nrm = 0.0;
    for (std::size_t m = 0; m < M; ++m) nrm += std::norm(q[j][m]);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-250)
      fail(ErrorCode::IllConditioned, "least squares: dependent basis column");
    R[j][j] = nrm;
    for (std::size_t m = 0; m < M; ++m) q[j][m] /= nrm;
  }
  // x = R^{-1} Q^H b
  std::vector<Complex> qb(K);
  for (std::size_t j = 0; j < K; ++j) {
    Complex dot{0.0, 0.0};
    for (std::size_t m = 0; m < M; ++m) dot += std::conj(q[j][m]) * b[m];
    qb[j] = dot;
  }
  std::vector<Complex> x(K);
  for (std::size_t j = K; j-- > 0;) {
    Complex s = qb[j];
    for (std::size_t i = j + 1; i < K; ++i) s -= R[j][i] * x[i];
    x[j] = s / R[j][j];
  }
  std::vector<Complex> r = b;
  for (std::size_t j = 0; j < K; ++j)
    for (std::size_t m = 0; m < M; ++m) r[m] -= cols[j][m] * x[j];
  return r;
}

}  // namespace

WitnessReport incompleteness_witness(const SectorFunctional& T,
                                     const TruncatedProduct& prod, double mu,
                                     std::size_t K, double slack) {
  if (mu <= 0.0)
    fail(ErrorCode::DomainViolation, "witness: mu > 0 required");
  if (prod.sequence().nearest_exponent_distance(mu) < 1e-9)
    fail(ErrorCode::DomainViolation, "witness: mu must lie outside Lambda");
  if (K == 0 || K > prod.truncation_order())
    fail(ErrorCode::BadConfig, "witness: K within the truncation order");

  WitnessReport rep;
  rep.norm_upper = T.norm_upper();
  rep.g_mu_abs = std::abs(T.kernel().log_eval(Complex(mu, 0.0)).value());
  rep.lower_bound = rep.g_mu_abs / rep.norm_upper;

  // boundary sample grid: arc plus both radial edges (deterministic, shared
  // across K so nested fits are comparable)
  const double alpha = T.alpha();
  std::vector<Complex> pts;
  const int n_arc = 320, n_edge = 160;
  for (int i = 0; i < n_arc; ++i) {
    const double th = -alpha + 2.0 * alpha * i / (n_arc - 1);
    pts.push_back(boundary_point(0.0, th));
  }
  const double sig_deep = 12.0;
  for (int i = 1; i <= n_edge; ++i) {
    const double sg = sig_deep * i / n_edge;
    pts.push_back(boundary_point(sg, alpha));
    pts.push_back(boundary_point(sg, -alpha));
  }

  std::vector<std::vector<Complex>> cols(K, std::vector<Complex>(pts.size()));
  std::vector<Complex> b(pts.size());
  for (std::size_t m = 0; m < pts.size(); ++m) {
    b[m] = std::pow(pts[m], mu);
    for (std::size_t k = 0; k < K; ++k)
      cols[k][m] = std::pow(pts[m], prod.sequence().value(k));
  }
  const std::vector<Complex> r = ls_residual(std::move(cols), std::move(b));
  double sup = 0.0;
  for (const Complex& v : r) sup = std::max(sup, std::abs(v));
  rep.ls_residual = sup;
  rep.slack = slack;
  rep.consistent = rep.ls_residual >= rep.lower_bound - slack;
  return rep;
}

}  // namespace muntz
