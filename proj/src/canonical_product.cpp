#include "muntz/canonical_product.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "muntz/errors.hpp"
#include "muntz/special_functions.hpp"

namespace muntz {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLogSqrtPi = 0.57236494292470009;
constexpr double kMaxLogMod = 709.0;
}  // namespace

Complex LogValue::value() const {
  if (is_zero) return {0.0, 0.0};
  if (log.real() > kMaxLogMod)
    fail(ErrorCode::Overflow, "log-domain value exceeds double range");
  return std::exp(log);
}

TruncatedProduct::TruncatedProduct(ExponentSequence seq, std::size_t N,
                                   double pole_guard)
    : seq_(std::move(seq)), N_(N) {
  if (N_ == 0 || N_ > seq_.size())
    fail(ErrorCode::BadConfig, "truncation order must be in [1, materialized size]");
  guard_ = pole_guard >= 0.0 ? pole_guard : seq_.gap() / 40.0;  // delta0/10
  if (seq_.kind() == SequenceKind::ExplicitList) {
    // the list is the whole sequence: the "truncated" product is exact
    N_ = seq_.size();
    lambda_next_ = std::numeric_limits<double>::infinity();
  } else {
    lambda_next_ = N_ < seq_.size()
                       ? seq_.value(N_)
                       : seq_.value(N_ - 1) + seq_.gap();
    tail_sums_.reserve(6);
    for (int k = 1; k <= 6; ++k)
      tail_sums_.push_back(seq_.tail_power_sum(2.0 * k + 1.0, N_));
  }
}

TruncatedProduct TruncatedProduct::for_radius(ExponentSequence seq, double radius) {
  if (seq.kind() == SequenceKind::ExplicitList)
    return TruncatedProduct(std::move(seq), seq.size());
  const auto& v = seq.values();
  auto it = std::lower_bound(v.begin(), v.end(), 10.0 * radius);
  if (it == v.end())
    fail(ErrorCode::HorizonTooSmall,
         "for_radius: horizon too small for lambda_N >= 10 |z|; extend the "
         "materialized horizon");
  const std::size_t N = static_cast<std::size_t>(it - v.begin()) + 1;
  return TruncatedProduct(std::move(seq), std::min(N, v.size()));
}

double TruncatedProduct::contract_radius() const {
  return seq_.value(N_ - 1) / 10.0;
}

double TruncatedProduct::max_safe_radius() const {
  return 0.499 * lambda_next_;
}

void TruncatedProduct::check_poles(Complex z) const {
  if (z.real() >= 0.0) return;  // poles sit on the negative real axis
  if (std::abs(z.imag()) >= guard_) return;
  const double mirror = -z.real();
  const double d = seq_.nearest_exponent_distance(mirror);
  if (std::hypot(d, z.imag()) < guard_)
    fail(ErrorCode::PoleProximity,
         "evaluation point within pole guard of a product pole");
}

LogValue TruncatedProduct::eval_log(Complex z) const {
  return eval_log_rest(z, static_cast<std::size_t>(-1));
}

LogValue TruncatedProduct::eval_log_rest(Complex z, std::size_t skip) const {
  check_poles(z);
  LogValue out;
  if (std::isfinite(lambda_next_)) {
    const double r = std::abs(z) / lambda_next_;
    if (r >= 0.5)
      fail(ErrorCode::TruncationInsufficient,
           "|z| too large for the truncation order; rebuild with for_radius");
  }
  Complex acc{0.0, 0.0};
  double abs_acc = 0.0;
  for (std::size_t n = 0; n < N_; ++n) {
    if (n == skip) continue;
    const double lam = seq_.value(n);
    const Complex num = lam - z;
    if (num == Complex(0.0, 0.0)) {
      out.is_zero = true;
      return out;
    }
    const Complex term = std::log(num / (lam + z)) + 2.0 * z / lam;
    acc += term;
    abs_acc += std::abs(term);
  }
  // analytic tail: -2 sum_k z^{2k+1}/(2k+1) * S_{2k+1}
  double remainder = 0.0;
  if (std::isfinite(lambda_next_)) {
    const Complex z2 = z * z;
    Complex zp = z * z2;  // z^3
    for (std::size_t k = 0; k < tail_sums_.size(); ++k) {
      acc += -2.0 * zp / (2.0 * k + 3.0) * tail_sums_[k];
      zp *= z2;
    }
    // next-order remainder, geometric in (|z|/lambda_{N+1})^2
    const double r2 = std::norm(z) / (lambda_next_ * lambda_next_);
    const double s15 = tail_sums_.back() / (lambda_next_ * lambda_next_);
    remainder = 2.0 * std::pow(std::abs(z), 15.0) * s15 / (15.0 * (1.0 - r2));
  }
  out.log = acc;
  out.tail_bound = remainder + 2e-16 * abs_acc;
  return out;
}

Complex TruncatedProduct::eval(Complex z) const {
  const LogValue v = eval_log(z);
  return v.value();
}

SieveRegion::SieveRegion(const ExponentSequence& seq)
    : seq_(&seq), delta0_(seq.gap() / 4.0) {}

bool SieveRegion::contains(Complex z) const {
  if (z.real() < 0.0) return false;
  if (std::abs(z.imag()) >= delta0_) return true;
  const double d = seq_->nearest_exponent_distance(z.real());
  return std::hypot(d, z.imag()) >= delta0_;
}

FuchsReport certify_fuchs_bounds(const TruncatedProduct& prod,
                                 const std::vector<Complex>& grid) {
  if (grid.empty()) fail(ErrorCode::EmptyGrid, "certify_fuchs_bounds: empty grid");
  const SieveRegion sieve(prod.sequence());
  FuchsReport rep;
  rep.a_upper = -std::numeric_limits<double>::infinity();
  rep.a_lower = -std::numeric_limits<double>::infinity();
  bool any_sieve = false;
  for (Complex z : grid) {
    const double x = z.real();
    if (x < 1e-6) {  // the bounds divide by x and are vacuous at x = 0
      ++rep.skipped_near_imaginary;
      continue;
    }
    const LogValue lv = prod.eval_log(z);
    const double logG =
        lv.is_zero ? -std::numeric_limits<double>::infinity() : lv.log.real();
    const double lam = prod.sequence().characteristic_logarithm(std::abs(z));
    const double up = (logG - x * lam) / x;
    const bool in_sieve = sieve.contains(z);
    rep.points.push_back({z, logG, up, in_sieve});
    rep.a_upper = std::max(rep.a_upper, up);
    if (in_sieve) {
      any_sieve = true;
      rep.a_lower = std::max(rep.a_lower, -up);
    }
    ++rep.used;
  }
  if (rep.used == 0)
    fail(ErrorCode::EmptyGrid, "certify_fuchs_bounds: all points near the imaginary axis");
  if (!any_sieve)
    fail(ErrorCode::SieveViolation,
         "certify_fuchs_bounds: no grid point passes sieve membership for the lower bound");
  rep.pass = std::isfinite(rep.a_upper) && std::isfinite(rep.a_lower);
  return rep;
}

KernelParams KernelParams::from(double b, double A2) {
  if (b < 0.0) fail(ErrorCode::BadConfig, "KernelParams: b >= 0 required");
  KernelParams kp;
  kp.b = b;
  kp.A2 = A2;
  kp.a0 = b == 0.0 ? 2.0 * A2 : 2.0 * A2 - 2.0 * b * std::log(2.0 * b);
  return kp;
}

KernelParams KernelParams::for_sequence(const ExponentSequence& seq) {
  const GrowthConstants g = estimate_growth_constants(seq);
  return from(g.b, g.A2);
}

LogValue log_g0(const TruncatedProduct& prod, const KernelParams& kp, Complex z) {
  if (z.real() < 0.0)
    fail(ErrorCode::DomainViolation, "g0: requires Re z >= 0");
  LogValue G = prod.eval_log(z);
  if (G.is_zero) return G;
  if (kp.b == 0.0)
    G.log += -kp.a0 * z - kLogSqrtPi;
  else
    G.log += -kp.a0 * z - log_gamma(0.5 + 2.0 * kp.b * z);
  return G;
}

Complex evaluate_g0(const TruncatedProduct& prod, const KernelParams& kp, Complex z) {
  return log_g0(prod, kp, z).value();
}

LogValue log_g(const TruncatedProduct& prod, double alpha, double A, Complex z) {
  if (z.real() < 0.0)
    fail(ErrorCode::DomainViolation, "g: requires Re z >= 0");
  LogValue G = prod.eval_log(z);
  if (G.is_zero) return G;
  if (z == Complex(0.0, 0.0)) {
    G.is_zero = true;  // the z^2 factor
    return G;
  }
  const double b = alpha / kPi;
  G.log += 2.0 * std::log(z) - A * z - 4.0 * std::log(1.0 + z);
  G.log -= (b == 0.0) ? Complex(kLogSqrtPi, 0.0) : log_gamma(0.5 + 2.0 * b * z);
  return G;
}

Complex evaluate_g(const TruncatedProduct& prod, double alpha, double A, Complex z) {
  return log_g(prod, alpha, A, z).value();
}

LogValue log_psi_k(const TruncatedProduct& prod, const KernelParams& kp,
                   std::size_t k, Complex z) {
  if (z.real() < 0.0)
    fail(ErrorCode::DomainViolation, "psi_k: requires Re z >= 0");
  if (k >= prod.truncation_order())
    fail(ErrorCode::BadConfig, "psi_k: k beyond truncation order");
  const double lam = prod.sequence().value(k);
  LogValue rest = prod.eval_log_rest(z, k);
  if (rest.is_zero) return rest;  // z equals another exponent
  if (z == Complex(0.0, 0.0)) {
    rest.is_zero = true;  // the z^2 factor
    return rest;
  }
  // k-th factor over (z - lambda_k), continued through the zero:
  //   ((lam - z)/(lam + z)) e^{2z/lam} / (z - lam)
  //     = -e^2 e^{2u/lam} / (2 lam + u),  u = z - lam
  const Complex u = z - lam;
  rest.log += Complex(2.0, kPi) + 2.0 * u / lam - std::log(2.0 * lam + u);
  rest.log += 2.0 * std::log(z) - 4.0 * std::log(1.0 + z) - kp.a0 * z;
  rest.log -= (kp.b == 0.0) ? Complex(kLogSqrtPi, 0.0)
                            : log_gamma(0.5 + 2.0 * kp.b * z);
  return rest;
}

Complex evaluate_psi_k(const TruncatedProduct& prod, const KernelParams& kp,
                       std::size_t k, Complex z) {
  return log_psi_k(prod, kp, k, z).value();
}

LogValue log_psi_k_at_zero(const TruncatedProduct& prod, const KernelParams& kp,
                           std::size_t k) {
  return log_psi_k(prod, kp, k, Complex(prod.sequence().value(k), 0.0));
}

std::vector<Complex> cauchy_derivatives(const std::function<Complex(Complex)>& f,
                                        Complex z0, double radius, int m,
                                        int n_points) {
  std::vector<Complex> samples(n_points);
  for (int l = 0; l < n_points; ++l) {
    const double th = 2.0 * kPi * l / n_points;
    samples[l] = f(z0 + radius * std::exp(Complex(0.0, th)));
  }
  std::vector<Complex> out(m + 1);
  double fact = 1.0;
  for (int j = 0; j <= m; ++j) {
    if (j > 0) fact *= j;
    Complex s{0.0, 0.0};
    for (int l = 0; l < n_points; ++l) {
      const double th = 2.0 * kPi * l / n_points;
      s += samples[l] * std::exp(Complex(0.0, -j * th));
    }
    out[j] = fact * s / (static_cast<double>(n_points) * std::pow(radius, j));
  }
  return out;
}

double suggest_kernel_constant(const FuchsReport& report) {
  return report.a_upper + 10.0;
}

}  // namespace muntz
