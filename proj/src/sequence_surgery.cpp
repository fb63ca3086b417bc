#include "muntz/sequence_surgery.hpp"

#include <algorithm>
#include <cmath>

#include "muntz/errors.hpp"

namespace muntz {

namespace {

// merged, deduplicated jump points of both sequences within the horizon
std::vector<double> merged_jumps(const ExponentSequence& lam,
                                 const ExponentSequence& lam_prime,
                                 double horizon) {
  std::vector<double> pts;
  for (double v : lam.values())
    if (v <= horizon) pts.push_back(v);
  for (double v : lam_prime.values())
    if (v <= horizon) pts.push_back(v);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-12; }),
            pts.end());
  return pts;
}

}  // namespace

double points_char_log(const std::vector<double>& points, double x) {
  double s = 0.0;
  for (double p : points) {
    if (p > x) break;
    s += 1.0 / p;
  }
  return s;
}

std::int64_t points_count(const std::vector<double>& points, double x) {
  return std::upper_bound(points.begin(), points.end(), x) - points.begin();
}

ComparisonPhi comparison_phi(const ExponentSequence& lam,
                             const ExponentSequence& lam_prime, double horizon) {
  if (horizon > lam.horizon() + 1e-12 || horizon > lam_prime.horizon() + 1e-12)
    fail(ErrorCode::HorizonTooSmall,
         "comparison_phi: sequences not materialized to the requested horizon");
  const std::vector<double> pts = merged_jumps(lam, lam_prime, horizon);
  if (pts.empty())
    fail(ErrorCode::HorizonTooSmall, "comparison_phi: no jumps below horizon");

  // D(s) = lambda'(s) - lambda(s) just after each jump
  std::vector<double> D(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    D[i] = lam_prime.characteristic_logarithm(pts[i]) -
           lam.characteristic_logarithm(pts[i]);

  // suffix minima: phi on [pts[i], pts[i+1]) equals suffmin[i]
  std::vector<double> suffmin(D);
  for (std::size_t i = pts.size() - 1; i-- > 0;)
    suffmin[i] = std::min(suffmin[i], suffmin[i + 1]);

  // the infimum must not hinge on the very edge of the window
  double early_min = 0.0;  // D = 0 before the first jump
  bool have_early = false;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i] <= 0.9 * horizon) {
      early_min = have_early ? std::min(early_min, D[i]) : D[i];
      have_early = true;
    }
  early_min = std::min(early_min, 0.0);
  if (suffmin.front() < early_min - 1e-12)
    fail(ErrorCode::HorizonTooSmall,
         "comparison_phi: infimum still decreasing at the window edge");

  ComparisonPhi out;
  out.horizon = horizon;
  out.base = std::min(0.0, suffmin.front());

  std::vector<double> jp, js;
  double prev = out.base;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double delta = suffmin[i] - prev;
    if (delta > 0.0) {
      jp.push_back(pts[i]);
      js.push_back(delta);
      prev = suffmin[i];
    }
  }
  out.steps = StepAccumulator(std::move(jp), std::move(js));
  return out;
}

SurgeryResult build_lambda_star(const ComparisonPhi& phi,
                                const ExponentSequence& lam,
                                const ExponentSequence& lam_prime) {
  SurgeryResult out;
  const auto& pts = phi.steps.jump_points();

  // Lambda* jumps where [Phi] increments; Phi = sum a * dphi(a). Since
  // a dphi(a) <= a dlambda'(a) = 1 at a simple lambda'-point, at most one
  // element appears per jump; the cap absorbs roundoff at exact unit jumps.
  double Phi = 0.0;
  std::int64_t emitted = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Phi += pts[i] * phi.steps.jump_at(i);
    const auto target = static_cast<std::int64_t>(std::floor(Phi + 1e-12));
    if (emitted < target) {
      out.lambda_star.push_back(pts[i]);
      ++emitted;
    }
  }

  // Truncated version of the integral formula for A1:
  //   int_0^X (Phi(s) - [Phi(s)]) ds/s^2 - phi(0)
  double integral = 0.0;
  Phi = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Phi += pts[i] * phi.steps.jump_at(i);
    const double frac = Phi - std::floor(Phi + 1e-12);
    const double s_hi = (i + 1 < pts.size()) ? pts[i + 1] : phi.horizon;
    integral += frac * (1.0 / pts[i] - 1.0 / s_hi);
  }
  out.A1_truncated_integral = integral - phi.base;

  // residual samples r(x) = lambda + lambda* - lambda' on [X/10, 0.9 X];
  // A1 is the average of r over the upper half of that window
  out.h_x_min = std::max(phi.horizon / 10.0, 1.0);
  out.h_x_max = 0.9 * phi.horizon;
  const int samples = 160;
  std::vector<double> r(samples);
  double tail_sum = 0.0;
  int tail_n = 0;
  for (int j = 0; j < samples; ++j) {
    const double x =
        out.h_x_min + (out.h_x_max - out.h_x_min) * (j + 0.5) / samples;
    r[j] = lam.characteristic_logarithm(x) + points_char_log(out.lambda_star, x) -
           lam_prime.characteristic_logarithm(x);
    if (j >= samples / 2) {
      tail_sum += r[j];
      ++tail_n;
    }
  }
  out.A1_tail_average = tail_n > 0 ? tail_sum / tail_n : 0.0;
  for (int j = 0; j < samples; ++j) {
    const double x =
        out.h_x_min + (out.h_x_max - out.h_x_min) * (j + 0.5) / samples;
    out.residual_table.push_back({x, r[j] - out.A1_tail_average});
  }
  return out;
}

AdjustmentResult adjust_double_points(const ExponentSequence& lam,
                                      const std::vector<double>& lambda_star,
                                      double b) {
  if (b <= 0.0) fail(ErrorCode::BadConfig, "adjust_double_points: b > 0 required");
  AdjustmentResult out;
  out.h1 = std::min(lam.gap(), b) / 4.0;
  const auto& lv = lam.values();

  for (double ls : lambda_star) {
    // neighbors lambda_{n_k} <= ls <= lambda_{1+n_k}, with lambda_0 = 0
    auto it = std::upper_bound(lv.begin(), lv.end(), ls);
    const double lo = (it == lv.begin()) ? 0.0 : *(it - 1);
    const double hi = (it == lv.end())
                          ? std::numeric_limits<double>::infinity()
                          : *it;
    double moved = ls;
    if (ls < lo + out.h1)
      moved = ls + out.h1;  // too close to (or on) the left neighbor
    else if (ls > hi - out.h1)
      moved = ls - out.h1;  // strictly inside the right guard band
    out.lambda_double_star.push_back(moved);
    out.A3 += 1.0 / ls - 1.0 / moved;
  }

  // disjointness and the merged gap
  out.disjoint = true;
  for (double v : out.lambda_double_star) {
    if (v <= lam.horizon() + 1e-12 &&
        lam.nearest_exponent_distance(v) < out.h1 * (1.0 - 1e-9)) {
      out.disjoint = false;
      break;
    }
  }
  std::vector<double> merged = out.lambda_double_star;
  for (double v : lv) merged.push_back(v);
  std::sort(merged.begin(), merged.end());
  double g = merged.empty() ? 0.0 : merged.front();
  for (std::size_t i = 1; i < merged.size(); ++i)
    g = std::min(g, merged[i] - merged[i - 1]);
  out.merged_gap = g;
  return out;
}

}  // namespace muntz
