#pragma once

#include <vector>

#include "muntz/exponent_sequence.hpp"
#include "muntz/step_accumulator.hpp"

namespace muntz {

// phi(x) = inf{ lambda'(s) - lambda(s) : s >= x }, computed over the finite
// window [x, horizon]. `steps` holds the jumps of phi (phi minus phi(0));
// phi(0) = base. Jumps occur only at jumps of lambda'.
struct ComparisonPhi {
  StepAccumulator steps;
  double base = 0.0;
  double horizon = 0.0;
  double value_at(double x) const { return base + steps.value_at(x); }
};

ComparisonPhi comparison_phi(const ExponentSequence& lam,
                             const ExponentSequence& lam_prime, double horizon);

struct SurgeryResult {
  std::vector<double> lambda_star;  // subsequence of lambda', possibly empty
  double A1_tail_average = 0.0;     // empirical estimate of the constant
  double A1_truncated_integral = 0.0;  // integral formula over the window
  double h_x_min = 0.0, h_x_max = 0.0;  // verification window
  struct Sample {
    double x;
    double residual;  // lambda(x) + lambda*(x) - lambda'(x) - A1
  };
  std::vector<Sample> residual_table;
};

// The surgery subsequence: Phi(t) = Stieltjes sum of a * d phi(a) over jumps
// a <= t, counting function Lambda*(t) = [Phi(t)].
SurgeryResult build_lambda_star(const ComparisonPhi& phi,
                                const ExponentSequence& lam,
                                const ExponentSequence& lam_prime);

struct AdjustmentResult {
  std::vector<double> lambda_double_star;
  double h1 = 0.0;
  double A3 = 0.0;
  bool disjoint = false;
  double merged_gap = 0.0;  // delta(Lambda ∪ Lambda**)
};

// Double-point adjustment: shifts lambda* points off Lambda by h1 =
// min{delta(Lambda), b}/4 using the three-case rule, and accumulates
// A3 = sum(1/lambda_k* - 1/lambda_k**).
AdjustmentResult adjust_double_points(const ExponentSequence& lam,
                                      const std::vector<double>& lambda_star,
                                      double b);

// characteristic logarithm of a plain sorted point set
double points_char_log(const std::vector<double>& points, double x);
// counting function of a plain sorted point set
std::int64_t points_count(const std::vector<double>& points, double x);

}  // namespace muntz
