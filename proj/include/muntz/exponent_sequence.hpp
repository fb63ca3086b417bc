#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "muntz/step_accumulator.hpp"

namespace muntz {

enum class SequenceKind { ExplicitList, Arithmetic, Power, Progression };

enum class Density { Dense, Incomplete, Inconclusive };

// Strictly increasing positive exponents lambda_1 < lambda_2 < ... with the
// implicit lambda_0 = 0. Generator rules (a + d n, n^p, n/b) know their own
// analytic tails; explicit lists are treated as complete sequences.
// All state is frozen at construction; every method is const and pure.
class ExponentSequence {
 public:
  static ExponentSequence explicit_list(std::vector<double> values);
  static ExponentSequence arithmetic(double a, double d, double horizon);
  static ExponentSequence power(double p, double horizon);
  static ExponentSequence progression(double b, double horizon);

  SequenceKind kind() const { return kind_; }
  double horizon() const { return horizon_; }
  std::size_t size() const { return values_.size(); }
  // lambda_{i+1}; index 0 is the first exponent.
  double value(std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  // lambda(t) = sum of 1/lambda_n over 0 < lambda_n <= t, exact partial sum.
  double characteristic_logarithm(double t) const;
  // Lambda(t) = #{ lambda_n <= t }.
  std::int64_t counting_function(double t) const;
  // delta(Lambda) = inf of consecutive differences, lambda_1 - 0 included.
  double gap() const;

  // sum over lambda_n > x of 1/lambda_n. Exact for convergent generator
  // rules (power p > 1); zero beyond the horizon for explicit lists;
  // an error for divergent rules.
  double characteristic_tail(double x) const;

  // sum over n > N of lambda_n^{-q}, q > 1. Analytic for generators,
  // zero for explicit lists (the list is the whole sequence).
  double tail_power_sum(double q, std::size_t N) const;

  // inf_n |x - lambda_n|, rule-aware beyond the horizon for generators.
  double nearest_exponent_distance(double x) const;

  // Step-function views sharing the same jump points.
  StepAccumulator characteristic_log_steps() const;
  StepAccumulator counting_steps() const;

  std::string describe() const;

  // Generator parameters (meaningful per kind).
  double param_a() const { return a_; }
  double param_d() const { return d_; }
  double param_p() const { return p_; }
  double param_b() const { return b_; }

 private:
  ExponentSequence() = default;
  void finalize();
  double rule_value(std::int64_t n) const;  // lambda_n for generators, n >= 1
  std::int64_t rule_count(double t) const;  // #{ lambda_n <= t } for generators

  SequenceKind kind_ = SequenceKind::ExplicitList;
  double horizon_ = 0.0;
  double a_ = 0.0, d_ = 1.0, p_ = 2.0, b_ = 1.0;
  std::vector<double> values_;
  std::vector<double> inv_prefix_;  // prefix sums of 1/lambda_n
};

// Decides Muntz density of span{ z^{lambda_n} } in C[0,1] from the rule:
// divergence of sum 1/lambda_n. Finite explicit lists are inconclusive.
Density muntz_density_test(const ExponentSequence& seq);

const char* to_string(Density d);

// alias for the progression factory, lambda_n = n / b
ExponentSequence arithmetic_progression(double b, double horizon);

// Decreasing epsilon(x) supplied as a sampled table with step-constant
// interpolation: eps(x) = value at the greatest sample point <= x.
class EpsilonTable {
 public:
  EpsilonTable(std::vector<double> points, std::vector<double> values);
  static EpsilonTable constant(double value);
  double operator()(double x) const;

 private:
  std::vector<double> points_;
  std::vector<double> values_;
};

struct Condition3Report {
  bool holds = false;
  double worst_margin = 0.0;
  double worst_x = 0.0, worst_y = 0.0;
};

// Checks lambda(y) - lambda(x) <= (alpha/pi) log(y/x) + eps(x) on grid pairs;
// the margin is the slack of that inequality, negative where it fails.
Condition3Report check_condition3(const ExponentSequence& seq, double alpha,
                                  const EpsilonTable& eps,
                                  const std::vector<std::pair<double, double>>& grid);

struct GrowthConstants {
  double b = 0.0;            // slope of lambda(x) ~ b log x + A2
  double A2 = 0.0;           // additive constant
  double residual_sup = 0.0; // sup over sampled tail of |lambda(x)-b log x-A2|
};

// Constants of the growth model lambda(x) = b log+ x + A2 + o(1).
// Exact for generator rules, tail-estimated for explicit lists.
GrowthConstants estimate_growth_constants(const ExponentSequence& seq);

}  // namespace muntz
