#include "muntz/exponent_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "muntz/errors.hpp"

namespace muntz {

namespace {

constexpr double kEulerGamma = 0.57721566490153286;

// Real digamma via Stirling with argument raising, accurate to ~1e-14 for x>0.
double digamma(double x) {
  if (x <= 0.0) fail(ErrorCode::DomainViolation, "digamma: x must be positive");
  double acc = 0.0;
  while (x < 12.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x, inv2 = inv * inv;
  // psi(x) ~ log x - 1/(2x) - sum B_{2k}/(2k x^{2k})
  double series = inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 -
                  inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
  return acc + std::log(x) - 0.5 * inv - series;
}

// Euler-Maclaurin tail sum_{n >= m} C (sigma + tau n)^{-r}, r > 1, requires
// sigma + tau m reasonably large (callers push m past 16).
double em_tail(double C, double sigma, double tau, double r, double m) {
  const double u = sigma + tau * m;
  const double f = std::pow(u, -r);
  double s = u * f / (tau * (r - 1.0));     // integral_m^inf
  s += 0.5 * f;                             // f(m)/2
  s += r * tau * f / u / 12.0;              // -f'(m)/12
  s -= r * (r + 1) * (r + 2) * tau * tau * tau * f / (u * u * u) / 720.0;
  s += r * (r + 1) * (r + 2) * (r + 3) * (r + 4) * std::pow(tau, 5) * f /
       std::pow(u, 5) / 30240.0;
  return C * s;
}

}  // namespace

ExponentSequence ExponentSequence::explicit_list(std::vector<double> values) {
  ExponentSequence s;
  s.kind_ = SequenceKind::ExplicitList;
  s.values_ = std::move(values);
  if (s.values_.empty())
    fail(ErrorCode::BadConfig, "explicit list: at least one exponent required");
  s.horizon_ = s.values_.back();
  s.finalize();
  return s;
}

ExponentSequence ExponentSequence::arithmetic(double a, double d, double horizon) {
  if (a < 0.0 || d <= 0.0)
    fail(ErrorCode::BadConfig, "arithmetic rule: need a >= 0, d > 0");
  ExponentSequence s;
  s.kind_ = SequenceKind::Arithmetic;
  s.a_ = a;
  s.d_ = d;
  s.horizon_ = horizon;
  for (std::int64_t n = 1; a + d * static_cast<double>(n) <= horizon; ++n)
    s.values_.push_back(a + d * static_cast<double>(n));
  if (s.values_.empty())
    fail(ErrorCode::BadConfig, "arithmetic rule: horizon below first exponent");
  s.finalize();
  return s;
}

ExponentSequence ExponentSequence::power(double p, double horizon) {
  if (p < 1.0)
    fail(ErrorCode::NonpositiveGap,
         "power rule: p < 1 makes the gap infimum zero");
  ExponentSequence s;
  s.kind_ = SequenceKind::Power;
  s.p_ = p;
  s.horizon_ = horizon;
  for (std::int64_t n = 1; std::pow(static_cast<double>(n), p) <= horizon; ++n)
    s.values_.push_back(std::pow(static_cast<double>(n), p));
  if (s.values_.empty())
    fail(ErrorCode::BadConfig, "power rule: horizon below first exponent");
  s.finalize();
  return s;
}

ExponentSequence ExponentSequence::progression(double b, double horizon) {
  if (b <= 0.0) fail(ErrorCode::BadConfig, "progression rule: need b > 0");
  ExponentSequence s;
  s.kind_ = SequenceKind::Progression;
  s.b_ = b;
  s.horizon_ = horizon;
  for (std::int64_t n = 1; static_cast<double>(n) / b <= horizon; ++n)
    s.values_.push_back(static_cast<double>(n) / b);
  if (s.values_.empty())
    fail(ErrorCode::BadConfig, "progression rule: horizon below first exponent");
  s.finalize();
  return s;
}

void ExponentSequence::finalize() {
  double prev = 0.0;
  for (double v : values_) {
    if (!(v > prev))
      fail(ErrorCode::NonpositiveGap,
           "exponents must be strictly increasing and positive");
    prev = v;
  }
  inv_prefix_.resize(values_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    acc += 1.0 / values_[i];
    inv_prefix_[i] = acc;
  }
}

double ExponentSequence::rule_value(std::int64_t n) const {
  switch (kind_) {
    case SequenceKind::Arithmetic:
      return a_ + d_ * static_cast<double>(n);
    case SequenceKind::Power:
      return std::pow(static_cast<double>(n), p_);
    case SequenceKind::Progression:
      return static_cast<double>(n) / b_;
    default:
      fail(ErrorCode::BadConfig, "rule_value on explicit list");
  }
}

std::int64_t ExponentSequence::rule_count(double t) const {
  if (t < rule_value(1)) return 0;
  // closed-form guess, then integer refinement to dodge float-floor hazards
  std::int64_t n;
  switch (kind_) {
    case SequenceKind::Arithmetic:
      n = static_cast<std::int64_t>((t - a_) / d_);
      break;
    case SequenceKind::Power:
      n = static_cast<std::int64_t>(std::pow(t, 1.0 / p_));
      break;
    case SequenceKind::Progression:
      n = static_cast<std::int64_t>(b_ * t);
      break;
    default:
      fail(ErrorCode::BadConfig, "rule_count on explicit list");
  }
  if (n < 1) n = 1;
  while (rule_value(n + 1) <= t) ++n;
  while (n >= 1 && rule_value(n) > t) --n;
  return n;
}

double ExponentSequence::characteristic_logarithm(double t) const {
  if (t <= 0.0) return 0.0;
  if (kind_ == SequenceKind::ExplicitList) {
    if (t > horizon_)
      fail(ErrorCode::HorizonExceeded,
           "characteristic logarithm: t beyond explicit-list horizon");
    auto it = std::upper_bound(values_.begin(), values_.end(), t);
    if (it == values_.begin()) return 0.0;
    return inv_prefix_[static_cast<std::size_t>(it - values_.begin()) - 1];
  }
  const std::int64_t n = rule_count(t);
  if (n == 0) return 0.0;
  if (static_cast<std::size_t>(n) <= values_.size())
    return inv_prefix_[static_cast<std::size_t>(n) - 1];
  double acc = inv_prefix_.back();
  for (std::int64_t k = static_cast<std::int64_t>(values_.size()) + 1; k <= n; ++k)
    acc += 1.0 / rule_value(k);
  return acc;
}

std::int64_t ExponentSequence::counting_function(double t) const {
  if (t <= 0.0) return 0;
  if (kind_ == SequenceKind::ExplicitList) {
    if (t > horizon_)
      fail(ErrorCode::HorizonExceeded,
           "counting function: t beyond explicit-list horizon");
    auto it = std::upper_bound(values_.begin(), values_.end(), t);
    return static_cast<std::int64_t>(it - values_.begin());
  }
  return rule_count(t);
}

double ExponentSequence::gap() const {
  switch (kind_) {
    case SequenceKind::Arithmetic:
      return d_;  // lambda_1 - 0 = a + d >= d
    case SequenceKind::Power: {
      // consecutive differences are nondecreasing for p >= 1
      return std::min(values_[0], p_ == 1.0 ? 1.0 : std::pow(2.0, p_) - 1.0);
    }
    case SequenceKind::Progression:
      return 1.0 / b_;
    case SequenceKind::ExplicitList: {
      double g = values_[0];
      for (std::size_t i = 1; i < values_.size(); ++i)
        g = std::min(g, values_[i] - values_[i - 1]);
      if (!(g > 0.0))
        fail(ErrorCode::NonpositiveGap, "gap: ties or decreases detected");
      return g;
    }
  }
  fail(ErrorCode::BadConfig, "gap: unknown kind");
}

double ExponentSequence::characteristic_tail(double x) const {
  switch (kind_) {
    case SequenceKind::ExplicitList: {
      double s = 0.0;
      for (auto it = values_.rbegin(); it != values_.rend() && *it > x; ++it)
        s += 1.0 / *it;
      return s;
    }
    case SequenceKind::Power: {
      if (p_ <= 1.0)
        fail(ErrorCode::DomainViolation,
             "characteristic tail diverges for power p <= 1");
      const std::int64_t n0 = rule_count(x);
      // explicit terms up to index m-1, Euler-Maclaurin from m
      const std::int64_t m = std::max<std::int64_t>(n0 + 1, 16);
      double s = 0.0;
      for (std::int64_t k = n0 + 1; k < m; ++k) s += 1.0 / rule_value(k);
      return s + em_tail(1.0, 0.0, 1.0, p_, static_cast<double>(m));
    }
    default:
      fail(ErrorCode::DomainViolation,
           "characteristic tail diverges for this rule");
  }
}

double ExponentSequence::tail_power_sum(double q, std::size_t N) const {
  if (q <= 1.0) fail(ErrorCode::BadConfig, "tail_power_sum: need q > 1");
  if (kind_ == SequenceKind::ExplicitList) return 0.0;
  const std::int64_t m0 = static_cast<std::int64_t>(N) + 1;
  const std::int64_t m = std::max<std::int64_t>(m0, 16);
  double s = 0.0;
  for (std::int64_t k = m0; k < m; ++k) s += std::pow(rule_value(k), -q);
  switch (kind_) {
    case SequenceKind::Arithmetic:
      return s + em_tail(1.0, a_, d_, q, static_cast<double>(m));
    case SequenceKind::Power:
      return s + em_tail(1.0, 0.0, 1.0, p_ * q, static_cast<double>(m));
    case SequenceKind::Progression:
      // (n/b)^{-q} = b^q n^{-q}
      return s + em_tail(std::pow(b_, q), 0.0, 1.0, q, static_cast<double>(m));
    default:
      break;
  }
  fail(ErrorCode::BadConfig, "tail_power_sum: unknown kind");
}

double ExponentSequence::nearest_exponent_distance(double x) const {
  if (kind_ == SequenceKind::ExplicitList || x <= values_.back()) {
    auto it = std::lower_bound(values_.begin(), values_.end(), x);
    double best = std::numeric_limits<double>::infinity();
    if (it != values_.end()) best = std::min(best, std::abs(*it - x));
    if (it != values_.begin()) best = std::min(best, std::abs(*(it - 1) - x));
    if (kind_ != SequenceKind::ExplicitList && it == values_.end())
      best = std::min(best, std::abs(rule_value(static_cast<std::int64_t>(values_.size()) + 1) - x));
    return best;
  }
  const std::int64_t n = rule_count(x);
  double best = std::numeric_limits<double>::infinity();
  if (n >= 1) best = std::min(best, std::abs(x - rule_value(n)));
  best = std::min(best, std::abs(rule_value(n + 1) - x));
  return best;
}

StepAccumulator ExponentSequence::characteristic_log_steps() const {
  std::vector<double> sizes(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) sizes[i] = 1.0 / values_[i];
  return StepAccumulator(values_, std::move(sizes));
}

StepAccumulator ExponentSequence::counting_steps() const {
  return StepAccumulator(values_, std::vector<double>(values_.size(), 1.0));
}

std::string ExponentSequence::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case SequenceKind::ExplicitList:
      os << "list[" << values_.size() << "]";
      break;
    case SequenceKind::Arithmetic:
      os << "arithmetic(" << a_ << "+" << d_ << "n)";
      break;
    case SequenceKind::Power:
      os << "power(n^" << p_ << ")";
      break;
    case SequenceKind::Progression:
      os << "progression(n/" << b_ << ")";
      break;
  }
  os << " horizon=" << horizon_;
  return os.str();
}

Density muntz_density_test(const ExponentSequence& seq) {
  switch (seq.kind()) {
    case SequenceKind::Arithmetic:
    case SequenceKind::Progression:
      return Density::Dense;
    case SequenceKind::Power:
      return seq.param_p() > 1.0 ? Density::Incomplete : Density::Dense;
    case SequenceKind::ExplicitList:
      return Density::Inconclusive;
  }
  return Density::Inconclusive;
}

const char* to_string(Density d) {
  switch (d) {
    case Density::Dense: return "dense";
    case Density::Incomplete: return "incomplete";
    case Density::Inconclusive: return "inconclusive";
  }
  return "?";
}

ExponentSequence arithmetic_progression(double b, double horizon) {
  return ExponentSequence::progression(b, horizon);
}

EpsilonTable::EpsilonTable(std::vector<double> points, std::vector<double> values)
    : points_(std::move(points)), values_(std::move(values)) {
  if (points_.empty() || points_.size() != values_.size())
    fail(ErrorCode::BadConfig, "epsilon table: empty or mismatched");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (values_[i] < 0.0)
      fail(ErrorCode::BadConfig, "epsilon table: values must be >= 0");
    if (i > 0 && (points_[i] <= points_[i - 1] || values_[i] > values_[i - 1]))
      fail(ErrorCode::BadConfig,
           "epsilon table: points must increase, values must not increase");
  }
}

EpsilonTable EpsilonTable::constant(double value) {
  return EpsilonTable({1.0}, {value});
}

double EpsilonTable::operator()(double x) const {
  auto it = std::upper_bound(points_.begin(), points_.end(), x);
  if (it == points_.begin()) return values_.front();
  return values_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

Condition3Report check_condition3(const ExponentSequence& seq, double alpha,
                                  const EpsilonTable& eps,
                                  const std::vector<std::pair<double, double>>& grid) {
  if (grid.empty()) fail(ErrorCode::EmptyGrid, "check_condition3: empty grid");
  constexpr double kPi = 3.14159265358979323846;
  Condition3Report rep;
  bool first = true;
  for (const auto& [x, y] : grid) {
    if (!(y > x && x >= 1.0))
      fail(ErrorCode::BadConfig, "check_condition3: need y > x >= 1");
    const double lhs = seq.characteristic_logarithm(y) -
                       seq.characteristic_logarithm(x);
    const double margin = eps(x) + (alpha / kPi) * std::log(y / x) - lhs;
    if (first || margin < rep.worst_margin) {
      rep.worst_margin = margin;
      rep.worst_x = x;
      rep.worst_y = y;
      first = false;
    }
  }
  rep.holds = rep.worst_margin >= 0.0;
  return rep;
}

GrowthConstants estimate_growth_constants(const ExponentSequence& seq) {
  GrowthConstants g;
  switch (seq.kind()) {
    case SequenceKind::Progression: {
      const double b = seq.param_b();
      g.b = b;
      g.A2 = b * std::log(b) + b * kEulerGamma;
      break;
    }
    case SequenceKind::Arithmetic: {
      const double d = seq.param_d(), a = seq.param_a();
      g.b = 1.0 / d;
      g.A2 = (-std::log(d) - digamma(1.0 + a / d)) / d;
      break;
    }
    case SequenceKind::Power: {
      if (seq.param_p() == 1.0) {
        g.b = 1.0;
        g.A2 = kEulerGamma;
      } else {
        g.b = 0.0;
        const double x0 = seq.value(seq.size() / 2);
        g.A2 = seq.characteristic_logarithm(x0) + seq.characteristic_tail(x0);
      }
      break;
    }
    case SequenceKind::ExplicitList: {
      g.b = 0.0;
      g.A2 = seq.characteristic_logarithm(seq.horizon());
      break;
    }
  }
  // measure the residual over the materialized tail
  const double X = seq.horizon();
  double sup = 0.0;
  for (int j = 1; j <= 16; ++j) {
    const double x = X * (0.5 + 0.5 * j / 16.0);
    const double lam = seq.characteristic_logarithm(x);
    const double model = g.b * std::log(std::max(x, 1.0)) + g.A2;
    sup = std::max(sup, std::abs(lam - model));
  }
  g.residual_sup = sup;
  return g;
}

}  // namespace muntz
