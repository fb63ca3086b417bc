#include "muntz/step_accumulator.hpp"

#include <algorithm>

#include "muntz/errors.hpp"

namespace muntz {

StepAccumulator::StepAccumulator(std::vector<double> points,
                                 std::vector<double> sizes)
    : points_(std::move(points)), sizes_(std::move(sizes)) {
  if (points_.size() != sizes_.size())
    fail(ErrorCode::BadConfig, "step accumulator: points/sizes length mismatch");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] <= 0.0)
      fail(ErrorCode::BadConfig, "step accumulator: jump points must be positive");
    if (i > 0 && points_[i] <= points_[i - 1])
      fail(ErrorCode::BadConfig, "step accumulator: jump points must increase");
    if (sizes_[i] <= 0.0)
      fail(ErrorCode::BadConfig, "step accumulator: jump sizes must be positive");
  }
  prefix_.resize(points_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    acc += sizes_[i];
    prefix_[i] = acc;
  }
}

double StepAccumulator::value_at(double t) const {
  auto it = std::upper_bound(points_.begin(), points_.end(), t);
  if (it == points_.begin()) return 0.0;
  return prefix_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

}  // namespace muntz
