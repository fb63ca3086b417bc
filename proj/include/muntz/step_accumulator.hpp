#pragma once

#include <cstddef>
#include <vector>

namespace muntz {

// Right-continuous nondecreasing step function on [0, inf) given by jump
// points and positive jump sizes. value_at(t) is the sum of all jump sizes
// at points <= t; it is 0 below the first jump.
class StepAccumulator {
 public:
  StepAccumulator() = default;
  StepAccumulator(std::vector<double> points, std::vector<double> sizes);

  double value_at(double t) const;
  std::size_t jump_count() const { return points_.size(); }
  const std::vector<double>& jump_points() const { return points_; }
  const std::vector<double>& jump_sizes() const { return sizes_; }
  double jump_at(std::size_t i) const { return sizes_[i]; }

  // Total mass up to and including jump index i (prefix sum).
  double prefix(std::size_t i) const { return prefix_[i]; }

 private:
  std::vector<double> points_;
  std::vector<double> sizes_;
  std::vector<double> prefix_;
};

}  // namespace muntz
