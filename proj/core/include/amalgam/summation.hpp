#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace amalgam {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Pairwise (cascade) summation with a fixed reduction tree, so the result
/// depends only on the input order.
double pairwise_sum(std::span<const double> values);

/// Accumulates an l^q quasi-norm; q = infinity reduces with max.
class LqAccumulator {
 public:
  explicit LqAccumulator(double q) : q_(q) {}

  void add(double magnitude) {
    if (std::isinf(q_)) {
      if (magnitude > acc_) acc_ = magnitude;
    } else if (q_ == 1.0) {
      acc_ += magnitude;
    } else if (q_ == 2.0) {
      acc_ += magnitude * magnitude;
    } else if (magnitude != 0.0) {
      acc_ += std::pow(magnitude, q_);
    }
  }

  double value() const {
    if (std::isinf(q_) || q_ == 1.0) return acc_;
    if (q_ == 2.0) return std::sqrt(acc_);
    return std::pow(acc_, 1.0 / q_);
  }

 private:
  double q_;
  double acc_ = 0.0;
};

void require_exponent(double p, const char* what);

}  // namespace amalgam
