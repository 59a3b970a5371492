#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace amalgam {

/// Uniform periodic grid on the torus prod_i [-L_i/2, L_i/2) with N_i samples
/// per axis. Sample j on axis i sits at x = -L_i/2 + j L_i / N_i; frequency
/// index m on axis i is xi = m / L_i with m in [-N_i/2, N_i/2).
class GridSpec {
 public:
  GridSpec(std::vector<int> period, std::vector<int> samples);
  static GridSpec uniform(int dimension, int period, int samples);

  int dimension() const { return static_cast<int>(period_.size()); }
  const std::vector<int>& period() const { return period_; }
  const std::vector<int>& samples() const { return samples_; }
  int period(int axis) const { return period_[static_cast<std::size_t>(axis)]; }
  int samples(int axis) const { return samples_[static_cast<std::size_t>(axis)]; }

  std::size_t size() const { return size_; }
  /// Row-major stride of an axis (last axis contiguous).
  std::size_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }

  double spacing(int axis) const { return static_cast<double>(period(axis)) / samples(axis); }
  double coordinate(int axis, int j) const { return -0.5 * period(axis) + j * spacing(axis); }
  /// Cell volume prod_i L_i / N_i used by the Riemann-sum quadrature.
  double cell_volume() const;
  /// Largest representable frequency magnitude min_i N_i / (2 L_i).
  double nyquist() const;
  /// True when every window of radius K is fully representable: N_i/(2L_i) > K+1.
  bool resolves_radius(int truncation_radius) const;

  /// Sample index on the last axis where x_n = 0.
  int zero_index(int axis) const;

  /// Grid made of the first n-1 axes.
  GridSpec leading() const;
  /// The given axis as a one-dimensional grid.
  GridSpec axis_grid(int axis) const;
  /// Grid with the sample count on every axis multiplied by factor.
  GridSpec refined(int factor) const;

  std::vector<int> unravel(std::size_t flat) const;

  bool operator==(const GridSpec&) const = default;

  std::string describe() const;

 private:
  std::vector<int> period_;
  std::vector<int> samples_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

}  // namespace amalgam
