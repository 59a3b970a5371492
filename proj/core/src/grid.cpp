#include "amalgam/grid.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace amalgam {

GridSpec::GridSpec(std::vector<int> period, std::vector<int> samples)
    : period_(std::move(period)), samples_(std::move(samples)) {
  if (period_.empty()) throw std::invalid_argument("GridSpec: dimension must be positive");
  if (period_.size() != samples_.size())
    throw std::invalid_argument("GridSpec: period and sample vectors differ in length");
  for (std::size_t i = 0; i < period_.size(); ++i) {
    if (period_[i] <= 0) throw std::invalid_argument("GridSpec: period must be positive");
    if (samples_[i] <= 0 || samples_[i] % 2 != 0)
      throw std::invalid_argument("GridSpec: sample count must be positive and even");
  }
  strides_.assign(period_.size(), 1);
  for (int i = static_cast<int>(period_.size()) - 2; i >= 0; --i)
    strides_[static_cast<std::size_t>(i)] =
        strides_[static_cast<std::size_t>(i) + 1] * static_cast<std::size_t>(samples_[static_cast<std::size_t>(i) + 1]);
  size_ = strides_[0] * static_cast<std::size_t>(samples_[0]);
}

GridSpec GridSpec::uniform(int dimension, int period, int samples) {
  if (dimension < 1) throw std::invalid_argument("GridSpec: dimension must be positive");
  return GridSpec(std::vector<int>(static_cast<std::size_t>(dimension), period),
                  std::vector<int>(static_cast<std::size_t>(dimension), samples));
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (int i = 0; i < dimension(); ++i) v *= spacing(i);
  return v;
}

double GridSpec::nyquist() const {
  double f = std::numeric_limits<double>::infinity();
  for (int i = 0; i < dimension(); ++i) f = std::min(f, samples(i) / (2.0 * period(i)));
  return f;
}

bool GridSpec::resolves_radius(int truncation_radius) const {
  return nyquist() > truncation_radius + 1.0;
}

int GridSpec::zero_index(int axis) const { return samples(axis) / 2; }

GridSpec GridSpec::leading() const {
  if (dimension() < 2) throw std::invalid_argument("GridSpec::leading: needs dimension >= 2");
  return GridSpec(std::vector<int>(period_.begin(), period_.end() - 1),
                  std::vector<int>(samples_.begin(), samples_.end() - 1));
}

GridSpec GridSpec::axis_grid(int axis) const {
  return GridSpec({period(axis)}, {samples(axis)});
}

GridSpec GridSpec::refined(int factor) const {
  std::vector<int> s = samples_;
  for (int& v : s) v *= factor;
  return GridSpec(period_, s);
}

std::vector<int> GridSpec::unravel(std::size_t flat) const {
  std::vector<int> j(period_.size());
  for (int i = dimension() - 1; i >= 0; --i) {
    j[static_cast<std::size_t>(i)] = static_cast<int>(flat % static_cast<std::size_t>(samples(i)));
    flat /= static_cast<std::size_t>(samples(i));
  }
  return j;
}

std::string GridSpec::describe() const {
  std::string out = "n=" + std::to_string(dimension()) + " L=[";
  for (std::size_t i = 0; i < period_.size(); ++i) out += (i ? "," : "") + std::to_string(period_[i]);
  out += "] N=[";
  for (std::size_t i = 0; i < samples_.size(); ++i) out += (i ? "," : "") + std::to_string(samples_[i]);
  return out + "]";
}

}  // namespace amalgam
