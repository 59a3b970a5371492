#include "amalgam/lattice.hpp"

#include <cstdlib>
#include <stdexcept>

namespace amalgam {

int sup_norm(std::span<const int> k) {
  int m = 0;
  for (int v : k) m = std::max(m, std::abs(v));
  return m;
}

long long squared_norm(std::span<const int> k) {
  long long s = 0;
  for (int v : k) s += static_cast<long long>(v) * v;
  return s;
}

std::string to_string(std::span<const int> k) {
  std::string out = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(k[i]);
  }
  return out + ")";
}

LatticeBox::LatticeBox(int dimension, int radius) : dimension_(dimension), radius_(radius) {
  if (dimension < 1) throw std::invalid_argument("LatticeBox: dimension must be positive");
  if (radius < 0) throw std::invalid_argument("LatticeBox: radius must be nonnegative");
  size_ = 1;
  for (int i = 0; i < dimension; ++i) size_ *= static_cast<std::size_t>(side());
}

bool LatticeBox::contains(std::span<const int> k) const {
  return static_cast<int>(k.size()) == dimension_ && sup_norm(k) <= radius_;
}

std::size_t LatticeBox::index_of(std::span<const int> k) const {
  if (!contains(k)) throw std::out_of_range("LatticeBox: point " + to_string(k) + " outside box");
  std::size_t idx = 0;
  for (int v : k) idx = idx * static_cast<std::size_t>(side()) + static_cast<std::size_t>(v + radius_);
  return idx;
}

LatticePoint LatticeBox::point(std::size_t index) const {
  LatticePoint k(static_cast<std::size_t>(dimension_));
  for (int i = dimension_ - 1; i >= 0; --i) {
    k[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(side())) - radius_;
    index /= static_cast<std::size_t>(side());
  }
  return k;
}

std::vector<LatticePoint> LatticeBox::points() const {
  std::vector<LatticePoint> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(point(i));
  return out;
}

}  // namespace amalgam
