#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace amalgam {

/// Integer lattice point k in Z^n.
using LatticePoint = std::vector<int>;

/// Sup-norm |k|_inf.
int sup_norm(std::span<const int> k);

/// Squared Euclidean norm |k|^2 as an exact integer.
long long squared_norm(std::span<const int> k);

std::string to_string(std::span<const int> k);

/// The cube {k in Z^n : max_i |k_i| <= radius}, enumerated lexicographically
/// with the last axis varying fastest.
class LatticeBox {
 public:
  LatticeBox(int dimension, int radius);

  int dimension() const { return dimension_; }
  int radius() const { return radius_; }
  int side() const { return 2 * radius_ + 1; }
  std::size_t size() const { return size_; }

  bool contains(std::span<const int> k) const;
  std::size_t index_of(std::span<const int> k) const;
  LatticePoint point(std::size_t index) const;

  std::vector<LatticePoint> points() const;

 private:
  int dimension_;
  int radius_;
  std::size_t size_;
};

}  // namespace amalgam
