#pragma once

#include <map>
#include <span>

#include "amalgam/lattice.hpp"

namespace amalgam {

/// Finitely supported nonnegative sequence a_k over Z^n. Stands in for the
/// pointwise band magnitudes |Box_k f(x)| at a fixed x.
class WeightedSequence {
 public:
  explicit WeightedSequence(int dimension);

  int dimension() const { return dimension_; }
  /// Sets a_k; throws for negative or non-finite values or a dimension mismatch.
  void set(std::span<const int> k, double value);
  double get(std::span<const int> k) const;
  const std::map<LatticePoint, double>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  WeightedSequence scaled(double factor) const;

 private:
  int dimension_;
  std::map<LatticePoint, double> entries_;
};

enum class SequenceMode { iso, aniso_last };

/// iso:        ( sum_k <k>^{sq} a_k^q )^{1/q}
/// aniso_last: ( sum_{k_n} ( sum_{kbar} <kbar>^{sq} a_k^q )^{r/q} )^{1/r}
/// Infinite exponents reduce with max; r is ignored in iso mode.
double sequence_mixed_norm(const WeightedSequence& a, double q, double r, double s, SequenceMode mode);

}  // namespace amalgam
