#pragma once

#include <span>
#include <utility>
#include <vector>

#include "amalgam/lattice.hpp"

namespace amalgam {

/// Smooth even bump eta: 1 on [-1,1], 0 outside (-2,2), with the transition
/// eta(t) = S(2 - |t|), S(u) = B(u) / (B(u) + B(1 - u)), B(u) = exp(-sharpness/u).
struct BumpProfile {
  double transition_sharpness = 1.0;

  double operator()(double t) const;
};

double eval_eta(const BumpProfile& profile, double t);

/// Open axis-aligned box prod_i (lower_i, upper_i).
struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  bool contains(std::span<const double> xi) const;
};

/// Normalized tensor-product partition of unity {phi_k} on the frequency
/// lattice, truncated to max_i |k_i| <= K.
///
///   phi_k(xi) = prod_i eta(2(xi_i - k_i)) / sum_{m in Z^n} prod_i eta(2(xi_i - m_i))
///
/// The denominator runs over the full lattice (only the <= 3 integers per axis
/// whose window covers xi_i contribute), so phi_k is exact near the truncation
/// boundary as well.
class WindowFamily {
 public:
  WindowFamily(int dimension, int truncation_radius, BumpProfile bump = {});

  int dimension() const { return dimension_; }
  int truncation_radius() const { return radius_; }
  const BumpProfile& bump() const { return bump_; }
  LatticeBox lattice() const { return LatticeBox(dimension_, radius_); }

  /// Literal evaluation of the normalized window. Throws if k is outside the
  /// truncation radius or the dimensions disagree.
  double operator()(std::span<const int> k, std::span<const double> xi) const;

  /// One-dimensional normalized window phi_j(t); phi_k(xi) = prod_i axis_window(k_i, xi_i).
  double axis_window(int j, double t) const;

  Box support(std::span<const int> k) const;

 private:
  void check_index(std::span<const int> k) const;

  int dimension_;
  int radius_;
  BumpProfile bump_;
};

double eval_window(const WindowFamily& family, std::span<const int> k,
                   std::span<const double> xi);

/// psi_{kbar,l}(xi) = phi_kbar(xibar) * phi_l(xi), xibar the first n-1 coordinates.
double eval_mixed_window(const WindowFamily& family_n, const WindowFamily& family_n1,
                         std::span<const int> kbar, std::span<const int> l,
                         std::span<const double> xi);

Box window_support(const WindowFamily& family, std::span<const int> k);

}  // namespace amalgam
