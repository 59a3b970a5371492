#pragma once

#include <span>

#include "amalgam/decomposition.hpp"

namespace amalgam {

/// Frequency-side extension window eta'(xi) = c * eta(8 xi): smooth, supported
/// in (-1/4, 1/4), with c fixed at construction so that int eta' = 1.
class ExtensionProfile {
 public:
  explicit ExtensionProfile(BumpProfile bump = {});

  double operator()(double xi) const;
  double normalization() const { return normalization_; }
  const BumpProfile& bump() const { return bump_; }
  static constexpr double support_radius() { return 0.25; }

 private:
  BumpProfile bump_;
  double normalization_;
};

/// Tf(xbar) = f(xbar, 0).
SampledField trace(const SampledField& f);

/// w = F^{-1} eta' sampled on a one-dimensional grid, rescaled so that w(0) = 1
/// holds exactly on that grid.
SampledField extension_kernel(const ExtensionProfile& profile, const GridSpec& axis);

/// g(xbar, x_n) = w(x_n) f(xbar) on `target`, whose leading n-1 axes must equal
/// the grid of f.
SampledField extend(const SampledField& f, const ExtensionProfile& profile, const GridSpec& target);

/// max_xbar | Box_kbar(Tf)(xbar) - sum_{|kbar - lbar| <= 1} Box_{kbar,l} f(xbar, 0) |
double trace_band_identity_residual(const SampledField& f, std::span<const int> kbar,
                                    const WindowFamily& family_n, const WindowFamily& family_n1);
double trace_band_identity_residual(const Spectrum& spectrum, std::span<const int> kbar,
                                    const WindowFamily& family_n, const WindowFamily& family_n1);

struct PointwiseBound {
  /// min over samples with |x_n| <= 1 of 2 Box*_k f(x) - |Box_k f(xbar, 0)|
  double margin = 0.0;
  /// max over the same samples of |Box_k f(xbar, 0)| / (2 Box*_k f(x)), 0 when both vanish
  double ratio = 0.0;
};

/// Both statistics for a precomputed band.
PointwiseBound pointwise_maximal_bound(const SampledField& band, double b,
                                       ShiftSet shifts = ShiftSet::integer_lattice);

double pointwise_maximal_bound_margin(const SampledField& f, std::span<const int> k, double b,
                                      const WindowFamily& family,
                                      ShiftSet shifts = ShiftSet::integer_lattice);

}  // namespace amalgam
