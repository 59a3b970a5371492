#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "amalgam/field.hpp"
#include "amalgam/lattice_partition.hpp"

namespace amalgam {

/// One band Box_k f = F^{-1}(phi_k f^).
struct BandComponent {
  LatticePoint index;
  SampledField field;
};

/// Dense family {Box_k f : max_i |k_i| <= K} over one grid.
class BandSet {
 public:
  BandSet(GridSpec grid, WindowFamily family, std::vector<SampledField> components);

  const GridSpec& grid() const { return grid_; }
  const WindowFamily& family() const { return family_; }
  int truncation_radius() const { return family_.truncation_radius(); }
  int dimension() const { return grid_.dimension(); }
  LatticeBox lattice() const { return family_.lattice(); }

  std::size_t size() const { return components_.size(); }
  const SampledField& band(std::size_t flat) const { return components_[flat]; }
  const SampledField& band(std::span<const int> k) const;
  const std::vector<SampledField>& components() const { return components_; }

 private:
  GridSpec grid_;
  WindowFamily family_;
  std::vector<SampledField> components_;
};

/// Throws std::invalid_argument unless the grid resolves every window of the
/// family (N_i / (2 L_i) > K + 1) and the dimensions agree.
void require_compatible(const GridSpec& grid, const WindowFamily& family);

/// phi_k sampled on the frequency lattice of `grid`, applied to a spectrum.
Spectrum apply_window(const Spectrum& spectrum, std::span<const int> k, const WindowFamily& family);

BandComponent box_op(const SampledField& f, std::span<const int> k, const WindowFamily& family);
BandComponent box_op(const Spectrum& spectrum, std::span<const int> k, const WindowFamily& family);

/// All bands over the truncated lattice from a single forward transform.
BandSet decompose(const SampledField& f, const WindowFamily& family);
BandSet decompose(const Spectrum& spectrum, const WindowFamily& family);

/// Pointwise sum of all components.
SampledField reconstruct(const BandSet& bands);

/// Box_{kbar,l} f = F^{-1}(psi_{kbar,l} f^) with psi_{kbar,l}(xi) = phi_kbar(xibar) phi_l(xi).
/// Identically zero (short-circuited) when |kbar - lbar|_inf >= 2.
BandComponent mixed_box_op(const SampledField& f, std::span<const int> kbar, std::span<const int> l,
                           const WindowFamily& family_n, const WindowFamily& family_n1);
BandComponent mixed_box_op(const Spectrum& spectrum, std::span<const int> kbar, std::span<const int> l,
                           const WindowFamily& family_n, const WindowFamily& family_n1);

/// Which translates y enter the maximal supremum.
enum class ShiftSet {
  integer_lattice,  ///< y in Z^n, |y_i| <= L_i/2 (requires L_i | N_i)
  sample_grid,      ///< every sample offset y in (L/N) Z^n, |y_i| <= L_i/2
};

/// sup_y A(x - y) / (1 + (scale |y|)^b) over periodic translates of a
/// nonnegative field A; |y| is the Euclidean norm of the minimal representative.
RealField shift_maximal(const RealField& magnitude, double b, ShiftSet shifts = ShiftSet::integer_lattice,
                        double scale = 1.0);

/// Box*_k f(x) = sup_{y} |Box_k f(x - y)| / (1 + |y|^b). Throws for b <= 0.
RealField maximal_op(const BandComponent& band, double b, ShiftSet shifts = ShiftSet::integer_lattice);
RealField maximal_op(const SampledField& band, double b, ShiftSet shifts = ShiftSet::integer_lattice);

/// Writes band_<k_1>_..._<k_n>.amf for every component plus index.json.
void export_bandset(const BandSet& bands, const std::filesystem::path& directory);
BandSet import_bandset(const std::filesystem::path& directory);

}  // namespace amalgam
