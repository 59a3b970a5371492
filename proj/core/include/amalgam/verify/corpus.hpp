#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amalgam/field.hpp"

namespace amalgam::verify {

/// a e^{2 pi i (m / L) . x}
struct Term {
  std::vector<int> m;
  Complex amplitude;
};

/// A trigonometric polynomial with frequencies on (1/L) Z^n, so the same
/// member can be sampled on any grid with that period (refinement samples the
/// same function).
struct CorpusMember {
  std::string kind;  ///< tone | trig | gaussian | separable
  std::string label;
  std::vector<int> period;
  std::vector<Term> terms;

  int dimension() const { return static_cast<int>(period.size()); }
  /// Exact samples via the inverse transform; throws if the grid has another
  /// period or cannot represent a frequency.
  SampledField sample(const GridSpec& grid) const;
};

struct CorpusSpec {
  int dimension = 2;
  int period = 4;
  int truncation_radius = 6;
  std::size_t size = 50;
  std::uint64_t seed = 1;
};

/// Deterministic mixture of tones, random trigonometric polynomials,
/// Gaussian-enveloped modulations and (n >= 2) separable products, cycling in
/// that order. Every spectrum lies in max_i |xi_i| <= K - 1 and every member
/// has unit L^2 norm.
std::vector<CorpusMember> generate_corpus(const CorpusSpec& spec);

/// Fraction of spectral energy outside max_i |xi_i| <= K - 1.
double spectral_mass_outside(const SampledField& f, int truncation_radius);

}  // namespace amalgam::verify
