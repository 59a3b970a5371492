#pragma once

#include <complex>
#include <span>
#include <vector>

#include "amalgam/grid.hpp"

namespace amalgam {

using Complex = std::complex<double>;

/// Complex samples of a periodic function, row-major with the last axis
/// contiguous. Values are finite and immutable after construction.
class SampledField {
 public:
  SampledField(GridSpec grid, std::vector<Complex> values);
  static SampledField zeros(GridSpec grid);

  const GridSpec& grid() const { return grid_; }
  std::span<const Complex> values() const { return values_; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

 private:
  GridSpec grid_;
  std::vector<Complex> values_;
};

SampledField operator+(const SampledField& a, const SampledField& b);
SampledField operator-(const SampledField& a, const SampledField& b);
SampledField operator*(Complex c, const SampledField& f);

/// Nonnegative real samples, used for moduli and maximal functions.
class RealField {
 public:
  RealField(GridSpec grid, std::vector<double> values);

  const GridSpec& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

RealField modulus(const SampledField& f);

/// Fourier coefficients f^(xi) on the lattice xi in (1/L)Z^n, stored centered:
/// index i on axis a holds frequency m/L_a with m = i - N_a/2.
class Spectrum {
 public:
  Spectrum(GridSpec grid, std::vector<Complex> coefficients);
  static Spectrum zeros(GridSpec grid);

  const GridSpec& grid() const { return grid_; }
  std::span<const Complex> coefficients() const { return coefficients_; }
  std::size_t size() const { return coefficients_.size(); }

  /// Coefficient at integer frequency index m (xi = m / L), zero when m is not
  /// representable.
  Complex at(std::span<const int> m) const;
  /// Flat storage offset of frequency index m; m must be representable.
  std::size_t offset(std::span<const int> m) const;
  bool representable(std::span<const int> m) const;

 private:
  GridSpec grid_;
  std::vector<Complex> coefficients_;
};

/// f^(xi) = int e^{-2 pi i x.xi} f(x) dx approximated on the torus: the DFT
/// scaled by prod_i L_i / N_i. A pure tone e^{2 pi i k.x} with k in Z^n maps to
/// the single coefficient prod_i L_i at xi = k.
Spectrum forward_transform(const SampledField& f);
SampledField inverse_transform(const Spectrum& s);

/// Riemann-sum quasi-norm ((L/N)^n sum |f|^p)^{1/p}; p = infinity gives the
/// sample maximum. Throws for p <= 0.
double lp_norm(const SampledField& f, double p);
double lp_norm(const RealField& f, double p);
double lp_norm(std::span<const double> magnitudes, double cell_volume, double p);

/// Restriction to the hyperplane x_n = 0, same geometry on the leading axes.
SampledField slice_last_axis(const SampledField& f);

double relative_l2_error(const SampledField& approx, const SampledField& exact);
double max_abs_difference(const SampledField& a, const SampledField& b);
double max_abs(const SampledField& f);

}  // namespace amalgam
