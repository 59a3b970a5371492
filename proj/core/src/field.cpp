#include "amalgam/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "amalgam/summation.hpp"
#include "fft.hpp"

namespace amalgam {

namespace {

void require_finite(std::span<const Complex> v, const char* what) {
  for (const Complex& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument(std::string(what) + ": non-finite sample");
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

// Calls fn(centered_flat, standard_flat, odd) for every frequency, where
// `odd` is the parity of sum_i m_i.
template <class Fn>
void for_each_frequency(const GridSpec& grid, Fn&& fn) {
  const int n = grid.dimension();
  std::vector<std::vector<std::size_t>> source(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> parity(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const int N = grid.samples(a);
    for (int i = 0; i < N; ++i) {
      const int m = i - N / 2;
      source[static_cast<std::size_t>(a)].push_back(static_cast<std::size_t>(((m % N) + N) % N) * grid.stride(a));
      parity[static_cast<std::size_t>(a)].push_back(std::abs(m) & 1);
    }
  }
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    std::size_t src = 0;
    int odd = 0;
    for (int a = 0; a < n; ++a) {
      src += source[static_cast<std::size_t>(a)][static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];
      odd ^= parity[static_cast<std::size_t>(a)][static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];
    }
    fn(flat, src, odd != 0);
    for (int a = n - 1; a >= 0; --a) {
      if (++idx[static_cast<std::size_t>(a)] < grid.samples(a)) break;
      idx[static_cast<std::size_t>(a)] = 0;
    }
  }
}

}  // namespace

SampledField::SampledField(GridSpec grid, std::vector<Complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw std::invalid_argument("SampledField: sample count does not match grid");
  require_finite(values_, "SampledField");
}

SampledField SampledField::zeros(GridSpec grid) {
  const std::size_t n = grid.size();
  return SampledField(std::move(grid), std::vector<Complex>(n));
}

SampledField operator+(const SampledField& a, const SampledField& b) {
  require_same_grid(a.grid(), b.grid(), "SampledField +");
  std::vector<Complex> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return SampledField(a.grid(), std::move(v));
}

SampledField operator-(const SampledField& a, const SampledField& b) {
  require_same_grid(a.grid(), b.grid(), "SampledField -");
  std::vector<Complex> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return SampledField(a.grid(), std::move(v));
}

SampledField operator*(Complex c, const SampledField& f) {
  std::vector<Complex> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * f[i];
  return SampledField(f.grid(), std::move(v));
}

RealField::RealField(GridSpec grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw std::invalid_argument("RealField: sample count does not match grid");
}

RealField modulus(const SampledField& f) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::abs(f[i]);
  return RealField(f.grid(), std::move(v));
}

Spectrum::Spectrum(GridSpec grid, std::vector<Complex> coefficients)
    : grid_(std::move(grid)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != grid_.size())
    throw std::invalid_argument("Spectrum: coefficient count does not match grid");
  require_finite(coefficients_, "Spectrum");
}

Spectrum Spectrum::zeros(GridSpec grid) {
  const std::size_t n = grid.size();
  return Spectrum(std::move(grid), std::vector<Complex>(n));
}

bool Spectrum::representable(std::span<const int> m) const {
  if (static_cast<int>(m.size()) != grid_.dimension()) return false;
  for (int a = 0; a < grid_.dimension(); ++a) {
    const int half = grid_.samples(a) / 2;
    if (m[static_cast<std::size_t>(a)] < -half || m[static_cast<std::size_t>(a)] >= half) return false;
  }
  return true;
}

std::size_t Spectrum::offset(std::span<const int> m) const {
  if (!representable(m)) throw std::out_of_range("Spectrum: frequency index not representable");
  std::size_t flat = 0;
  for (int a = 0; a < grid_.dimension(); ++a)
    flat += static_cast<std::size_t>(m[static_cast<std::size_t>(a)] + grid_.samples(a) / 2) * grid_.stride(a);
  return flat;
}

Complex Spectrum::at(std::span<const int> m) const {
  return representable(m) ? coefficients_[offset(m)] : Complex{};
}

Spectrum forward_transform(const SampledField& f) {
  const GridSpec& grid = f.grid();
  std::vector<Complex> raw(grid.size());
  detail::dft(grid.samples(), f.values().data(), raw.data(), detail::Direction::forward);
  // x_j = -L/2 + jL/N contributes the phase e^{i pi m} = (-1)^m.
  const double scale = grid.cell_volume();
  std::vector<Complex> centered(grid.size());
  for_each_frequency(grid, [&](std::size_t c, std::size_t s, bool odd) {
    centered[c] = (odd ? -scale : scale) * raw[s];
  });
  return Spectrum(grid, std::move(centered));
}

SampledField inverse_transform(const Spectrum& spectrum) {
  const GridSpec& grid = spectrum.grid();
  double volume = 1.0;
  for (int a = 0; a < grid.dimension(); ++a) volume *= grid.period(a);
  const double scale = 1.0 / volume;
  std::vector<Complex> raw(grid.size());
  const auto coeffs = spectrum.coefficients();
  for_each_frequency(grid, [&](std::size_t c, std::size_t s, bool odd) {
    raw[s] = (odd ? -scale : scale) * coeffs[c];
  });
  std::vector<Complex> values(grid.size());
  detail::dft(grid.samples(), raw.data(), values.data(), detail::Direction::backward);
  return SampledField(grid, std::move(values));
}

double lp_norm(std::span<const double> magnitudes, double cell_volume, double p) {
  require_exponent(p, "lp_norm: exponent p");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : magnitudes) m = std::max(m, v);
    return m;
  }
  std::vector<double> powered(magnitudes.size());
  for (std::size_t i = 0; i < powered.size(); ++i)
    powered[i] = magnitudes[i] == 0.0 ? 0.0 : std::pow(magnitudes[i], p);
  return std::pow(cell_volume * pairwise_sum(powered), 1.0 / p);
}

double lp_norm(const RealField& f, double p) {
  return lp_norm(f.values(), f.grid().cell_volume(), p);
}

double lp_norm(const SampledField& f, double p) { return lp_norm(modulus(f), p); }

SampledField slice_last_axis(const SampledField& f) {
  const GridSpec& grid = f.grid();
  if (grid.dimension() < 2) throw std::invalid_argument("slice_last_axis: field must have dimension >= 2");
  GridSpec lower = grid.leading();
  const int last = grid.dimension() - 1;
  const std::size_t zero = static_cast<std::size_t>(grid.zero_index(last));
  const std::size_t row = static_cast<std::size_t>(grid.samples(last));
  std::vector<Complex> v(lower.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i * row + zero];
  return SampledField(std::move(lower), std::move(v));
}

double relative_l2_error(const SampledField& approx, const SampledField& exact) {
  require_same_grid(approx.grid(), exact.grid(), "relative_l2_error");
  std::vector<double> diff(approx.size()), ref(approx.size());
  for (std::size_t i = 0; i < diff.size(); ++i) {
    diff[i] = std::norm(approx[i] - exact[i]);
    ref[i] = std::norm(exact[i]);
  }
  const double den = pairwise_sum(ref);
  const double num = pairwise_sum(diff);
  if (den == 0.0) return std::sqrt(num);
  return std::sqrt(num / den);
}

double max_abs_difference(const SampledField& a, const SampledField& b) {
  require_same_grid(a.grid(), b.grid(), "max_abs_difference");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const SampledField& f) {
  double m = 0.0;
  for (const Complex& z : f.values()) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace amalgam
