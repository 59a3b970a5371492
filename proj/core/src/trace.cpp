#include "amalgam/trace.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace amalgam {

ExtensionProfile::ExtensionProfile(BumpProfile bump) : bump_(bump) {
  // eta is 1 on [-1, 1]; only the two transition shoulders need quadrature.
  const double shoulder = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [this](double t) { return bump_(t); }, 1.0, 2.0, 15, 1e-15);
  const double eta_integral = 2.0 + 2.0 * shoulder;
  normalization_ = 8.0 / eta_integral;
}

double ExtensionProfile::operator()(double xi) const { return normalization_ * bump_(8.0 * xi); }

SampledField trace(const SampledField& f) {
  if (f.grid().dimension() < 2) throw std::invalid_argument("trace: field must have dimension >= 2");
  return slice_last_axis(f);
}

SampledField extension_kernel(const ExtensionProfile& profile, const GridSpec& axis) {
  if (axis.dimension() != 1) throw std::invalid_argument("extension_kernel: expects a one-dimensional grid");
  const int L = axis.period(0);
  const int half = axis.samples(0) / 2;
  std::vector<Complex> coeffs(axis.size());
  for (int m = -half; m < half; ++m) coeffs[static_cast<std::size_t>(m + half)] = profile(static_cast<double>(m) / L);
  SampledField w = inverse_transform(Spectrum(axis, std::move(coeffs)));
  const Complex at_zero = w[static_cast<std::size_t>(axis.zero_index(0))];
  if (std::abs(at_zero) == 0.0)
    throw std::invalid_argument("extension_kernel: grid does not resolve the extension window");
  return (1.0 / at_zero) * w;
}

SampledField extend(const SampledField& f, const ExtensionProfile& profile, const GridSpec& target) {
  if (target.dimension() != f.grid().dimension() + 1 || !(target.leading() == f.grid()))
    throw std::invalid_argument("extend: target leading axes must match the grid of the input (" +
                                f.grid().describe() + " vs " + target.describe() + ")");
  const SampledField w = extension_kernel(profile, target.axis_grid(target.dimension() - 1));
  const std::size_t row = w.size();
  std::vector<Complex> values(target.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < row; ++j) values[i * row + j] = f[i] * w[j];
  return SampledField(target, std::move(values));
}

double trace_band_identity_residual(const Spectrum& spectrum, std::span<const int> kbar,
                                    const WindowFamily& family_n, const WindowFamily& family_n1) {
  const GridSpec& grid = spectrum.grid();
  if (grid.dimension() < 2) throw std::invalid_argument("trace_band_identity_residual: dimension must be >= 2");
  const SampledField traced = trace(inverse_transform(spectrum));
  const SampledField lhs = box_op(traced, kbar, family_n1).field;

  SampledField rhs = SampledField::zeros(traced.grid());
  const int K = family_n.truncation_radius();
  const int n = grid.dimension();
  LatticePoint l(static_cast<std::size_t>(n));
  // l ranges over lbar within one step of kbar and every retained l_n.
  const LatticeBox offsets(n - 1, 1);
  for (std::size_t o = 0; o < offsets.size(); ++o) {
    const LatticePoint d = offsets.point(o);
    bool inside = true;
    for (int a = 0; a + 1 < n; ++a) {
      l[static_cast<std::size_t>(a)] = kbar[static_cast<std::size_t>(a)] + d[static_cast<std::size_t>(a)];
      if (std::abs(l[static_cast<std::size_t>(a)]) > K) inside = false;
    }
    if (!inside) continue;
    for (int ln = -K; ln <= K; ++ln) {
      l.back() = ln;
      rhs = rhs + slice_last_axis(mixed_box_op(spectrum, kbar, l, family_n, family_n1).field);
    }
  }
  return max_abs_difference(lhs, rhs);
}

double trace_band_identity_residual(const SampledField& f, std::span<const int> kbar,
                                    const WindowFamily& family_n, const WindowFamily& family_n1) {
  return trace_band_identity_residual(forward_transform(f), kbar, family_n, family_n1);
}

PointwiseBound pointwise_maximal_bound(const SampledField& band, double b, ShiftSet shifts) {
  const GridSpec& grid = band.grid();
  if (grid.dimension() < 2) throw std::invalid_argument("pointwise_maximal_bound: dimension must be >= 2");
  const RealField star = maximal_op(band, b, shifts);
  const int last = grid.dimension() - 1;
  const std::size_t row = static_cast<std::size_t>(grid.samples(last));
  const std::size_t zero = static_cast<std::size_t>(grid.zero_index(last));

  PointwiseBound out{std::numeric_limits<double>::infinity(), 0.0};
  constexpr double kWeightBound = 2.0;  // 1 + |x_n|^b <= 2 for |x_n| <= 1
  for (std::size_t i = 0; i < grid.size() / row; ++i) {
    const double on_plane = std::abs(band[i * row + zero]);
    for (std::size_t j = 0; j < row; ++j) {
      if (std::abs(grid.coordinate(last, static_cast<int>(j))) > 1.0 + 1e-12) continue;
      const double bound = kWeightBound * star[i * row + j];
      out.margin = std::min(out.margin, bound - on_plane);
      if (on_plane > 0.0) out.ratio = std::max(out.ratio, bound > 0.0 ? on_plane / bound : std::numeric_limits<double>::infinity());
    }
  }
  return out;
}

double pointwise_maximal_bound_margin(const SampledField& f, std::span<const int> k, double b,
                                      const WindowFamily& family, ShiftSet shifts) {
  return pointwise_maximal_bound(box_op(f, k, family).field, b, shifts).margin;
}

}  // namespace amalgam
