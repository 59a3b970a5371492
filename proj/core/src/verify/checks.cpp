#include "amalgam/verify/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "amalgam/parallel.hpp"

namespace amalgam::verify {

namespace {

std::string branch_of(double q) { return q < 1.0 ? "q<1" : "q>=1"; }

}  // namespace

ReportRow check_partition_of_unity(const WindowFamily& family, std::size_t samples, std::uint64_t seed) {
  const int n = family.dimension();
  const int K = family.truncation_radius();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-(K - 1.0), K - 1.0);
  const std::vector<LatticePoint> points = family.lattice().points();
  std::vector<std::vector<double>> xis(samples, std::vector<double>(static_cast<std::size_t>(n)));
  for (auto& xi : xis)
    for (double& v : xi) v = u(rng);
  std::vector<double> deviation(samples);
  parallel_for(samples, [&](std::size_t i) {
    double sum = 0.0;
    for (const LatticePoint& k : points) sum += family(k, xis[i]);
    deviation[i] = std::abs(sum - 1.0);
  });
  const double worst = *std::max_element(deviation.begin(), deviation.end());
  Params params;
  params.add("n", n).add("K", K).add("samples", samples).add("seed", static_cast<long long>(seed));
  return make_ratio_row("partition_of_unity", params, worst, 1.0, 1e-12);
}

ReportRow check_reconstruction(const std::string& label, const SampledField& f, const BandSet& bands) {
  Params params;
  params.add("field", label).add_grid(f.grid()).add("K", bands.truncation_radius());
  return make_ratio_row("reconstruction", params, relative_l2_error(reconstruct(bands), f), 1.0, 1e-11);
}

ReportRow check_admissible(const std::string& label, const SampledField& f, int truncation_radius) {
  Params params;
  params.add("field", label).add_grid(f.grid()).add("K", truncation_radius);
  return make_ratio_row("admissible_spectrum", params, spectral_mass_outside(f, truncation_radius), 1.0, 1e-12);
}

ReportRow check_band_identity(const std::string& label, const SampledField& f, const WindowFamily& family_n,
                              const WindowFamily& family_n1) {
  const Spectrum spectrum = forward_transform(f);
  const LatticeBox kbars(family_n1.dimension(), family_n1.truncation_radius() - 1);
  std::vector<double> residual(kbars.size());
  parallel_for(kbars.size(), [&](std::size_t i) {
    residual[i] = trace_band_identity_residual(spectrum, kbars.point(i), family_n, family_n1);
  });
  const double worst = residual.empty() ? 0.0 : *std::max_element(residual.begin(), residual.end());
  Params params;
  params.add("field", label).add_grid(f.grid()).add("K", family_n.truncation_radius());
  return make_ratio_row("band_identity", params, worst, 1.0, 1e-9);
}

ReportRow check_trace_inequality(const std::string& label, const BandSet& bands, const BandSet& traced,
                                 double p, double q, double s) {
  const double r = std::min(1.0, q);
  const double top = wiener_norm(traced, NormSpec::isotropic(p, q, s));
  const double bottom = aniso_norm(bands, NormSpec::aniso_last(p, q, r, s));
  Params params;
  params.add("field", label).add("p", p).add("q", q).add("r", r).add("s", s).add("branch", branch_of(q));
  return make_ratio_row("trace.ratio", params, top, bottom, std::nullopt);
}

ReportRow check_trace_r_monotone(const std::string& label, const BandSet& bands, double p, double q, double s) {
  if (q < 1.0) throw std::invalid_argument("check_trace_r_monotone: needs q >= 1");
  const double with_q = aniso_norm(bands, NormSpec::aniso_last(p, q, q, s));
  const double with_one = aniso_norm(bands, NormSpec::aniso_last(p, q, 1.0, s));
  Params params;
  params.add("field", label).add("p", p).add("q", q).add("s", s);
  return make_ratio_row("trace.r_monotone", params, with_q, with_one, 1.0, 1e-12);
}

double extension_factor(const ExtensionProfile& profile, const GridSpec& axis, int truncation_radius, double p,
                        double r) {
  const BandSet wb = decompose(extension_kernel(profile, axis), WindowFamily(1, truncation_radius, profile.bump()));
  return lp_norm(pointwise_aggregate(wb, NormSpec::isotropic(p, r, 0.0)), p);
}

RetractionRows check_retraction(const std::string& label, const SampledField& g,
                                const std::vector<std::pair<double, double>>& pairs, double s,
                                const ExtensionProfile& profile, const GridSpec& target,
                                const WindowFamily& family_n, const WindowFamily& family_n1) {
  const int n = target.dimension();
  const int K = family_n.truncation_radius();
  const SampledField ext = extend(g, profile, target);
  const BandSet bands = decompose(ext, family_n);
  const BandSet gb = decompose(g, family_n1);
  const GridSpec axis = target.axis_grid(n - 1);
  const BandSet wb = decompose(extension_kernel(profile, axis), WindowFamily(1, K, family_n.bump()));

  Params base;
  base.add("field", label).add_grid(target).add("K", K);

  double vanishing = 0.0, factorization = 0.0;
  const LatticeBox box = bands.lattice();
  const std::size_t row = axis.size();
  for (std::size_t i = 0; i < box.size(); ++i) {
    const LatticePoint k = box.point(i);
    const SampledField& band = bands.band(i);
    if (std::abs(k.back()) >= 2) vanishing = std::max(vanishing, max_abs(band));
    const SampledField& gk = gb.band(std::span<const int>(k.data(), k.size() - 1));
    const SampledField& wk = wb.band(std::span<const int>(&k.back(), 1));
    for (std::size_t a = 0; a < gk.size(); ++a)
      for (std::size_t j = 0; j < row; ++j)
        factorization = std::max(factorization, std::abs(band[a * row + j] - gk[a] * wk[j]));
  }

  RetractionRows out{
      make_ratio_row("retraction.identity", base, relative_l2_error(trace(ext), g), 1.0, 1e-10),
      make_ratio_row("retraction.band_vanishing", base, vanishing, 1.0, 1e-12),
      make_ratio_row("retraction.factorization", base, factorization, 1.0, 1e-10),
      {},
      {},
  };
  for (const auto& [p, q] : pairs) {
    const double r = std::min(1.0, q);
    Params params = base;
    params.add("p", p).add("q", q).add("r", r).add("s", s).add("branch", branch_of(q));
    const double ext_norm = aniso_norm(bands, NormSpec::aniso_last(p, q, r, s));
    const double g_norm = wiener_norm(gb, NormSpec::isotropic(p, q, s));
    ReportRow ratio = make_ratio_row("retraction.ratio", params, ext_norm, g_norm, std::nullopt);
    const double factor = lp_norm(pointwise_aggregate(wb, NormSpec::isotropic(p, r, 0.0)), p);
    // Sub-unit exponents lift the roundoff of empty bands to ~(1e-16)^q.
    const double tolerance = q < 1.0 ? 1e-6 : 1e-9;
    out.factors.push_back(make_ratio_row("retraction.kernel_factor", params,
                                         ratio.degenerate ? 0.0 : std::abs(ratio.ratio - factor), factor, tolerance));
    out.ratios.push_back(std::move(ratio));
  }
  return out;
}

MaximalRows check_maximal_equivalence(const std::string& label, const BandSet& bands, const NormSpec& maximal) {
  maximal.validate();
  if (!is_maximal(maximal.variant)) throw std::invalid_argument("check_maximal_equivalence: needs a maximal variant");
  NormSpec plain = maximal;
  plain.b.reset();
  plain.variant = maximal.variant == NormVariant::maximal_isotropic ? NormVariant::isotropic : NormVariant::aniso_last;
  const double plain_value = evaluate_norm(bands, plain);
  const double maximal_value = evaluate_norm(bands, maximal);
  const double threshold = maximal_exponent_threshold(bands.dimension(), maximal.p, maximal.q);
  const bool above = *maximal.b > threshold;
  Params params;
  params.add("field", label).add("variant", to_string(maximal.variant)).add("p", maximal.p).add("q", maximal.q);
  if (maximal.r) params.add("r", *maximal.r);
  params.add("s", maximal.s).add("b", *maximal.b).add("threshold", threshold);
  params.add("shifts", maximal.shifts == ShiftSet::integer_lattice ? "integer_lattice" : "sample_grid");
  const std::string prefix = above ? "maximal" : "maximal.below_threshold";
  return MaximalRows{
      make_ratio_row(prefix + ".lower", params, plain_value, maximal_value,
                     above ? std::optional<double>(1.0) : std::nullopt, 1e-12),
      make_ratio_row(prefix + ".upper", params, maximal_value, plain_value, std::nullopt),
  };
}

ReportRow check_triebel_maximal(const std::string& label, const BandSet& bands, double p, double q, double r,
                                ShiftSet shifts) {
  if (!(r > 0.0) || !(r < std::min(p, q)))
    throw std::invalid_argument("check_triebel_maximal: need 0 < r < min(p, q)");
  const int n = bands.dimension();
  const double b = n / r;
  const double diameter = 2.0 * std::sqrt(static_cast<double>(n));
  std::vector<std::optional<RealField>> slots(bands.size());
  parallel_for(bands.size(), [&](std::size_t i) {
    slots[i].emplace(shift_maximal(modulus(bands.band(i)), b, shifts, diameter));
  });
  std::vector<RealField> mags;
  for (auto& m : slots) mags.push_back(std::move(*m));
  const double lhs = lp_norm(aggregate_magnitudes(bands.lattice(), mags, q, std::nullopt, 0.0, 0), p);
  const double rhs = wiener_norm(bands, NormSpec::isotropic(p, q, 0.0));
  Params params;
  params.add("field", label).add("p", p).add("q", q).add("r", r).add("b", b).add("d", diameter);
  params.add("shifts", shifts == ShiftSet::integer_lattice ? "integer_lattice" : "sample_grid");
  return make_ratio_row("triebel.ratio", params, lhs, rhs, std::nullopt);
}

ReportRow check_pointwise_bound(const std::string& label, const BandSet& bands, double b, ShiftSet shifts) {
  std::vector<PointwiseBound> per_band(bands.size());
  parallel_for(bands.size(), [&](std::size_t i) { per_band[i] = pointwise_maximal_bound(bands.band(i), b, shifts); });
  std::vector<double> peaks(bands.size());
  for (std::size_t i = 0; i < bands.size(); ++i) peaks[i] = max_abs(bands.band(i));
  // Bands holding only transform roundoff make the ratio 0/0-like; the margin still covers them.
  const double floor = 1e-12 * *std::max_element(peaks.begin(), peaks.end());
  double worst = 0.0, margin = std::numeric_limits<double>::infinity();
  std::size_t worst_band = 0, skipped = 0;
  for (std::size_t i = 0; i < per_band.size(); ++i) {
    if (peaks[i] <= floor) {
      ++skipped;
    } else if (per_band[i].ratio > worst) {
      worst = per_band[i].ratio;
      worst_band = i;
    }
    margin = std::min(margin, per_band[i].margin);
  }
  Params params;
  params.add("field", label).add("b", b);
  params.add("shifts", shifts == ShiftSet::integer_lattice ? "integer_lattice" : "sample_grid");
  params.add("min_margin", margin).add("worst_band", to_string(bands.lattice().point(worst_band)));
  params.add("roundoff_bands", skipped);
  const std::string check = shifts == ShiftSet::integer_lattice ? "pointwise_bound.integer_lattice"
                                                                : "pointwise_bound.sample_grid";
  return make_ratio_row(check, params, worst, 1.0, 1.0, 1e-12);
}

std::vector<ScanPoint> regularity_scan(double p, double q, const std::vector<double>& s_grid, double eps,
                                       const std::vector<CorpusMember>& corpus, const GridSpec& grid,
                                       int truncation_radius) {
  const int n = grid.dimension();
  const WindowFamily family_n(n, truncation_radius), family_n1(n - 1, truncation_radius);
  const double shift = 1.0 / std::min(1.0, q) - 1.0 / q + eps;
  std::vector<ScanPoint> out;
  for (double s : s_grid) out.push_back({s, 0.0, ""});
  for (const CorpusMember& member : corpus) {
    const SampledField f = member.sample(grid);
    const BandSet bands = decompose(f, family_n);
    const BandSet traced = decompose(trace(f), family_n1);
    for (ScanPoint& point : out) {
      const double top = wiener_norm(traced, NormSpec::isotropic(p, q, point.s));
      const double bottom = wiener_norm(bands, NormSpec::isotropic(p, q, point.s + shift));
      if (bottom == 0.0) continue;
      if (top / bottom > point.max_ratio) {
        point.max_ratio = top / bottom;
        point.argmax = member.label;
      }
    }
  }
  return out;
}

std::vector<ReportRow> scan_rows(double p, double q, double eps, const std::vector<ScanPoint>& points) {
  std::vector<ReportRow> rows;
  for (const ScanPoint& point : points) {
    Params params;
    params.add("p", p).add("q", q).add("s", point.s).add("eps", eps).add("argmax", point.argmax);
    rows.push_back(make_ratio_row("scan.trace_ratio", params, point.max_ratio, 1.0, std::nullopt));
  }
  return rows;
}

}  // namespace amalgam::verify
