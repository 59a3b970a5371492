#include "amalgam/norms.hpp"

#include <cmath>
#include <iostream>
#include <mutex>
#include <stdexcept>

#include "amalgam/parallel.hpp"
#include "amalgam/summation.hpp"

namespace amalgam {

namespace {

std::mutex& warning_mutex() {
  static std::mutex m;
  return m;
}

WarningHandler& warning_handler() {
  static WarningHandler h = [](const std::string& msg) { std::clog << "warning: " << msg << '\n'; };
  return h;
}

void warn(const std::string& msg) {
  std::lock_guard lock(warning_mutex());
  if (warning_handler()) warning_handler()(msg);
}

int outer_axes_of(NormVariant v) {
  switch (v) {
    case NormVariant::isotropic:
    case NormVariant::maximal_isotropic:
      return 0;
    case NormVariant::aniso_last:
    case NormVariant::maximal_aniso:
      return 1;
    case NormVariant::aniso_last2:
      return 2;
  }
  return 0;
}

void require_variant(const NormSpec& spec, std::initializer_list<NormVariant> allowed, const char* what) {
  spec.validate();
  for (NormVariant v : allowed)
    if (spec.variant == v) return;
  throw std::invalid_argument(std::string(what) + ": unsupported norm variant " + to_string(spec.variant));
}

std::vector<RealField> band_magnitudes(const BandSet& bands, const NormSpec& spec) {
  std::vector<std::optional<RealField>> slots(bands.size());
  if (is_maximal(spec.variant)) {
    for (std::size_t i = 0; i < bands.size(); ++i) slots[i].emplace(maximal_op(bands.band(i), *spec.b, spec.shifts));
  } else {
    parallel_for(bands.size(), [&](std::size_t i) { slots[i].emplace(modulus(bands.band(i))); });
  }
  std::vector<RealField> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::string to_string(NormVariant v) {
  switch (v) {
    case NormVariant::isotropic: return "isotropic";
    case NormVariant::aniso_last: return "aniso-last";
    case NormVariant::aniso_last2: return "aniso-last2";
    case NormVariant::maximal_isotropic: return "maximal-isotropic";
    case NormVariant::maximal_aniso: return "maximal-aniso";
  }
  return "unknown";
}

NormVariant parse_norm_variant(const std::string& name) {
  if (name == "isotropic") return NormVariant::isotropic;
  if (name == "aniso-last" || name == "aniso_last") return NormVariant::aniso_last;
  if (name == "aniso-last2" || name == "aniso_last2") return NormVariant::aniso_last2;
  if (name == "maximal-isotropic" || name == "maximal_isotropic") return NormVariant::maximal_isotropic;
  if (name == "maximal-aniso" || name == "maximal_aniso") return NormVariant::maximal_aniso;
  throw std::invalid_argument("unknown norm variant '" + name + "'");
}

bool is_maximal(NormVariant v) {
  return v == NormVariant::maximal_isotropic || v == NormVariant::maximal_aniso;
}

void NormSpec::validate() const {
  require_exponent(p, "NormSpec: p");
  require_exponent(q, "NormSpec: q");
  const bool needs_r = variant == NormVariant::aniso_last || variant == NormVariant::aniso_last2 ||
                       variant == NormVariant::maximal_aniso;
  if (needs_r != r.has_value())
    throw std::invalid_argument("NormSpec: r must be given exactly for the anisotropic variants");
  if (r) require_exponent(*r, "NormSpec: r");
  if (is_maximal(variant) != b.has_value())
    throw std::invalid_argument("NormSpec: b must be given exactly for the maximal variants");
  if (b && !(*b > 0.0)) throw std::invalid_argument("NormSpec: b must be positive");
  if (!std::isfinite(s)) throw std::invalid_argument("NormSpec: s must be finite");
}

NormSpec NormSpec::isotropic(double p, double q, double s) {
  return {p, q, std::nullopt, s, NormVariant::isotropic, std::nullopt};
}
NormSpec NormSpec::aniso_last(double p, double q, double r, double s) {
  return {p, q, r, s, NormVariant::aniso_last, std::nullopt};
}
NormSpec NormSpec::aniso_last2(double p, double q, double r, double s) {
  return {p, q, r, s, NormVariant::aniso_last2, std::nullopt};
}
NormSpec NormSpec::maximal_isotropic(double p, double q, double s, double b) {
  return {p, q, std::nullopt, s, NormVariant::maximal_isotropic, b};
}
NormSpec NormSpec::maximal_aniso(double p, double q, double r, double s, double b) {
  return {p, q, r, s, NormVariant::maximal_aniso, b};
}

double bracket(std::span<const int> k, double s) {
  if (s == 0.0) return 1.0;
  return std::pow(1.0 + static_cast<double>(squared_norm(k)), 0.5 * s);
}

double maximal_exponent_threshold(int dimension, double p, double q) {
  return dimension / std::min(p, q);
}

WarningHandler set_warning_handler(WarningHandler handler) {
  std::lock_guard lock(warning_mutex());
  std::swap(handler, warning_handler());
  return handler;
}

RealField aggregate_magnitudes(const LatticeBox& box, std::span<const RealField> magnitudes,
                               double q, std::optional<double> r, double s, int outer_axes) {
  if (magnitudes.empty() || magnitudes.size() != box.size())
    throw std::invalid_argument("aggregate_magnitudes: need one magnitude field per lattice point");
  const int n = box.dimension();
  if (outer_axes < 0 || (outer_axes > 0 && outer_axes >= n))
    throw std::invalid_argument("aggregate_magnitudes: invalid number of outer axes");
  if (outer_axes > 0 && !r) throw std::invalid_argument("aggregate_magnitudes: outer layer needs r");

  // Lattice order is last-axis fastest, so the outer index is flat % side^outer.
  std::size_t outer_count = 1;
  for (int i = 0; i < outer_axes; ++i) outer_count *= static_cast<std::size_t>(box.side());
  std::vector<std::vector<std::pair<std::size_t, double>>> groups(outer_count);
  for (std::size_t flat = 0; flat < box.size(); ++flat) {
    const LatticePoint k = box.point(flat);
    const std::span<const int> inner(k.data(), k.size() - static_cast<std::size_t>(outer_axes));
    groups[flat % outer_count].push_back({flat, bracket(inner, s)});
  }

  const GridSpec& grid = magnitudes.front().grid();
  for (const auto& m : magnitudes)
    if (!(m.grid() == grid)) throw std::invalid_argument("aggregate_magnitudes: grid mismatch");
  std::vector<double> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t x) {
    LqAccumulator outer(outer_axes > 0 ? *r : 1.0);
    double single = 0.0;
    for (const auto& group : groups) {
      LqAccumulator inner(q);
      for (const auto& [flat, weight] : group) inner.add(weight * magnitudes[flat][x]);
      if (outer_axes > 0)
        outer.add(inner.value());
      else
        single = inner.value();
    }
    out[x] = outer_axes > 0 ? outer.value() : single;
  });
  return RealField(grid, std::move(out));
}

RealField pointwise_aggregate(const BandSet& bands, const NormSpec& spec) {
  spec.validate();
  if (bands.size() == 0) throw std::invalid_argument("norm: empty band set");
  const int outer = outer_axes_of(spec.variant);
  if (outer == 1 && bands.dimension() < 2)
    throw std::invalid_argument("norm: anisotropic norms need dimension >= 2");
  if (outer == 2 && bands.dimension() < 3)
    throw std::invalid_argument("norm: the two-axis anisotropic norm needs dimension >= 3");
  const auto mags = band_magnitudes(bands, spec);
  return aggregate_magnitudes(bands.lattice(), mags, spec.q, spec.r, spec.s, outer);
}

double wiener_norm(const BandSet& bands, const NormSpec& spec) {
  require_variant(spec, {NormVariant::isotropic}, "wiener_norm");
  return lp_norm(pointwise_aggregate(bands, spec), spec.p);
}

double aniso_norm(const BandSet& bands, const NormSpec& spec) {
  require_variant(spec, {NormVariant::aniso_last}, "aniso_norm");
  return lp_norm(pointwise_aggregate(bands, spec), spec.p);
}

double aniso2_norm(const BandSet& bands, const NormSpec& spec) {
  require_variant(spec, {NormVariant::aniso_last2}, "aniso2_norm");
  return lp_norm(pointwise_aggregate(bands, spec), spec.p);
}

double maximal_wiener_norm(const BandSet& bands, const NormSpec& spec) {
  if (!spec.b) throw std::invalid_argument("maximal_wiener_norm: missing weight exponent b");
  require_variant(spec, {NormVariant::maximal_isotropic, NormVariant::maximal_aniso}, "maximal_wiener_norm");
  const double threshold = maximal_exponent_threshold(bands.dimension(), spec.p, spec.q);
  if (!(*spec.b > threshold))
    warn("maximal norm with b=" + std::to_string(*spec.b) + " <= n/min(p,q)=" + std::to_string(threshold) +
         "; equivalence with the plain norm is not guaranteed");
  return lp_norm(pointwise_aggregate(bands, spec), spec.p);
}

double evaluate_norm(const BandSet& bands, const NormSpec& spec) {
  switch (spec.variant) {
    case NormVariant::isotropic: return wiener_norm(bands, spec);
    case NormVariant::aniso_last: return aniso_norm(bands, spec);
    case NormVariant::aniso_last2: return aniso2_norm(bands, spec);
    case NormVariant::maximal_isotropic:
    case NormVariant::maximal_aniso: return maximal_wiener_norm(bands, spec);
  }
  throw std::invalid_argument("evaluate_norm: unknown variant");
}

}  // namespace amalgam
