#include "amalgam/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "amalgam/amf.hpp"
#include "amalgam/parallel.hpp"
#include "json.hpp"

namespace amalgam {

namespace {

struct AxisTap {
  std::size_t centered;  // centered storage index on this axis
  double weight;
};

// Nonzero samples of t -> w(t) on the frequency lattice m / L of one axis,
// restricted to the open interval (center - 1, center + 1).
template <class Weight>
std::vector<AxisTap> axis_taps(const GridSpec& grid, int axis, int center, Weight&& w) {
  const int L = grid.period(axis);
  const int half = grid.samples(axis) / 2;
  std::vector<AxisTap> taps;
  const int lo = std::max(-half, L * (center - 1) + 1);
  const int hi = std::min(half - 1, L * (center + 1) - 1);
  for (int m = lo; m <= hi; ++m) {
    const double v = w(static_cast<double>(m) / L);
    if (v != 0.0) taps.push_back({static_cast<std::size_t>(m + half), v});
  }
  return taps;
}

Spectrum apply_separable(const Spectrum& spectrum, const std::vector<std::vector<AxisTap>>& taps) {
  const GridSpec& grid = spectrum.grid();
  const int n = grid.dimension();
  std::vector<Complex> out(grid.size());
  for (const auto& t : taps)
    if (t.empty()) return Spectrum(grid, std::move(out));
  const auto in = spectrum.coefficients();
  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::size_t flat = 0;
    double w = 1.0;
    for (int a = 0; a < n; ++a) {
      const AxisTap& t = taps[static_cast<std::size_t>(a)][pos[static_cast<std::size_t>(a)]];
      flat += t.centered * grid.stride(a);
      w *= t.weight;
    }
    out[flat] = w * in[flat];
    int a = n - 1;
    while (a >= 0 && ++pos[static_cast<std::size_t>(a)] == taps[static_cast<std::size_t>(a)].size()) {
      pos[static_cast<std::size_t>(a)] = 0;
      --a;
    }
    if (a < 0) break;
  }
  return Spectrum(grid, std::move(out));
}

void check_index(std::span<const int> k, const WindowFamily& family, const char* what) {
  if (static_cast<int>(k.size()) != family.dimension())
    throw std::invalid_argument(std::string(what) + ": index dimension mismatch");
  if (sup_norm(k) > family.truncation_radius())
    throw std::out_of_range(std::string(what) + ": index " + to_string(k) + " outside truncation radius");
}

std::string band_file_name(std::span<const int> k) {
  std::string name = "band";
  for (int v : k) name += "_" + std::to_string(v);
  return name + ".amf";
}

}  // namespace

BandSet::BandSet(GridSpec grid, WindowFamily family, std::vector<SampledField> components)
    : grid_(std::move(grid)), family_(family), components_(std::move(components)) {
  if (components_.size() != family_.lattice().size())
    throw std::invalid_argument("BandSet: components must cover the truncated lattice densely");
  for (const auto& c : components_)
    if (!(c.grid() == grid_)) throw std::invalid_argument("BandSet: components must share one grid");
}

const SampledField& BandSet::band(std::span<const int> k) const {
  return components_[lattice().index_of(k)];
}

void require_compatible(const GridSpec& grid, const WindowFamily& family) {
  if (grid.dimension() != family.dimension())
    throw std::invalid_argument("grid dimension " + std::to_string(grid.dimension()) +
                                " does not match window family dimension " +
                                std::to_string(family.dimension()));
  if (!grid.resolves_radius(family.truncation_radius()))
    throw std::invalid_argument("grid " + grid.describe() + " does not resolve windows of radius K=" +
                                std::to_string(family.truncation_radius()) + " (need N/(2L) > K+1)");
}

Spectrum apply_window(const Spectrum& spectrum, std::span<const int> k, const WindowFamily& family) {
  require_compatible(spectrum.grid(), family);
  check_index(k, family, "box_op");
  std::vector<std::vector<AxisTap>> taps;
  for (int a = 0; a < family.dimension(); ++a) {
    const int ka = k[static_cast<std::size_t>(a)];
    taps.push_back(axis_taps(spectrum.grid(), a, ka, [&](double t) { return family.axis_window(ka, t); }));
  }
  return apply_separable(spectrum, taps);
}

BandComponent box_op(const Spectrum& spectrum, std::span<const int> k, const WindowFamily& family) {
  return {LatticePoint(k.begin(), k.end()), inverse_transform(apply_window(spectrum, k, family))};
}

BandComponent box_op(const SampledField& f, std::span<const int> k, const WindowFamily& family) {
  require_compatible(f.grid(), family);
  return box_op(forward_transform(f), k, family);
}

BandSet decompose(const Spectrum& spectrum, const WindowFamily& family) {
  require_compatible(spectrum.grid(), family);
  const LatticeBox box = family.lattice();
  std::vector<std::optional<SampledField>> slots(box.size());
  parallel_for(box.size(), [&](std::size_t i) {
    const LatticePoint k = box.point(i);
    slots[i].emplace(inverse_transform(apply_window(spectrum, k, family)));
  });
  std::vector<SampledField> components;
  components.reserve(box.size());
  for (auto& s : slots) components.push_back(std::move(*s));
  return BandSet(spectrum.grid(), family, std::move(components));
}

BandSet decompose(const SampledField& f, const WindowFamily& family) {
  require_compatible(f.grid(), family);
  return decompose(forward_transform(f), family);
}

SampledField reconstruct(const BandSet& bands) {
  if (bands.size() == 0) throw std::invalid_argument("reconstruct: empty band set");
  std::vector<Complex> sum(bands.grid().size());
  for (const auto& c : bands.components()) {
    const auto v = c.values();
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
  }
  return SampledField(bands.grid(), std::move(sum));
}

BandComponent mixed_box_op(const Spectrum& spectrum, std::span<const int> kbar, std::span<const int> l,
                           const WindowFamily& family_n, const WindowFamily& family_n1) {
  if (family_n1.dimension() + 1 != family_n.dimension())
    throw std::invalid_argument("mixed_box_op: families must have dimensions n and n-1");
  if (kbar.size() + 1 != l.size())
    throw std::invalid_argument("mixed_box_op: kbar must have one fewer coordinate than l");
  require_compatible(spectrum.grid(), family_n);
  check_index(kbar, family_n1, "mixed_box_op");
  check_index(l, family_n, "mixed_box_op");
  LatticePoint index(l.begin(), l.end());

  for (std::size_t a = 0; a < kbar.size(); ++a)
    if (std::abs(kbar[a] - l[a]) >= 2)
      return {std::move(index), SampledField::zeros(spectrum.grid())};

  std::vector<std::vector<AxisTap>> taps;
  const int n = family_n.dimension();
  for (int a = 0; a < n; ++a) {
    const int la = l[static_cast<std::size_t>(a)];
    if (a + 1 < n) {
      const int ka = kbar[static_cast<std::size_t>(a)];
      taps.push_back(axis_taps(spectrum.grid(), a, la, [&](double t) {
        const double outer = family_n1.axis_window(ka, t);
        return outer == 0.0 ? 0.0 : outer * family_n.axis_window(la, t);
      }));
    } else {
      taps.push_back(axis_taps(spectrum.grid(), a, la, [&](double t) { return family_n.axis_window(la, t); }));
    }
  }
  return {std::move(index), inverse_transform(apply_separable(spectrum, taps))};
}

BandComponent mixed_box_op(const SampledField& f, std::span<const int> kbar, std::span<const int> l,
                           const WindowFamily& family_n, const WindowFamily& family_n1) {
  return mixed_box_op(forward_transform(f), kbar, l, family_n, family_n1);
}

RealField shift_maximal(const RealField& magnitude, double b, ShiftSet shifts, double scale) {
  if (!(b > 0.0)) throw std::invalid_argument("maximal_op: weight exponent b must be positive");
  if (!(scale > 0.0)) throw std::invalid_argument("maximal_op: scale must be positive");
  const GridSpec& grid = magnitude.grid();
  const int n = grid.dimension();

  // Per-axis admissible offsets (in samples) and their physical length.
  std::vector<std::vector<std::pair<int, double>>> axis_offsets(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const int L = grid.period(a);
    const int N = grid.samples(a);
    if (shifts == ShiftSet::integer_lattice) {
      if (N % L != 0)
        throw std::invalid_argument("maximal_op: integer shifts need L to divide N on every axis");
      const int per_unit = N / L;
      for (int y = -L / 2; y <= L / 2; ++y) axis_offsets[static_cast<std::size_t>(a)].push_back({y * per_unit, y});
    } else {
      for (int j = -N / 2; j <= N / 2; ++j)
        axis_offsets[static_cast<std::size_t>(a)].push_back({j, j * grid.spacing(a)});
    }
  }

  struct Shift {
    std::vector<int> offset;
    double length2;
    double weight;
  };
  std::vector<Shift> table;
  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
  for (;;) {
    Shift s;
    s.length2 = 0.0;
    for (int a = 0; a < n; ++a) {
      const auto& [off, y] = axis_offsets[static_cast<std::size_t>(a)][pos[static_cast<std::size_t>(a)]];
      s.offset.push_back(off);
      s.length2 += y * y;
    }
    s.weight = 1.0 + std::pow(scale * std::sqrt(s.length2), b);
    table.push_back(std::move(s));
    int a = n - 1;
    while (a >= 0 && ++pos[static_cast<std::size_t>(a)] == axis_offsets[static_cast<std::size_t>(a)].size()) {
      pos[static_cast<std::size_t>(a)] = 0;
      --a;
    }
    if (a < 0) break;
  }
  std::stable_sort(table.begin(), table.end(),
                   [](const Shift& x, const Shift& y) { return x.length2 < y.length2; });

  const auto A = magnitude.values();
  const double peak = A.empty() ? 0.0 : *std::max_element(A.begin(), A.end());
  std::vector<double> out(grid.size());

  parallel_for(grid.size(), [&](std::size_t flat) {
    const std::vector<int> x = grid.unravel(flat);
    double best = A[flat];
    for (const Shift& s : table) {
      // Remaining shifts are at least this far, so none can exceed `best`.
      if (peak / s.weight <= best) break;
      std::size_t src = 0;
      for (int a = 0; a < n; ++a) {
        const int N = grid.samples(a);
        int j = (x[static_cast<std::size_t>(a)] - s.offset[static_cast<std::size_t>(a)]) % N;
        if (j < 0) j += N;
        src += static_cast<std::size_t>(j) * grid.stride(a);
      }
      best = std::max(best, A[src] / s.weight);
    }
    out[flat] = best;
  });
  return RealField(grid, std::move(out));
}

RealField maximal_op(const SampledField& band, double b, ShiftSet shifts) {
  if (!(b > 0.0)) throw std::invalid_argument("maximal_op: weight exponent b must be positive");
  return shift_maximal(modulus(band), b, shifts);
}

RealField maximal_op(const BandComponent& band, double b, ShiftSet shifts) {
  return maximal_op(band.field, b, shifts);
}

void export_bandset(const BandSet& bands, const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  nlohmann::json index;
  index["grid"] = {{"n", bands.grid().dimension()}, {"L", bands.grid().period()}, {"N", bands.grid().samples()}};
  index["K"] = bands.truncation_radius();
  index["window"] = {{"transition_sharpness", bands.family().bump().transition_sharpness}};
  nlohmann::json list = nlohmann::json::array();
  const LatticeBox box = bands.lattice();
  for (std::size_t i = 0; i < bands.size(); ++i) {
    const LatticePoint k = box.point(i);
    const std::string name = band_file_name(k);
    write_amf(directory / name, bands.band(i));
    list.push_back({{"k", k}, {"file", name}});
  }
  index["bands"] = std::move(list);
  std::ofstream out(directory / "index.json");
  if (!out) throw std::runtime_error("export_bandset: cannot write index.json");
  out << index.dump(2) << '\n';
}

BandSet import_bandset(const std::filesystem::path& directory) {
  std::ifstream in(directory / "index.json");
  if (!in) throw std::runtime_error("import_bandset: missing index.json in " + directory.string());
  const nlohmann::json index = nlohmann::json::parse(in);
  GridSpec grid(index.at("grid").at("L").get<std::vector<int>>(), index.at("grid").at("N").get<std::vector<int>>());
  BumpProfile bump{index.at("window").at("transition_sharpness").get<double>()};
  WindowFamily family(grid.dimension(), index.at("K").get<int>(), bump);
  const LatticeBox box = family.lattice();
  std::vector<std::optional<SampledField>> slots(box.size());
  for (const auto& entry : index.at("bands")) {
    const auto k = entry.at("k").get<std::vector<int>>();
    slots[box.index_of(k)].emplace(read_amf(directory / entry.at("file").get<std::string>()));
  }
  std::vector<SampledField> components;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw std::runtime_error("import_bandset: missing component " + to_string(box.point(i)));
    components.push_back(std::move(*slots[i]));
  }
  return BandSet(std::move(grid), family, std::move(components));
}

}  // namespace amalgam
