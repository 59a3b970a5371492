#include <gtest/gtest.h>

#include <cmath>

#include "amalgam/norms.hpp"
#include "amalgam/summation.hpp"
#include "test_support.hpp"

using namespace amalgam;
using amalgam::testing::random_band_limited;
using amalgam::testing::tone;

namespace {

double direct_double_sum(const BandSet& bands, double q, double s) {
  const GridSpec& grid = bands.grid();
  const LatticeBox box = bands.lattice();
  double total = 0.0;
  for (std::size_t x = 0; x < grid.size(); ++x)
    for (std::size_t i = 0; i < box.size(); ++i)
      total += std::pow(bracket(box.point(i), s) * std::abs(bands.band(i)[x]), q);
  return std::pow(grid.cell_volume() * total, 1.0 / q);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(LatticePoint{0, 0}, 3.7), 1.0);
  EXPECT_EQ(bracket(LatticePoint{5, -2, 1}, 0.0), 1.0);
  EXPECT_NEAR(bracket(LatticePoint{3, 4}, 1.0), std::sqrt(26.0), 1e-15);
  EXPECT_NEAR(bracket(LatticePoint{1}, -2.0), 0.5, 1e-16);
}

TEST(WienerNorm, ToneExample) {
  const GridSpec grid = GridSpec::uniform(2, 16, 192);
  const BandSet bands = decompose(tone(grid, {3.0, 4.0}), WindowFamily(2, 4));
  for (double p : {0.5, 1.0, 2.0, 4.0, kInfinity})
    for (double q : {0.5, 1.0, 2.0, kInfinity}) {
      const double expected = std::sqrt(26.0) * (std::isinf(p) ? 1.0 : std::pow(16.0, 2.0 / p));
      // Empty bands carry FFT roundoff (~1e-16); an l^q quasi-norm with q < 1
      // lifts that floor to roughly (1e-16)^q per band.
      const double tol = q < 1.0 ? 1e-5 : 1e-12;
      EXPECT_NEAR(wiener_norm(bands, NormSpec::isotropic(p, q, 1.0)) / expected, 1.0, tol) << p << " " << q;
    }
  const BandSet zero = decompose(SampledField::zeros(grid), WindowFamily(2, 4));
  EXPECT_EQ(wiener_norm(zero, NormSpec::isotropic(2.0, 1.0, 1.0)), 0.0);
}

TEST(WienerNorm, OrderSwapIdentityAtPEqualsQ) {
  const GridSpec grid = GridSpec::uniform(2, 4, 32);
  const BandSet bands = decompose(random_band_limited(grid, 1.0, 3), WindowFamily(2, 2));
  for (double q : {0.5, 1.0, 2.0, 3.0})
    for (double s : {-1.0, 0.0, 0.7})
      EXPECT_LE(rel(wiener_norm(bands, NormSpec::isotropic(q, q, s)), direct_double_sum(bands, q, s)), 1e-12);
}

TEST(WienerNorm, HomogeneityAndWeightMonotonicity) {
  const GridSpec grid = GridSpec::uniform(2, 4, 32);
  const SampledField f = random_band_limited(grid, 1.0, 5);
  const WindowFamily family(2, 2);
  const BandSet bands = decompose(f, family);
  const BandSet scaled = decompose(Complex(-1.5, 2.0) * f, family);
  for (const NormSpec& spec : {NormSpec::isotropic(1.5, 1.0, 0.3), NormSpec::aniso_last(2.0, 1.0, kInfinity, 0.5),
                               NormSpec::maximal_isotropic(2.0, 2.0, 0.0, 1.01),
                               NormSpec::maximal_aniso(1.0, 2.0, 1.0, 0.5, 2.01)})
    EXPECT_LE(rel(evaluate_norm(scaled, spec), 2.5 * evaluate_norm(bands, spec)), 1e-13) << to_string(spec.variant);
  // Sub-unit exponents see the roundoff floor of the empty bands.
  const NormSpec quasi = NormSpec::isotropic(0.5, 0.7, 0.3);
  EXPECT_LE(rel(evaluate_norm(scaled, quasi), 2.5 * evaluate_norm(bands, quasi)), 1e-9);

  double previous = 0.0;
  for (double s : {-2.0, -0.5, 0.0, 0.5, 1.0, 3.0}) {
    const double v = wiener_norm(bands, NormSpec::isotropic(1.0, 0.5, s));
    EXPECT_GE(v, previous);
    previous = v;
  }
}

TEST(AnisoNorm, ToneAndRegroupingOracles) {
  const GridSpec grid = GridSpec::uniform(2, 4, 32);
  const WindowFamily family(2, 2);
  const BandSet t = decompose(tone(grid, {2.0, -1.0}), family);
  EXPECT_NEAR(aniso_norm(t, NormSpec::aniso_last(3.0, 1.0, 2.0, 2.0)) / (5.0 * std::pow(16.0, 1.0 / 3.0)), 1.0, 1e-12);

  // r = q: a single l^q over all k with weight <kbar>^s.
  const BandSet bands = decompose(random_band_limited(grid, 1.0, 9), family);
  const LatticeBox box = bands.lattice();
  for (double q : {0.5, 1.0, 2.0}) {
    double total = 0.0;
    for (std::size_t x = 0; x < grid.size(); ++x)
      for (std::size_t i = 0; i < box.size(); ++i) {
        const LatticePoint k = box.point(i);
        const double w = bracket(std::span<const int>(k.data(), 1), 0.8);
        total += std::pow(w * std::abs(bands.band(i)[x]), q);
      }
    const double oracle = std::pow(grid.cell_volume() * total, 1.0 / q);
    EXPECT_LE(rel(aniso_norm(bands, NormSpec::aniso_last(q, q, q, 0.8)), oracle), 1e-12);
  }
}

TEST(AnisoNorm, StackedAlongLastAxis) {
  // Bands only at kbar = 0, r = 1: the aggregate is sum_{k_n} |Box_k f|.
  const GridSpec grid = GridSpec::uniform(2, 4, 32);
  const WindowFamily family(2, 2);
  const SampledField f = tone(grid, {0.0, -2.0}) + Complex(0.0, 2.0) * tone(grid, {0.0, 0.0}) +
                         Complex(0.5, 0.5) * tone(grid, {0.0, 1.0});
  const BandSet bands = decompose(f, family);
  const LatticeBox box = bands.lattice();
  std::vector<double> sum(grid.size(), 0.0);
  for (std::size_t i = 0; i < box.size(); ++i)
    if (box.point(i)[0] == 0)
      for (std::size_t x = 0; x < grid.size(); ++x) sum[x] += std::abs(bands.band(i)[x]);
  for (double p : {1.0, 2.0})
    EXPECT_LE(rel(aniso_norm(bands, NormSpec::aniso_last(p, 2.0, 1.0, 1.7)), lp_norm(sum, grid.cell_volume(), p)),
              1e-12);
}

TEST(Aniso2Norm, ExamplesInThreeDimensions) {
  const GridSpec grid = GridSpec::uniform(3, 4, 32);
  const WindowFamily family(3, 2);
  const BandSet t = decompose(tone(grid, {2.0, 1.0, -1.0}), family);
  EXPECT_NEAR(aniso2_norm(t, NormSpec::aniso_last2(2.0, 1.0, 1.0, 1.0)) / (std::sqrt(5.0) * 8.0), 1.0, 1e-12);
  EXPECT_NEAR(aniso2_norm(t, NormSpec::aniso_last2(2.0, 1.0, 0.5, 1.0)) / (std::sqrt(5.0) * 8.0), 1.0, 1e-5);

  const BandSet bands = decompose(random_band_limited(grid, 1.0, 4), family);
  EXPECT_LE(rel(aniso2_norm(bands, NormSpec::aniso_last2(1.5, 0.8, 0.8, 0.0)),
                wiener_norm(bands, NormSpec::isotropic(1.5, 0.8, 0.0))),
            1e-12);

  // Only kbarbar = 0 present: a plain l^r over (k_2, k_3).
  const SampledField f = tone(grid, {0.0, 1.0, 1.0}) + Complex(3.0, 0.0) * tone(grid, {0.0, -2.0, 0.0});
  const BandSet stacked = decompose(f, family);
  const LatticeBox box = stacked.lattice();
  const double r = 0.5;
  std::vector<double> agg(grid.size(), 0.0);
  for (std::size_t x = 0; x < grid.size(); ++x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < box.size(); ++i) acc += std::pow(std::abs(stacked.band(i)[x]), r);
    agg[x] = std::pow(acc, 1.0 / r);
  }
  EXPECT_LE(rel(aniso2_norm(stacked, NormSpec::aniso_last2(2.0, 3.0, r, 2.0)), lp_norm(agg, grid.cell_volume(), 2.0)),
            1e-12);
  EXPECT_THROW(aniso2_norm(decompose(random_band_limited(GridSpec::uniform(2, 4, 32), 1.0, 1), WindowFamily(2, 2)),
                           NormSpec::aniso_last2(2.0, 1.0, 1.0, 0.0)),
               std::invalid_argument);
}

TEST(AnisoNorm, InfiniteIndicesUseMax) {
  const GridSpec grid = GridSpec::uniform(2, 4, 32);
  const BandSet bands = decompose(random_band_limited(grid, 1.0, 12), WindowFamily(2, 2));
  const LatticeBox box = bands.lattice();
  std::vector<double> agg(grid.size(), 0.0);
  for (std::size_t x = 0; x < grid.size(); ++x)
    for (std::size_t i = 0; i < box.size(); ++i)
      agg[x] = std::max(agg[x], bracket(std::span<const int>(box.point(i).data(), 1), 1.0) * std::abs(bands.band(i)[x]));
  EXPECT_LE(rel(aniso_norm(bands, NormSpec::aniso_last(kInfinity, kInfinity, kInfinity, 1.0)),
                *std::max_element(agg.begin(), agg.end())),
            1e-14);
}

TEST(MaximalNorm, ToneEqualsPlainAndRandomDominates) {
  const GridSpec grid = GridSpec::uniform(2, 4, 32);
  const WindowFamily family(2, 2);
  const BandSet t = decompose(tone(grid, {1.0, 2.0}), family);
  EXPECT_LE(rel(maximal_wiener_norm(t, NormSpec::maximal_isotropic(2.0, 1.0, 0.5, 1.01)),
                wiener_norm(t, NormSpec::isotropic(2.0, 1.0, 0.5))),
            1e-12);

  const BandSet bands = decompose(random_band_limited(grid, 1.0, 21), family);
  for (double b : {0.5, 1.01, 3.0}) {
    std::vector<std::string> warnings;
    const auto previous = set_warning_handler([&](const std::string& w) { warnings.push_back(w); });
    const double maximal = maximal_wiener_norm(bands, NormSpec::maximal_isotropic(2.0, 2.0, 0.0, b));
    set_warning_handler(previous);
    EXPECT_GE(maximal, wiener_norm(bands, NormSpec::isotropic(2.0, 2.0, 0.0)));
    EXPECT_TRUE(std::isfinite(maximal));
    EXPECT_EQ(warnings.size(), b <= 1.0 ? 1u : 0u) << b;
  }
  EXPECT_GE(maximal_wiener_norm(bands, NormSpec::maximal_aniso(2.0, 1.0, 2.0, 0.5, 3.0)),
            aniso_norm(bands, NormSpec::aniso_last(2.0, 1.0, 2.0, 0.5)));
}

TEST(NormSpec, Validation) {
  NormSpec spec = NormSpec::isotropic(2.0, 2.0, 0.0);
  spec.r = 1.0;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  NormSpec aniso = NormSpec::aniso_last(2.0, 2.0, 1.0, 0.0);
  aniso.r.reset();
  EXPECT_THROW(aniso.validate(), std::invalid_argument);
  NormSpec maximal = NormSpec::maximal_isotropic(2.0, 2.0, 0.0, 1.5);
  maximal.b.reset();
  EXPECT_THROW(maximal.validate(), std::invalid_argument);
  EXPECT_THROW(NormSpec::isotropic(0.0, 2.0, 0.0).validate(), std::invalid_argument);
  EXPECT_THROW(NormSpec::isotropic(2.0, -1.0, 0.0).validate(), std::invalid_argument);
  EXPECT_EQ(parse_norm_variant("aniso-last2"), NormVariant::aniso_last2);
  EXPECT_EQ(to_string(NormVariant::maximal_aniso), "maximal-aniso");
  EXPECT_THROW(parse_norm_variant("bogus"), std::invalid_argument);

  const GridSpec line({8}, {64});
  const BandSet one_d = decompose(tone(line, {1.0}), WindowFamily(1, 2));
  EXPECT_THROW(aniso_norm(one_d, NormSpec::aniso_last(2.0, 2.0, 2.0, 0.0)), std::invalid_argument);
}
