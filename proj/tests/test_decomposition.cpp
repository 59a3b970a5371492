#include <gtest/gtest.h>

#include <filesystem>

#include "amalgam/decomposition.hpp"
#include "test_support.hpp"

using namespace amalgam;
using amalgam::testing::random_band_limited;
using amalgam::testing::random_field;
using amalgam::testing::tone;

namespace {

const GridSpec kPlane = GridSpec::uniform(2, 4, 32);
const WindowFamily kFamily(2, 2);

std::vector<double> as_xi(const LatticePoint& k) { return {k.begin(), k.end()}; }

}  // namespace

TEST(BoxOp, ToneSelectsItsOwnBand) {
  const LatticePoint k0{1, -2};
  const SampledField f = tone(kPlane, as_xi(k0));
  for (const LatticePoint& m : kFamily.lattice().points()) {
    const BandComponent band = box_op(f, m, kFamily);
    if (m == k0)
      EXPECT_LE(max_abs_difference(band.field, f), 1e-13);
    else
      EXPECT_LE(max_abs(band.field), 1e-13) << to_string(m);
  }
}

TEST(BoxOp, LinearAndRespectsSupport) {
  const SampledField f = random_field(kPlane, 3), g = random_field(kPlane, 4);
  const Complex a(0.5, 1.0), b(-2.0, 0.1);
  const LatticePoint k{0, 1};
  const SampledField lhs = box_op(a * f + b * g, k, kFamily).field;
  const SampledField rhs = a * box_op(f, k, kFamily).field + b * box_op(g, k, kFamily).field;
  EXPECT_LE(max_abs_difference(lhs, rhs), 1e-13 * max_abs(lhs));

  // Tones at distance > 1 from k in sup norm never reach phi_k.
  const SampledField far = tone(kPlane, {2.25, 1.0}) + tone(kPlane, {-1.5, -0.75});
  EXPECT_LE(max_abs(box_op(far, k, kFamily).field), 1e-13);
}

TEST(BoxOp, SpectrumVanishesOutsideWindowSupport) {
  const SampledField f = random_field(kPlane, 5);
  const LatticePoint k{-1, 2};
  const Spectrum s = forward_transform(box_op(f, k, kFamily).field);
  const Box support = window_support(kFamily, k);
  double outside = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto idx = kPlane.unravel(i);
    std::vector<double> xi(2);
    for (int a = 0; a < 2; ++a) xi[static_cast<std::size_t>(a)] = double(idx[static_cast<std::size_t>(a)] - 16) / 4.0;
    const double v = std::abs(s.coefficients()[i]);
    peak = std::max(peak, v);
    if (!support.contains(xi)) outside = std::max(outside, v);
  }
  EXPECT_LE(outside, 1e-12 * peak);
}

TEST(BoxOp, RejectsUnresolvedGeometry) {
  const GridSpec coarse = GridSpec::uniform(2, 4, 16);  // N/(2L) = 2 < K + 1
  EXPECT_THROW(box_op(random_field(coarse, 1), LatticePoint{0, 0}, kFamily), std::invalid_argument);
  EXPECT_THROW(decompose(random_field(coarse, 1), kFamily), std::invalid_argument);
}

TEST(Decompose, TonesGiveIsolatedBands) {
  const SampledField f = tone(kPlane, {1.0, 1.0}) + Complex(2.0, 0.0) * tone(kPlane, {-1.0, -1.0});
  const BandSet bands = decompose(f, kFamily);
  int nonzero = 0;
  for (std::size_t i = 0; i < bands.size(); ++i)
    if (max_abs(bands.band(i)) > 1e-12) ++nonzero;
  EXPECT_EQ(nonzero, 2);
  EXPECT_LE(max_abs_difference(bands.band(LatticePoint{-1, -1}), Complex(2.0, 0.0) * tone(kPlane, {-1.0, -1.0})), 1e-13);
}

TEST(Decompose, ReconstructsAdmissibleFields) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const SampledField f = random_band_limited(kPlane, 1.0, seed);
    EXPECT_LE(relative_l2_error(reconstruct(decompose(f, kFamily)), f), 1e-11);
  }
  const GridSpec space = GridSpec::uniform(3, 4, 32);
  const WindowFamily family3(3, 2);
  const SampledField f = random_band_limited(space, 1.0, 11);
  EXPECT_LE(relative_l2_error(reconstruct(decompose(f, family3)), f), 1e-11);
}

TEST(Decompose, MatchesSingleBandOperator) {
  const SampledField f = random_field(kPlane, 8);
  const BandSet bands = decompose(f, kFamily);
  for (const LatticePoint& k : kFamily.lattice().points())
    EXPECT_LE(max_abs_difference(bands.band(k), box_op(f, k, kFamily).field), 1e-13);
}

TEST(Decompose, AlmostOrthogonality) {
  const SampledField f = random_band_limited(kPlane, 1.0, 13);
  const BandSet bands = decompose(f, kFamily);
  const LatticeBox box = kFamily.lattice();
  for (const LatticePoint& k : box.points()) {
    SampledField far = SampledField::zeros(kPlane);
    for (const LatticePoint& m : box.points()) {
      LatticePoint d{m[0] - k[0], m[1] - k[1]};
      if (sup_norm(d) >= 2) far = far + bands.band(m);
    }
    EXPECT_LE(max_abs(box_op(far, k, kFamily).field), 1e-12) << to_string(k);
  }
}

TEST(Decompose, PeriodicShiftByFullPeriodIsIdentity) {
  // Rolling the samples by N (one full period) leaves the field unchanged; a
  // half-period roll on a tone at integer frequency k multiplies by (-1)^{k L/2}.
  const SampledField f = random_band_limited(kPlane, 1.0, 2);
  std::vector<Complex> rolled(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) rolled[(i + f.size()) % f.size()] = f[i];
  const BandSet a = decompose(f, kFamily), b = decompose(SampledField(kPlane, rolled), kFamily);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(max_abs_difference(a.band(i), b.band(i)), 0.0);
}

TEST(MixedBoxOp, DisjointAndToneExamples) {
  const WindowFamily family1(1, 2);
  const SampledField f = random_field(kPlane, 6);
  const std::vector<int> kbar{-2};
  const LatticePoint l{1, 0};
  EXPECT_EQ(max_abs(mixed_box_op(f, kbar, l, kFamily, family1).field), 0.0);

  const SampledField t = tone(kPlane, {1.0, -1.0});
  const std::vector<int> same{1};
  EXPECT_LE(max_abs_difference(mixed_box_op(t, same, LatticePoint{1, -1}, kFamily, family1).field, t), 1e-13);
  EXPECT_THROW(mixed_box_op(f, std::vector<int>{0, 0}, l, kFamily, family1), std::invalid_argument);
}

TEST(MaximalOp, Examples) {
  const SampledField t = Complex(0.0, 3.0) * tone(kPlane, {1.0, 0.0});
  for (ShiftSet shifts : {ShiftSet::integer_lattice, ShiftSet::sample_grid}) {
    const RealField m = maximal_op(t, 1.5, shifts);
    for (std::size_t i = 0; i < m.size(); ++i) EXPECT_NEAR(m[i], 3.0, 1e-13);
    const RealField z = maximal_op(SampledField::zeros(kPlane), 1.5, shifts);
    for (std::size_t i = 0; i < z.size(); ++i) EXPECT_EQ(z[i], 0.0);
  }
  EXPECT_THROW(maximal_op(t, 0.0), std::invalid_argument);
  EXPECT_THROW(maximal_op(t, -1.0), std::invalid_argument);
}

TEST(MaximalOp, DominatesModulusMonotoneInBAndOrderedByShiftSet) {
  const BandSet bands = decompose(random_band_limited(kPlane, 1.0, 17), kFamily);
  const SampledField& band = bands.band(LatticePoint{1, 0});
  const RealField mod = modulus(band);
  const RealField low = maximal_op(band, 1.01), high = maximal_op(band, 3.0);
  const RealField dense = maximal_op(band, 1.01, ShiftSet::sample_grid);
  for (std::size_t i = 0; i < mod.size(); ++i) {
    EXPECT_GE(high[i], mod[i]);
    EXPECT_GE(low[i], high[i]);
    EXPECT_GE(dense[i], low[i]);
  }
}

TEST(MaximalOp, MatchesBruteForceSupremum) {
  const GridSpec grid({4, 2}, {8, 8});
  const SampledField f = random_field(grid, 23);
  const RealField a = modulus(f);
  const double b = 2.5;
  for (ShiftSet shifts : {ShiftSet::integer_lattice, ShiftSet::sample_grid}) {
    const RealField got = maximal_op(f, b, shifts);
    for (std::size_t flat = 0; flat < grid.size(); ++flat) {
      const auto x = grid.unravel(flat);
      double best = 0.0;
      for (int s0 = 0; s0 < 8; ++s0)
        for (int s1 = 0; s1 < 8; ++s1) {
          // Minimal representative offsets in samples.
          const int o0 = s0 <= 4 ? s0 : s0 - 8, o1 = s1 <= 4 ? s1 : s1 - 8;
          const double y0 = o0 * grid.spacing(0), y1 = o1 * grid.spacing(1);
          if (shifts == ShiftSet::integer_lattice && (y0 != std::round(y0) || y1 != std::round(y1))) continue;
          if (std::abs(y0) > 2.0 || std::abs(y1) > 1.0) continue;
          const std::size_t src = static_cast<std::size_t>(((x[0] - o0 + 8) % 8) * 8 + (x[1] - o1 + 8) % 8);
          best = std::max(best, a[src] / (1.0 + std::pow(std::hypot(y0, y1), b)));
        }
      EXPECT_NEAR(got[flat], best, 1e-14) << flat;
    }
  }
}

TEST(BandSetIo, ExportImportRoundTrip) {
  const BandSet bands = decompose(random_band_limited(kPlane, 1.0, 31), kFamily);
  const auto dir = std::filesystem::temp_directory_path() / "amalgam_bandset_test";
  std::filesystem::remove_all(dir);
  export_bandset(bands, dir);
  EXPECT_TRUE(std::filesystem::exists(dir / "band_-2_1.amf"));
  EXPECT_TRUE(std::filesystem::exists(dir / "index.json"));
  const BandSet back = import_bandset(dir);
  EXPECT_EQ(back.grid(), bands.grid());
  EXPECT_EQ(back.truncation_radius(), 2);
  for (std::size_t i = 0; i < bands.size(); ++i) EXPECT_EQ(max_abs_difference(back.band(i), bands.band(i)), 0.0);
  std::filesystem::remove(dir / "band_0_0.amf");
  EXPECT_THROW(import_bandset(dir), std::runtime_error);
  std::filesystem::remove_all(dir);
}
