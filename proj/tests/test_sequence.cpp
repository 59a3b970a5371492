#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "amalgam/norms.hpp"
#include "amalgam/sequence.hpp"
#include "amalgam/summation.hpp"

using namespace amalgam;

namespace {

WeightedSequence random_sequence(int n, int radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> mag;
  std::bernoulli_distribution keep(0.6);
  WeightedSequence a(n);
  for (const LatticePoint& k : LatticeBox(n, radius).points())
    if (keep(rng)) a.set(k, mag(rng));
  return a;
}

}  // namespace

TEST(SequenceNorm, DeltaAndCount) {
  WeightedSequence delta(3);
  delta.set(LatticePoint{0, 0, 0}, 1.0);
  for (double q : {0.5, 1.0, 2.0, kInfinity})
    for (double r : {0.5, 1.0, kInfinity})
      for (double s : {-1.0, 0.0, 2.0})
        for (SequenceMode mode : {SequenceMode::iso, SequenceMode::aniso_last})
          EXPECT_EQ(sequence_mixed_norm(delta, q, r, s, mode), 1.0);

  WeightedSequence ones(2);
  for (const LatticePoint& k : LatticeBox(2, 1).points()) ones.set(k, 1.0);
  EXPECT_NEAR(sequence_mixed_norm(ones, 1.0, 1.0, 0.0, SequenceMode::iso), 9.0, 1e-15);
  EXPECT_NEAR(sequence_mixed_norm(ones, 1.0, 1.0, 0.0, SequenceMode::aniso_last), 9.0, 1e-15);
}

TEST(SequenceNorm, MatchesNaiveSummation) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const WeightedSequence a = random_sequence(2, 3, seed);
    const double q = 0.3 + 0.2 * static_cast<double>(seed % 7), r = 0.5 + 0.25 * static_cast<double>(seed % 5);
    const double s = -1.0 + 0.3 * static_cast<double>(seed % 9);
    double iso = 0.0;
    std::map<int, double> inner;
    for (const auto& [k, v] : a.entries()) {
      iso += std::pow(bracket(k, s) * v, q);
      inner[k[1]] += std::pow(bracket(std::span<const int>(k.data(), 1), s) * v, q);
    }
    double aniso = 0.0;
    for (const auto& [kn, acc] : inner) aniso += std::pow(acc, r / q);
    EXPECT_NEAR(sequence_mixed_norm(a, q, r, s, SequenceMode::iso) / std::pow(iso, 1.0 / q), 1.0, 1e-14);
    EXPECT_NEAR(sequence_mixed_norm(a, q, r, s, SequenceMode::aniso_last) / std::pow(aniso, 1.0 / r), 1.0, 1e-14);
  }
}

TEST(SequenceNorm, LqMonotoneInQ) {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const WeightedSequence a = random_sequence(2, 2, seed);
    double previous = kInfinity;
    for (double q : {0.25, 0.5, 1.0, 1.5, 2.0, 4.0, kInfinity}) {
      const double v = sequence_mixed_norm(a, q, 1.0, 0.3, SequenceMode::iso);
      EXPECT_LE(v, previous * (1.0 + 1e-14));
      previous = v;
    }
  }
}

TEST(SequenceNorm, InfiniteExponentsAndValidation) {
  WeightedSequence a(2);
  a.set(LatticePoint{1, 0}, 2.0);
  a.set(LatticePoint{0, 1}, 3.0);
  a.set(LatticePoint{-1, 1}, 1.0);
  // aniso, q = inf, r = 1, s = 0: column k_2 = 0 has max 2, column k_2 = 1 has max 3.
  EXPECT_EQ(sequence_mixed_norm(a, kInfinity, 1.0, 0.0, SequenceMode::aniso_last), 5.0);
  EXPECT_EQ(sequence_mixed_norm(a, 1.0, kInfinity, 0.0, SequenceMode::aniso_last), 4.0);
  EXPECT_THROW(a.set(LatticePoint{0, 0}, -1.0), std::invalid_argument);
  EXPECT_THROW(a.set(LatticePoint{0}, 1.0), std::invalid_argument);
  EXPECT_EQ(a.get(LatticePoint{5, 5}), 0.0);
  EXPECT_EQ(a.scaled(2.0).get(LatticePoint{0, 1}), 6.0);
}
