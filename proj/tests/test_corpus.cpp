#include <gtest/gtest.h>

#include <set>

#include "amalgam/verify/corpus.hpp"

using namespace amalgam;
using namespace amalgam::verify;

TEST(Corpus, DeterministicForSeed) {
  const CorpusSpec spec{2, 4, 6, 12, 7};
  const auto a = generate_corpus(spec), b = generate_corpus(spec);
  ASSERT_EQ(a.size(), 12u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].label, b[i].label);
    ASSERT_EQ(a[i].terms.size(), b[i].terms.size());
    for (std::size_t t = 0; t < a[i].terms.size(); ++t) {
      EXPECT_EQ(a[i].terms[t].m, b[i].terms[t].m);
      EXPECT_EQ(a[i].terms[t].amplitude, b[i].terms[t].amplitude);
    }
  }
  CorpusSpec other = spec;
  other.seed = 8;
  const auto c = generate_corpus(other);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    differs |= a[i].terms.size() != c[i].terms.size() || a[i].terms[0].amplitude != c[i].terms[0].amplitude;
  EXPECT_TRUE(differs);
}

TEST(Corpus, KindsCycleAndLabelsUnique) {
  const auto corpus = generate_corpus(CorpusSpec{2, 4, 6, 8, 1});
  const char* kinds[] = {"tone", "trig", "gaussian", "separable"};
  std::set<std::string> labels;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(corpus[i].kind, kinds[i % 4]);
    labels.insert(corpus[i].label);
  }
  EXPECT_EQ(labels.size(), corpus.size());
}

TEST(Corpus, AdmissibleAndUnitNorm) {
  for (int n : {2, 3}) {
    const int K = n == 2 ? 6 : 2;
    const int N = n == 2 ? 64 : 32;
    const GridSpec grid = GridSpec::uniform(n, 4, N);
    for (const CorpusMember& m : generate_corpus(CorpusSpec{n, 4, K, 8, 3})) {
      const SampledField f = m.sample(grid);
      EXPECT_NEAR(lp_norm(f, 2.0), 1.0, 1e-12) << m.label;
      EXPECT_LT(spectral_mass_outside(f, K), 1e-12) << m.label;
      for (const Term& t : m.terms)
        for (int a = 0; a < n; ++a) EXPECT_LE(std::abs(t.m[static_cast<std::size_t>(a)]), 4 * (K - 1)) << m.label;
    }
  }
}

TEST(Corpus, RefinementSamplesSameFunction) {
  const GridSpec base = GridSpec::uniform(2, 4, 32);
  const GridSpec fine = base.refined(2);
  for (const CorpusMember& m : generate_corpus(CorpusSpec{2, 4, 3, 4, 5})) {
    const SampledField f = m.sample(base), g = m.sample(fine);
    double worst = 0.0;
    for (int i = 0; i < 32; ++i)
      for (int j = 0; j < 32; ++j)
        worst = std::max(worst, std::abs(f[static_cast<std::size_t>(i * 32 + j)] -
                                         g[static_cast<std::size_t>(2 * i * 64 + 2 * j)]));
    EXPECT_LE(worst, 1e-12) << m.label;
  }
}

TEST(Corpus, SampleRejectsForeignGrid) {
  const CorpusMember m = generate_corpus(CorpusSpec{2, 4, 6, 1, 1}).front();
  EXPECT_THROW(m.sample(GridSpec::uniform(2, 8, 64)), std::invalid_argument);
  EXPECT_THROW(m.sample(GridSpec::uniform(3, 4, 32)), std::invalid_argument);
}

TEST(Corpus, SpectralMassOutside) {
  const GridSpec grid = GridSpec::uniform(1, 4, 64);
  std::vector<Complex> v(grid.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double x = grid.coordinate(0, static_cast<int>(j));
    v[j] = std::polar(1.0, 2.0 * M_PI * 0.5 * x) + std::polar(1.0, 2.0 * M_PI * 5.0 * x);
  }
  EXPECT_NEAR(spectral_mass_outside(SampledField(grid, v), 3), 0.5, 1e-12);
}
