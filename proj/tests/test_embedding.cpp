#include <gtest/gtest.h>

#include <cmath>

#include "amalgam/summation.hpp"
#include "amalgam/verify/embedding.hpp"

using namespace amalgam;
using namespace amalgam::verify;

namespace {

constexpr double inf = kInfinity;

EmbeddingCase make(EmbeddingCaseId id, int n, double s, double q, double r, double eps = 0.1) {
  EmbeddingCase c;
  c.id = id;
  c.dimension = n;
  c.s = s;
  c.q = q;
  c.r = r;
  c.epsilon = eps;
  return c;
}

// sum_{m in Z} <m>^{-gamma}: direct sum far out, then the integral of x^{-gamma}.
double bracket_series(double gamma) {
  const int M = 4000000;
  double sum = 0.0;
  for (int m = M; m >= 1; --m) sum += std::pow(1.0 + double(m) * m, -0.5 * gamma);
  return 1.0 + 2.0 * sum + 2.0 * std::pow(double(M), 1.0 - gamma) / (gamma - 1.0);
}

}  // namespace

TEST(EmbeddingBound, ExactCasesHaveConstantOne) {
  EXPECT_EQ(embedding_bound(make(EmbeddingCaseId::I_i, 2, 1.0, inf, inf)), 1.0);
  EXPECT_EQ(embedding_bound(make(EmbeddingCaseId::I_ii, 2, 0.5, 2.0, 2.0)), 1.0);
  EXPECT_EQ(embedding_bound(make(EmbeddingCaseId::III_i, 3, 1.0, 2.0, inf)), 1.0);
  EXPECT_EQ(embedding_bound(make(EmbeddingCaseId::III_ii, 2, 0.0, 1.0, 2.0)), 1.0);
}

TEST(EmbeddingBound, LatticeDecaySumMatchesZeta) {
  for (double beta : {1.5, 2.0, 3.0, 4.5}) {
    const double exact = 2.0 * std::riemann_zeta(beta) - 1.0;
    const double v = lattice_decay_sum(beta);
    EXPECT_GE(v, exact - 1e-12) << beta;
    EXPECT_NEAR(v, exact, 1e-8) << beta;
  }
  EXPECT_THROW(lattice_decay_sum(1.0), std::invalid_argument);
}

TEST(EmbeddingBound, SecondCaseClosedForms) {
  // II-i: s = 2, r = 1, eps = 0.5 -> s' = 0.5, exponent (s - s') r = 1.5.
  const EmbeddingCase a = make(EmbeddingCaseId::II_i, 2, 2.0, inf, 1.0, 0.5);
  EXPECT_DOUBLE_EQ(a.s_prime(), 0.5);
  EXPECT_NEAR(embedding_bound(a), 2.0 * (2.0 * std::riemann_zeta(1.5) - 1.0), 1e-7);

  // II-ii: s = 1, q = 2, r = 1, eps = 0.1 -> alpha = 0.6, gamma = alpha (q/r)' = 1.2,
  // and the bracket ratio supremum is attained at k = 0.
  const EmbeddingCase b = make(EmbeddingCaseId::II_ii, 2, 1.0, 2.0, 1.0, 0.1);
  EXPECT_NEAR(b.s_prime(), 0.4, 1e-15);
  EXPECT_NEAR(b.alpha(), 0.6, 1e-15);
  const double bound = embedding_bound(b);
  EXPECT_TRUE(std::isfinite(bound));
  EXPECT_NEAR(bound, std::sqrt(bracket_series(1.2)), 1e-6 * bound);
}

TEST(EmbeddingBound, NegativeTargetRegularityUsesZero) {
  // s = 0.6, r = 1, q = 2: s' = 0.6 - 0.5 - 0.3 < 0.
  const EmbeddingCase c = make(EmbeddingCaseId::II_ii, 2, 0.6, 2.0, 1.0, 0.3);
  EXPECT_LT(c.s_prime(), 0.0);
  EXPECT_EQ(c.effective_s_prime(), 0.0);
  EXPECT_NEAR(c.alpha(), 1.0 - 0.5 + 0.1, 1e-15);
  EXPECT_TRUE(std::isfinite(embedding_bound(c)));
}

TEST(EmbeddingCase, Validation) {
  EXPECT_THROW(make(EmbeddingCaseId::I_ii, 2, 0.0, 2.0, 1.0).validate(), std::invalid_argument);
  EXPECT_THROW(make(EmbeddingCaseId::II_i, 2, 1.0, 2.0, 1.0).validate(), std::invalid_argument);
  EXPECT_THROW(make(EmbeddingCaseId::II_i, 2, 0.5, inf, 1.0).validate(), std::invalid_argument);
  EXPECT_THROW(make(EmbeddingCaseId::II_ii, 2, 1.0, 2.0, 1.0, 0.0).validate(), std::invalid_argument);
  EXPECT_THROW(make(EmbeddingCaseId::III_ii, 2, 0.0, 2.0, 2.0).validate(), std::invalid_argument);
  EXPECT_THROW(make(EmbeddingCaseId::I_ii, 1, 0.0, 2.0, 2.0).validate(), std::invalid_argument);
  EXPECT_EQ(parse_case_id("II-ii"), EmbeddingCaseId::II_ii);
  EXPECT_THROW(parse_case_id("IV"), std::invalid_argument);
}

TEST(CheckEmbedding, DeltaSequence) {
  // a = delta_k: LHS = <kbar>^s, RHS = <k>^s.
  WeightedSequence a(2);
  const LatticePoint k{3, -4};
  a.set(k, 2.0);
  const EmbeddingOutcome o = check_embedding(make(EmbeddingCaseId::I_ii, 2, 1.5, 2.0, 2.0), a);
  EXPECT_NEAR(o.lhs, 2.0 * std::pow(10.0, 0.75), 1e-12);
  EXPECT_NEAR(o.rhs, 2.0 * std::pow(26.0, 0.75), 1e-12);
  EXPECT_TRUE(o.pass);
}

TEST(CheckEmbedding, ThirdCaseLineSequence) {
  // Mass on kbar = 0: LHS = ||a||_{l^r}, RHS = ||<k_n>^s a||_{l^q}.
  WeightedSequence a(2);
  const double v[] = {1.0, 0.5, 0.25};
  for (int j = 0; j < 3; ++j) a.set(std::vector<int>{0, j}, v[j]);
  const EmbeddingOutcome o = check_embedding(make(EmbeddingCaseId::III_ii, 2, 0.0, 1.0, 2.0), a);
  EXPECT_NEAR(o.lhs, std::sqrt(1.0 + 0.25 + 0.0625), 1e-14);
  EXPECT_NEAR(o.rhs, 1.75, 1e-14);
  EXPECT_TRUE(o.pass);
}

TEST(CheckEmbedding, RandomSequencesSatisfyBound) {
  const EmbeddingCase cases[] = {
      make(EmbeddingCaseId::I_i, 2, 1.0, inf, inf),       make(EmbeddingCaseId::I_ii, 3, 0.5, 1.5, 1.5),
      make(EmbeddingCaseId::II_i, 2, 1.5, inf, 1.0, 0.1), make(EmbeddingCaseId::II_ii, 3, 1.0, 2.0, 1.0, 0.1),
      make(EmbeddingCaseId::III_i, 2, 0.5, 1.0, inf),     make(EmbeddingCaseId::III_ii, 3, 0.0, 0.5, 2.0),
  };
  for (const EmbeddingCase& c : cases) {
    const double bound = embedding_bound(c);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const WeightedSequence a = random_sequence(c.dimension, 8, c.q, c.s, seed);
      const EmbeddingOutcome o = check_embedding(c, a, bound);
      EXPECT_TRUE(o.pass) << c.describe() << " seed=" << seed << " lhs=" << o.lhs << " rhs=" << o.rhs;
    }
  }
}

TEST(RandomSequence, DeterministicAndNormalized) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const WeightedSequence a = random_sequence(2, 6, 1.5, 0.5, seed);
    const WeightedSequence b = random_sequence(2, 6, 1.5, 0.5, seed);
    EXPECT_EQ(a.entries(), b.entries());
    EXPECT_NEAR(sequence_mixed_norm(a, 1.5, 1.5, 0.5, SequenceMode::iso), 1.0, 1e-12);
    for (const auto& [k, v] : a.entries())
      for (int x : k) EXPECT_LE(std::abs(x), 6);
  }
}

TEST(EmbeddingRow, CarriesCaseAndSeed) {
  WeightedSequence a(2);
  a.set(std::vector<int>{0, 0}, 1.0);
  const EmbeddingCase c = make(EmbeddingCaseId::I_ii, 2, 0.0, 2.0, 2.0);
  const ReportRow row = embedding_row(c, a, 42, 1.0);
  EXPECT_EQ(row.check, "embedding.I-ii");
  EXPECT_NE(row.params.find("seed=42"), std::string::npos);
  EXPECT_DOUBLE_EQ(row.ratio, 1.0);
  EXPECT_TRUE(row.pass);
}
