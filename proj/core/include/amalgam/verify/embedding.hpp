#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "amalgam/sequence.hpp"
#include "amalgam/verify/report.hpp"

namespace amalgam::verify {

enum class EmbeddingCaseId { I_i, I_ii, II_i, II_ii, III_i, III_ii };

std::string to_string(EmbeddingCaseId id);
EmbeddingCaseId parse_case_id(const std::string& name);

/// One instance of W^{p,q}_s -> W^{p,q,r}_{s'} at the sequence level.
/// Infinite exponents are kInfinity.
struct EmbeddingCase {
  EmbeddingCaseId id = EmbeddingCaseId::I_ii;
  int dimension = 2;
  double s = 0.0;
  double q = 2.0;
  double r = 2.0;
  double epsilon = 0.1;

  /// Throws std::invalid_argument unless (q, r) match the case and s is in range.
  void validate() const;
  /// Target regularity: s - 1/r - eps (II-i), s - (1/r - 1/q) - eps (II-ii), s otherwise.
  double s_prime() const;
  /// The regularity the bound is computed for: s' itself when s' >= 0, otherwise 0
  /// (the weight <kbar>^{s'} only decreases, so the s' = 0 constant still applies).
  double effective_s_prime() const;
  /// 1 - r/q + eps r, with eps reduced when s' < 0 so that effective_s_prime() = 0. II-ii only.
  double alpha() const;
  std::string describe() const;
};

/// Explicit embedding constant. 1 for I-i, I-ii, III-i, III-ii.
///   II-i:  2^{s/2} (sum_{m in Z} (1 + |m|)^{-(s - s')r})^{1/r}
///   II-ii: (sum_{k_n} <k_n>^{-alpha (q/r)'})^{1/r - 1/q} * sup_k <kbar>^{s'} <k_n>^{alpha/r} <k>^{-s}
/// Lattice sums are truncated and closed with an integral tail bound, so the
/// value is an upper bound of the exact series.
double embedding_bound(const EmbeddingCase& c);

/// sum_{m in Z} (1 + |m|)^{-beta} for beta > 1 as truncated sum plus tail bound.
double lattice_decay_sum(double beta, int truncation = 1 << 20);

struct EmbeddingOutcome {
  double lhs = 0.0;
  double rhs = 0.0;
  double bound = 1.0;
  bool pass = false;
};

/// LHS = aniso sequence norm with s', RHS = iso norm with s; pass iff
/// LHS <= bound * RHS + 1e-12.
EmbeddingOutcome check_embedding(const EmbeddingCase& c, const WeightedSequence& a);
/// Same with a precomputed embedding_bound(c).
EmbeddingOutcome check_embedding(const EmbeddingCase& c, const WeightedSequence& a, double bound);
ReportRow embedding_row(const EmbeddingCase& c, const WeightedSequence& a, std::uint64_t seed, double bound);

/// Seeded random sequence on |k|_inf <= radius, rescaled so the iso norm
/// (q, s) equals 1. Cycles through sparse, line-concentrated and
/// weight-saturating shapes depending on the seed.
WeightedSequence random_sequence(int dimension, int radius, double q, double s, std::uint64_t seed);

}  // namespace amalgam::verify
