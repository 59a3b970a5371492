#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/grid.hpp"
#include "amalgam/verify/embedding.hpp"
#include "amalgam/verify/report.hpp"

namespace amalgam::verify {

struct GridConfig {
  int dimension = 2;
  int period = 4;
  int samples = 64;
  int truncation_radius = 6;

  GridSpec grid() const { return GridSpec::uniform(dimension, period, samples); }
};

/// Everything a verification run depends on. Defaults are the desk-scale
/// configuration; a JSON file overrides any subset of keys.
struct ExperimentConfig {
  std::uint64_t seed = 20240601;
  GridConfig grid{2, 4, 64, 6};          ///< main n = 2 geometry
  GridConfig grid3{3, 4, 32, 2};         ///< n = 3 identity checks
  GridConfig maximal_grid{2, 4, 32, 2};  ///< dense-shift maximal studies
  std::size_t corpus_size = 50;
  std::size_t corpus3_size = 8;
  std::size_t trace_corpus_size = 100;
  std::size_t maximal_corpus_size = 20;
  std::size_t partition_samples = 10000;

  std::size_t sequences_per_case = 1000;
  int sequence_radius = 16;
  std::vector<int> embedding_dimensions{2, 3};
  std::vector<EmbeddingCase> embedding_cases;  ///< dimension filled per run

  std::vector<std::pair<double, double>> trace_pairs{{2, 2}, {2, 1}, {4, 0.5}, {1, 2}};
  double trace_s = 0.5;
  int extension_period = 16;   ///< last axis of the extension target
  int extension_samples = 256;
  int refine_factor = 2;
  double stability_tolerance = 0.05;

  double maximal_p = 2.0;
  double maximal_q = 2.0;
  double maximal_s = 0.0;
  std::vector<double> maximal_b;  ///< empty: threshold + 0.01 and threshold / 2

  double triebel_p = 2.0;
  double triebel_q = 2.0;
  double triebel_r = 1.0;

  static ExperimentConfig defaults();
  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig from_file(const std::filesystem::path& path);
};

enum class Suite { all, embeddings, trace, retraction, maximal, triebel };
Suite parse_suite(const std::string& name);
std::string to_string(Suite s);

/// Deterministic rows (fixed job order) for one suite. `all` adds the
/// partition, admissibility, reconstruction, band-identity and pointwise
/// maximal checks to the five named suites.
std::vector<ReportRow> run_suite(Suite suite, const ExperimentConfig& config);

/// Corpus-level rows derived from per-field rows: running maxima and the
/// refined-grid stability comparison of the trace ratios.
std::vector<ReportRow> trace_study(const ExperimentConfig& config);

}  // namespace amalgam::verify
