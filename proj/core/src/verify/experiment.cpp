#include "amalgam/verify/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "amalgam/summation.hpp"
#include "amalgam/verify/checks.hpp"
#include "amalgam/verify/corpus.hpp"
#include "json.hpp"

namespace amalgam::verify {

namespace {

using nlohmann::json;

double exponent(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "Infinity") return kInfinity;
    throw std::invalid_argument("config: bad exponent '" + s + "'");
  }
  return j.get<double>();
}

void read_grid(const json& j, GridConfig& g) {
  g.dimension = j.value("n", g.dimension);
  g.period = j.value("L", g.period);
  g.samples = j.value("N", g.samples);
  g.truncation_radius = j.value("K", g.truncation_radius);
  if (!g.grid().resolves_radius(g.truncation_radius))
    throw std::invalid_argument("config: grid " + g.grid().describe() + " does not resolve K = " +
                                std::to_string(g.truncation_radius) + " (need N/(2L) > K + 1)");
}

std::vector<EmbeddingCase> default_cases() {
  using Id = EmbeddingCaseId;
  const double inf = kInfinity;
  return {
      {Id::I_i, 2, 0.0, inf, inf, 0.0},     {Id::I_i, 2, 1.0, inf, inf, 0.0},
      {Id::I_ii, 2, 0.0, 0.5, 0.5, 0.0},    {Id::I_ii, 2, 0.5, 1.0, 1.0, 0.0},
      {Id::I_ii, 2, 1.0, 2.0, 2.0, 0.0},    {Id::II_i, 2, 1.5, inf, 1.0, 0.1},
      {Id::II_i, 2, 1.0, inf, 2.0, 0.1},    {Id::II_i, 2, 2.1, inf, 0.5, 0.5},
      {Id::II_ii, 2, 1.0, 2.0, 1.0, 0.1},   {Id::II_ii, 2, 0.5, 4.0, 2.0, 0.1},
      {Id::II_ii, 2, 1.5, 1.0, 0.5, 0.2},   {Id::II_ii, 2, 0.6, 2.0, 1.0, 0.3},
      {Id::III_i, 2, 0.5, 1.0, inf, 0.0},   {Id::III_i, 2, 0.0, 2.0, inf, 0.0},
      {Id::III_ii, 2, 0.0, 1.0, 2.0, 0.0},  {Id::III_ii, 2, 1.0, 0.5, 1.0, 0.0},
  };
}

struct Prepared {
  std::string label;
  SampledField field;
  BandSet bands;
};

std::vector<Prepared> prepare(const std::vector<CorpusMember>& corpus, const GridSpec& grid,
                              const WindowFamily& family) {
  std::vector<Prepared> out;
  out.reserve(corpus.size());
  for (const CorpusMember& m : corpus) {
    SampledField f = m.sample(grid);
    BandSet bands = decompose(f, family);
    out.push_back({m.label, std::move(f), std::move(bands)});
  }
  return out;
}

std::vector<CorpusMember> corpus_for(const ExperimentConfig& c, const GridConfig& g, std::size_t size,
                                     std::uint64_t salt) {
  return generate_corpus(CorpusSpec{g.dimension, g.period, g.truncation_radius, size, c.seed * 31 + salt});
}

void append(std::vector<ReportRow>& rows, std::vector<ReportRow> more) {
  rows.insert(rows.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::vector<ReportRow> identity_rows(const ExperimentConfig& c) {
  std::vector<ReportRow> rows;
  for (const GridConfig* g : {&c.grid, &c.grid3}) {
    const WindowFamily family(g->dimension, g->truncation_radius);
    const WindowFamily family1(g->dimension - 1, g->truncation_radius);
    rows.push_back(check_partition_of_unity(family, c.partition_samples, c.seed));
    const std::size_t size = g == &c.grid ? c.corpus_size : c.corpus3_size;
    for (const Prepared& p : prepare(corpus_for(c, *g, size, 1), g->grid(), family)) {
      rows.push_back(check_admissible(p.label, p.field, g->truncation_radius));
      rows.push_back(check_reconstruction(p.label, p.field, p.bands));
      rows.push_back(check_band_identity(p.label, p.field, family, family1));
    }
  }
  return rows;
}

std::vector<ReportRow> pointwise_rows(const ExperimentConfig& c) {
  std::vector<ReportRow> rows;
  const GridConfig& g = c.maximal_grid;
  const WindowFamily family(g.dimension, g.truncation_radius);
  const double b = maximal_exponent_threshold(g.dimension, c.maximal_p, c.maximal_q) + 0.01;
  for (const Prepared& p : prepare(corpus_for(c, g, c.maximal_corpus_size, 2), g.grid(), family)) {
    rows.push_back(check_pointwise_bound(p.label, p.bands, b, ShiftSet::sample_grid));
    ReportRow lattice = check_pointwise_bound(p.label, p.bands, b, ShiftSet::integer_lattice);
    // The y_n = x_n shift used by the estimate is a lattice point only for
    // integer x_n, so the lattice read is recorded without a pass contract.
    lattice.bound.reset();
    lattice.pass = true;
    rows.push_back(std::move(lattice));
  }
  return rows;
}

std::vector<ReportRow> embedding_rows(const ExperimentConfig& c) {
  std::vector<ReportRow> rows;
  for (int n : c.embedding_dimensions)
    for (EmbeddingCase ec : c.embedding_cases) {
      ec.dimension = n;
      const double bound = embedding_bound(ec);
      const std::size_t first = rows.size();
      rows.resize(first + c.sequences_per_case);
      for (std::size_t i = 0; i < c.sequences_per_case; ++i) {
        const std::uint64_t seed = c.seed + 7919 * i;
        const WeightedSequence a = random_sequence(n, c.sequence_radius, ec.q, ec.s, seed);
        rows[first + i] = embedding_row(ec, a, seed, bound);
      }
    }
  return rows;
}

std::vector<ReportRow> retraction_rows(const ExperimentConfig& c) {
  std::vector<ReportRow> rows;
  const GridConfig& g = c.grid;
  const WindowFamily family(g.dimension, g.truncation_radius);
  const WindowFamily family1(g.dimension - 1, g.truncation_radius);
  GridConfig lower = g;
  lower.dimension = g.dimension - 1;
  const ExtensionProfile profile;
  std::vector<int> period(static_cast<std::size_t>(g.dimension), g.period);
  std::vector<int> samples(static_cast<std::size_t>(g.dimension), g.samples);
  period.back() = c.extension_period;
  samples.back() = c.extension_samples;
  const GridSpec target(period, samples);
  std::map<std::pair<double, double>, std::vector<double>> ratios;
  for (const CorpusMember& m : corpus_for(c, lower, c.corpus_size, 3)) {
    RetractionRows r = check_retraction(m.label, m.sample(lower.grid()), c.trace_pairs, c.trace_s, profile, target,
                                        family, family1);
    rows.push_back(std::move(r.identity));
    rows.push_back(std::move(r.vanishing));
    rows.push_back(std::move(r.factorization));
    for (std::size_t i = 0; i < r.ratios.size(); ++i) {
      ratios[c.trace_pairs[i]].push_back(r.ratios[i].ratio);
      rows.push_back(std::move(r.ratios[i]));
      rows.push_back(std::move(r.factors[i]));
    }
  }
  for (const auto& [p, q] : c.trace_pairs) {
    const std::vector<double>& v = ratios[{p, q}];
    if (v.empty()) continue;
    const double mean = pairwise_sum(v) / v.size();
    std::vector<double> dev;
    for (double x : v) dev.push_back((x - mean) * (x - mean));
    const double sd = std::sqrt(pairwise_sum(dev) / v.size());
    Params params;
    params.add("p", p).add("q", q).add("s", c.trace_s).add("fields", v.size()).add("mean", mean);
    rows.push_back(make_ratio_row("retraction.ratio_cv", params, sd, mean, 1e-6));
  }
  return rows;
}

std::vector<ReportRow> maximal_rows(const ExperimentConfig& c) {
  std::vector<ReportRow> rows;
  const double p = c.maximal_p, q = c.maximal_q, s = c.maximal_s;
  struct Read {
    const GridConfig* grid;
    ShiftSet shifts;
  };
  for (const Read& read : {Read{&c.grid, ShiftSet::integer_lattice}, Read{&c.maximal_grid, ShiftSet::sample_grid}}) {
    const GridConfig& g = *read.grid;
    const WindowFamily family(g.dimension, g.truncation_radius);
    const double threshold = maximal_exponent_threshold(g.dimension, p, q);
    std::vector<double> bs = c.maximal_b;
    if (bs.empty()) bs = {threshold + 0.01, 0.5 * threshold};
    std::map<std::string, double> worst;
    for (const Prepared& f : prepare(corpus_for(c, g, c.maximal_corpus_size, 4), g.grid(), family))
      for (double b : bs)
        for (NormSpec spec : {NormSpec::maximal_isotropic(p, q, s, b), NormSpec::maximal_aniso(p, q, q, s, b)}) {
          spec.shifts = read.shifts;
          MaximalRows m = check_maximal_equivalence(f.label, f.bands, spec);
          double& w = worst[m.upper.check + "|" + to_string(spec.variant) + "|" + format_number(b)];
          w = std::max(w, m.upper.ratio);
          rows.push_back(std::move(m.lower));
          rows.push_back(std::move(m.upper));
        }
    for (const auto& [key, value] : worst) {
      Params params;
      params.add("key", key).add("shifts", read.shifts == ShiftSet::integer_lattice ? "integer_lattice" : "sample_grid");
      rows.push_back(make_ratio_row("maximal.upper_max", params, value, 1.0, std::nullopt));
    }
  }
  return rows;
}

std::vector<ReportRow> triebel_rows(const ExperimentConfig& c) {
  std::vector<ReportRow> rows;
  const GridConfig& g = c.maximal_grid;
  const WindowFamily family(g.dimension, g.truncation_radius);
  double worst = 0.0;
  for (const Prepared& f : prepare(corpus_for(c, g, c.maximal_corpus_size, 5), g.grid(), family)) {
    ReportRow row = check_triebel_maximal(f.label, f.bands, c.triebel_p, c.triebel_q, c.triebel_r, ShiftSet::sample_grid);
    worst = std::max(worst, row.ratio);
    rows.push_back(std::move(row));
  }
  Params params;
  params.add("p", c.triebel_p).add("q", c.triebel_q).add("r", c.triebel_r).add("fields", c.maximal_corpus_size);
  rows.push_back(make_ratio_row("triebel.max", params, worst, 1.0, std::nullopt));
  return rows;
}

}  // namespace

ExperimentConfig ExperimentConfig::defaults() {
  ExperimentConfig c;
  c.embedding_cases = default_cases();
  return c;
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  ExperimentConfig c = defaults();
  const json j = json::parse(text);
  c.seed = j.value("seed", c.seed);
  if (j.contains("grid")) read_grid(j["grid"], c.grid);
  if (j.contains("grid3")) read_grid(j["grid3"], c.grid3);
  if (j.contains("maximal_grid")) read_grid(j["maximal_grid"], c.maximal_grid);
  if (c.grid.dimension < 2 || c.maximal_grid.dimension < 2 || c.grid3.dimension < 2)
    throw std::invalid_argument("config: grids need n >= 2");
  if (j.contains("corpus")) {
    const json& k = j["corpus"];
    c.corpus_size = k.value("size", c.corpus_size);
    c.corpus3_size = k.value("size3", c.corpus3_size);
    c.trace_corpus_size = k.value("trace_size", c.trace_corpus_size);
    c.maximal_corpus_size = k.value("maximal_size", c.maximal_corpus_size);
  }
  c.partition_samples = j.value("partition_samples", c.partition_samples);
  if (j.contains("embeddings")) {
    const json& e = j["embeddings"];
    c.sequences_per_case = e.value("sequences", c.sequences_per_case);
    c.sequence_radius = e.value("radius", c.sequence_radius);
    if (e.contains("dimensions")) c.embedding_dimensions = e["dimensions"].get<std::vector<int>>();
    if (e.contains("cases")) {
      c.embedding_cases.clear();
      for (const json& k : e["cases"]) {
        EmbeddingCase ec;
        ec.id = parse_case_id(k.at("case").get<std::string>());
        ec.s = k.at("s").get<double>();
        ec.q = exponent(k.at("q"));
        ec.r = exponent(k.at("r"));
        ec.epsilon = k.value("eps", 0.1);
        ec.validate();
        c.embedding_cases.push_back(ec);
      }
    }
  }
  if (j.contains("trace")) {
    const json& t = j["trace"];
    if (t.contains("pairs")) {
      c.trace_pairs.clear();
      for (const json& pq : t["pairs"]) c.trace_pairs.emplace_back(exponent(pq.at(0)), exponent(pq.at(1)));
    }
    c.trace_s = t.value("s", c.trace_s);
    c.refine_factor = t.value("refine", c.refine_factor);
    c.stability_tolerance = t.value("stability", c.stability_tolerance);
  }
  if (j.contains("extension_axis")) {
    c.extension_period = j["extension_axis"].value("L", c.extension_period);
    c.extension_samples = j["extension_axis"].value("N", c.extension_samples);
  }
  if (!GridSpec({c.extension_period}, {c.extension_samples}).resolves_radius(c.grid.truncation_radius))
    throw std::invalid_argument("config: extension_axis does not resolve K = " +
                                std::to_string(c.grid.truncation_radius));
  if (j.contains("maximal")) {
    const json& m = j["maximal"];
    if (m.contains("p")) c.maximal_p = exponent(m["p"]);
    if (m.contains("q")) c.maximal_q = exponent(m["q"]);
    c.maximal_s = m.value("s", c.maximal_s);
    if (m.contains("b")) c.maximal_b = m["b"].get<std::vector<double>>();
  }
  if (j.contains("triebel")) {
    const json& t = j["triebel"];
    c.triebel_p = t.value("p", c.triebel_p);
    c.triebel_q = t.value("q", c.triebel_q);
    c.triebel_r = t.value("r", c.triebel_r);
  }
  for (const auto& [p, q] : c.trace_pairs)
    if (!(p > 0.0) || !(q > 0.0) || std::isinf(p) || std::isinf(q))
      throw std::invalid_argument("config: trace pairs need 0 < p, q < inf");
  return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::all, Suite::embeddings, Suite::trace, Suite::retraction, Suite::maximal, Suite::triebel})
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::embeddings: return "embeddings";
    case Suite::trace: return "trace";
    case Suite::retraction: return "retraction";
    case Suite::maximal: return "maximal";
    case Suite::triebel: return "triebel";
  }
  return "?";
}

std::vector<ReportRow> trace_study(const ExperimentConfig& c) {
  std::vector<ReportRow> rows;
  const GridConfig& g = c.grid;
  const WindowFamily family(g.dimension, g.truncation_radius);
  const WindowFamily family1(g.dimension - 1, g.truncation_radius);
  const std::vector<CorpusMember> corpus = corpus_for(c, g, c.trace_corpus_size, 6);
  const GridSpec base = g.grid();
  const GridSpec fine = base.refined(c.refine_factor);

  std::map<std::pair<double, double>, double> max_base, max_fine;
  for (const CorpusMember& m : corpus) {
    for (const GridSpec* grid : {&base, &fine}) {
      const SampledField f = m.sample(*grid);
      const BandSet bands = decompose(f, family);
      const BandSet traced = decompose(trace(f), family1);
      auto& maxima = grid == &base ? max_base : max_fine;
      for (const auto& [p, q] : c.trace_pairs) {
        ReportRow row = check_trace_inequality(m.label, bands, traced, p, q, c.trace_s);
        if (grid == &fine) row.check = "trace.ratio_refined";
        maxima[{p, q}] = std::max(maxima[{p, q}], row.ratio);
        rows.push_back(std::move(row));
        if (grid == &base && q >= 1.0) rows.push_back(check_trace_r_monotone(m.label, bands, p, q, c.trace_s));
      }
    }
  }
  for (const auto& [p, q] : c.trace_pairs) {
    const double a = max_base[{p, q}], b = max_fine[{p, q}];
    Params params;
    params.add("p", p).add("q", q).add("s", c.trace_s).add("fields", corpus.size()).add_grid(base);
    params.add("branch", q < 1.0 ? "q<1" : "q>=1");
    rows.push_back(make_ratio_row("trace.max", params, a, 1.0, std::nullopt));
    Params stab = params;
    stab.add("refined_N", static_cast<long long>(fine.samples(0))).add("max_refined", b);
    ReportRow row = make_ratio_row("trace.stability", stab, std::abs(b - a), a, c.stability_tolerance);
    if (!std::isfinite(a) || !std::isfinite(b)) row.pass = false;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ReportRow> run_suite(Suite suite, const ExperimentConfig& c) {
  std::vector<ReportRow> rows;
  const bool all = suite == Suite::all;
  if (all) append(rows, identity_rows(c));
  if (all) append(rows, pointwise_rows(c));
  if (all || suite == Suite::embeddings) append(rows, embedding_rows(c));
  if (all || suite == Suite::trace) append(rows, trace_study(c));
  if (all || suite == Suite::retraction) append(rows, retraction_rows(c));
  if (all || suite == Suite::maximal) append(rows, maximal_rows(c));
  if (all || suite == Suite::triebel) append(rows, triebel_rows(c));
  return rows;
}

}  // namespace amalgam::verify
