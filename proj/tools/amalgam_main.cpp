// Command-line front end: decompose, norm, trace, extend, verify, scan.

#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "amalgam/amf.hpp"
#include "amalgam/norms.hpp"
#include "amalgam/summation.hpp"
#include "amalgam/trace.hpp"
#include "amalgam/verify/checks.hpp"
#include "amalgam/verify/experiment.hpp"

namespace fs = std::filesystem;
using namespace amalgam;
using namespace amalgam::verify;

namespace {

double parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInfinity;
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad exponent '" + text + "'");
  return v;
}

// Largest K the grid resolves (N/(2L) > K + 1 on every axis).
int default_radius(const GridSpec& grid) {
  int K = 0;
  while (grid.resolves_radius(K + 1)) ++K;
  if (!grid.resolves_radius(K)) throw std::invalid_argument("grid " + grid.describe() + " resolves no window family");
  return K;
}

std::vector<double> parse_grid(const std::string& text) {
  double a, b, step;
  char c1, c2;
  std::istringstream in(text);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0.0) || b < a)
    throw std::invalid_argument("--s-grid expects a:b:step with a <= b, step > 0");
  std::vector<double> out;
  const long count = std::lround(std::floor((b - a) / step + 1e-9));
  for (long i = 0; i <= count; ++i) out.push_back(a + i * step);
  return out;
}

void write_reports(const std::vector<ReportRow>& rows, const fs::path& report) {
  write_csv(report, rows);
  write_summary_json(summary_path_for(report), rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequency-uniform decompositions, amalgam norms and trace checks"};
  app.require_subcommand(1);

  std::string input, output, variant = "isotropic", shifts = "integer", suite = "all", config, report, s_grid;
  std::optional<int> radius;
  std::string p_text = "2", q_text = "2", r_text;
  double s = 0.0, eps = 0.01;
  std::optional<double> b;
  int period = 16, samples = 64;

  auto* decompose_cmd = app.add_subcommand("decompose", "Write every band Box_k f as an AMF file plus index.json");
  decompose_cmd->add_option("--input", input, "Input field (.amf)")->required()->check(CLI::ExistingFile);
  decompose_cmd->add_option("--K", radius, "Truncation radius (default: largest resolved)");
  decompose_cmd->add_option("--out", output, "Output directory")->required();

  auto* norm_cmd = app.add_subcommand("norm", "Evaluate an amalgam quasi-norm");
  norm_cmd->add_option("--input", input, "Input field (.amf)")->required()->check(CLI::ExistingFile);
  norm_cmd->add_option("--p", p_text, "Lebesgue exponent (number or inf)");
  norm_cmd->add_option("--q", q_text, "Inner sequence exponent");
  norm_cmd->add_option("--r", r_text, "Outer sequence exponent (anisotropic variants)");
  norm_cmd->add_option("--s", s, "Regularity index");
  norm_cmd->add_option("--variant", variant, "isotropic | aniso-last | aniso-last2 | maximal")
      ->check(CLI::IsMember({"isotropic", "aniso-last", "aniso-last2", "maximal"}));
  norm_cmd->add_option("--b", b, "Maximal weight exponent");
  norm_cmd->add_option("--shifts", shifts, "Maximal shift set: integer | grid")->check(CLI::IsMember({"integer", "grid"}));
  norm_cmd->add_option("--K", radius, "Truncation radius (default: largest resolved)");

  auto* trace_cmd = app.add_subcommand("trace", "Restrict a field to x_n = 0");
  trace_cmd->add_option("--input", input, "Input field (.amf)")->required()->check(CLI::ExistingFile);
  trace_cmd->add_option("--out", output, "Output field (.amf)")->required();

  auto* extend_cmd = app.add_subcommand("extend", "Extend an (n-1)-field by the eta' kernel along a new last axis");
  extend_cmd->add_option("--input", input, "Input field (.amf)")->required()->check(CLI::ExistingFile);
  extend_cmd->add_option("--L", period, "Period of the new axis");
  extend_cmd->add_option("--N", samples, "Samples on the new axis");
  extend_cmd->add_option("--out", output, "Output field (.amf)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and write a CSV report");
  verify_cmd->add_option("--suite", suite, "all | embeddings | trace | retraction | maximal | triebel")
      ->check(CLI::IsMember({"all", "embeddings", "trace", "retraction", "maximal", "triebel"}));
  verify_cmd->add_option("--config", config, "JSON configuration (defaults when omitted)")->check(CLI::ExistingFile);
  verify_cmd->add_option("--report", report, "CSV report path")->required();

  auto* scan_cmd = app.add_subcommand("scan", "Trace ratio against the regularity index");
  scan_cmd->add_option("--p", p_text, "Lebesgue exponent")->required();
  scan_cmd->add_option("--q", q_text, "Sequence exponent")->required();
  scan_cmd->add_option("--s-grid", s_grid, "a:b:step")->required();
  scan_cmd->add_option("--eps", eps, "Regularity surplus on the n-dimensional side");
  scan_cmd->add_option("--config", config, "JSON configuration for grid and corpus")->check(CLI::ExistingFile);
  scan_cmd->add_option("--report", report, "CSV report path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*decompose_cmd) {
      const SampledField f = read_amf(fs::path(input));
      const int K = radius.value_or(default_radius(f.grid()));
      export_bandset(decompose(f, WindowFamily(f.grid().dimension(), K)), output);
      std::cout << "wrote " << LatticeBox(f.grid().dimension(), K).size() << " bands to " << output << '\n';
    } else if (*norm_cmd) {
      const SampledField f = read_amf(fs::path(input));
      const int K = radius.value_or(default_radius(f.grid()));
      NormSpec spec;
      spec.p = parse_exponent(p_text);
      spec.q = parse_exponent(q_text);
      spec.s = s;
      if (!r_text.empty()) spec.r = parse_exponent(r_text);
      spec.b = b;
      spec.shifts = shifts == "grid" ? ShiftSet::sample_grid : ShiftSet::integer_lattice;
      if (variant == "maximal") {
        spec.variant = spec.r ? NormVariant::maximal_aniso : NormVariant::maximal_isotropic;
        if (!spec.b) spec.b = maximal_exponent_threshold(f.grid().dimension(), spec.p, spec.q) + 0.01;
      } else {
        spec.variant = parse_norm_variant(variant);
      }
      const double value = evaluate_norm(decompose(f, WindowFamily(f.grid().dimension(), K)), spec);
      std::cout << format_number(value) << '\n';
    } else if (*trace_cmd) {
      write_amf(fs::path(output), trace(read_amf(fs::path(input))));
    } else if (*extend_cmd) {
      const SampledField g = read_amf(fs::path(input));
      std::vector<int> L = g.grid().period(), N = g.grid().samples();
      L.push_back(period);
      N.push_back(samples);
      write_amf(fs::path(output), extend(g, ExtensionProfile{}, GridSpec(L, N)));
    } else if (*verify_cmd) {
      const ExperimentConfig cfg = config.empty() ? ExperimentConfig::defaults() : ExperimentConfig::from_file(config);
      std::size_t warnings = 0;
      std::string first_warning;
      const WarningHandler previous = set_warning_handler([&](const std::string& msg) {
        if (warnings++ == 0) first_warning = msg;
      });
      const std::vector<ReportRow> rows = run_suite(parse_suite(suite), cfg);
      set_warning_handler(previous);
      if (warnings > 0) std::cerr << "warning: " << first_warning << " (" << warnings << " occurrences)\n";
      write_reports(rows, report);
      for (const CheckSummary& c : summarize(rows)) {
        std::printf("%-36s rows=%-6zu failed=%-4zu max_ratio=%s%s\n", c.check.c_str(), c.rows, c.failed,
                    format_number(c.max_ratio).c_str(), c.bounded ? "" : " (recorded)");
      }
      const bool ok = all_bounded_pass(rows);
      std::printf("%s: %zu rows, report %s\n", ok ? "PASS" : "FAIL", rows.size(), report.c_str());
      return ok ? 0 : 1;
    } else if (*scan_cmd) {
      const ExperimentConfig cfg = config.empty() ? ExperimentConfig::defaults() : ExperimentConfig::from_file(config);
      const double p = parse_exponent(p_text), q = parse_exponent(q_text);
      const GridConfig& g = cfg.grid;
      const auto corpus = generate_corpus(CorpusSpec{g.dimension, g.period, g.truncation_radius, cfg.corpus_size, cfg.seed});
      const auto points = regularity_scan(p, q, parse_grid(s_grid), eps, corpus, g.grid(), g.truncation_radius);
      const auto rows = scan_rows(p, q, eps, points);
      write_reports(rows, report);
      for (const ScanPoint& pt : points)
        std::printf("s=%-8s max_ratio=%s (%s)\n", format_number(pt.s).c_str(), format_number(pt.max_ratio).c_str(),
                    pt.argmax.c_str());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
