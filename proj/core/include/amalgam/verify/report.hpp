#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/grid.hpp"

namespace amalgam::verify {

/// One line of a verification report. When a bound is present, pass means
/// ratio <= bound (up to the slack the producing check documents).
struct ReportRow {
  std::string check;
  std::string params;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  std::optional<double> bound;
  bool pass = true;
  bool degenerate = false;
};

/// lhs / rhs with 0/0 -> 1 (sets degenerate).
ReportRow make_ratio_row(std::string check, std::string params, double lhs, double rhs,
                         std::optional<double> bound, double slack = 0.0);

/// key=value pairs joined by ';'.
class Params {
 public:
  Params& add(const std::string& key, double value);
  Params& add(const std::string& key, const std::string& value);
  Params& add(const std::string& key, long long value);
  Params& add(const std::string& key, int value) { return add(key, static_cast<long long>(value)); }
  Params& add(const std::string& key, std::size_t value) { return add(key, static_cast<long long>(value)); }
  /// L=4x4;N=64x64
  Params& add_grid(const GridSpec& grid);
  const std::string& str() const { return text_; }
  operator const std::string&() const { return text_; }

 private:
  std::string text_;
};

/// Shortest round-trip decimal form ("inf" for infinity).
std::string format_number(double v);

inline constexpr const char* kCsvHeader = "check,params,lhs,rhs,ratio,bound,pass";

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows);
void write_csv(const std::filesystem::path& path, const std::vector<ReportRow>& rows);

struct CheckSummary {
  std::string check;
  std::size_t rows = 0;
  std::size_t failed = 0;
  std::size_t degenerate = 0;
  bool bounded = false;
  double max_ratio = 0.0;
};

std::vector<CheckSummary> summarize(const std::vector<ReportRow>& rows);
bool all_bounded_pass(const std::vector<ReportRow>& rows);
void write_summary_json(std::ostream& out, const std::vector<ReportRow>& rows);
void write_summary_json(const std::filesystem::path& path, const std::vector<ReportRow>& rows);

/// out.csv -> out.summary.json next to it.
std::filesystem::path summary_path_for(const std::filesystem::path& csv);

}  // namespace amalgam::verify
