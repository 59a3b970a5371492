#include "amalgam/verify/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace amalgam::verify {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, end);
}

ReportRow make_ratio_row(std::string check, std::string params, double lhs, double rhs,
                         std::optional<double> bound, double slack) {
  ReportRow row{std::move(check), std::move(params), lhs, rhs, 0.0, bound, true, false};
  if (lhs == 0.0 && rhs == 0.0) {
    row.ratio = 1.0;
    row.degenerate = true;
  } else {
    row.ratio = lhs / rhs;
  }
  if (bound)
    row.pass = row.ratio <= *bound + slack;
  else
    row.pass = !std::isnan(row.ratio);
  return row;
}

Params& Params::add(const std::string& key, double value) { return add(key, format_number(value)); }

Params& Params::add(const std::string& key, long long value) { return add(key, std::to_string(value)); }

Params& Params::add(const std::string& key, const std::string& value) {
  if (!text_.empty()) text_ += ';';
  text_ += key;
  text_ += '=';
  text_ += value;
  return *this;
}

Params& Params::add_grid(const GridSpec& grid) {
  std::string L, N;
  for (int a = 0; a < grid.dimension(); ++a) {
    if (a) {
      L += 'x';
      N += 'x';
    }
    L += std::to_string(grid.period(a));
    N += std::to_string(grid.samples(a));
  }
  return add("L", L).add("N", N);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << kCsvHeader << '\n';
  for (const ReportRow& r : rows) {
    std::string params = r.params;
    if (r.degenerate) params += params.empty() ? "degenerate=1" : ";degenerate=1";
    out << csv_field(r.check) << ',' << csv_field(params) << ',' << format_number(r.lhs) << ','
        << format_number(r.rhs) << ',' << format_number(r.ratio) << ','
        << (r.bound ? format_number(*r.bound) : std::string{}) << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const std::vector<ReportRow>& rows) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report " + path.string());
  write_csv(out, rows);
}

std::vector<CheckSummary> summarize(const std::vector<ReportRow>& rows) {
  std::map<std::string, CheckSummary> by_check;
  for (const ReportRow& r : rows) {
    CheckSummary& s = by_check[r.check];
    s.check = r.check;
    ++s.rows;
    if (!r.pass) ++s.failed;
    if (r.degenerate) ++s.degenerate;
    if (r.bound) s.bounded = true;
    if (!std::isnan(r.ratio) && (s.rows == 1 || r.ratio > s.max_ratio)) s.max_ratio = r.ratio;
  }
  std::vector<CheckSummary> out;
  for (auto& [name, s] : by_check) out.push_back(s);
  return out;
}

bool all_bounded_pass(const std::vector<ReportRow>& rows) {
  for (const ReportRow& r : rows)
    if (r.bound && !r.pass) return false;
  return true;
}

void write_summary_json(std::ostream& out, const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json doc;
  std::size_t failed = 0;
  for (const ReportRow& r : rows) failed += r.pass ? 0 : 1;
  doc["rows"] = rows.size();
  doc["failed"] = failed;
  doc["all_bounded_pass"] = all_bounded_pass(rows);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckSummary& s : summarize(rows)) {
    nlohmann::ordered_json c;
    c["check"] = s.check;
    c["rows"] = s.rows;
    c["failed"] = s.failed;
    c["degenerate"] = s.degenerate;
    c["bounded"] = s.bounded;
    c["max_ratio"] = json_number(s.max_ratio);
    checks.push_back(std::move(c));
  }
  doc["checks"] = std::move(checks);
  out << doc.dump(2) << '\n';
}

void write_summary_json(const std::filesystem::path& path, const std::vector<ReportRow>& rows) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write summary " + path.string());
  write_summary_json(out, rows);
}

std::filesystem::path summary_path_for(const std::filesystem::path& csv) {
  std::filesystem::path out = csv;
  out.replace_extension(".summary.json");
  return out;
}

}  // namespace amalgam::verify
