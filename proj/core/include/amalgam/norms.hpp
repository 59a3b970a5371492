#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "amalgam/decomposition.hpp"

namespace amalgam {

enum class NormVariant { isotropic, aniso_last, aniso_last2, maximal_isotropic, maximal_aniso };

std::string to_string(NormVariant v);
NormVariant parse_norm_variant(const std::string& name);
bool is_maximal(NormVariant v);

/// Selects one of the amalgam quasi-norms. Exponents accept kInfinity.
struct NormSpec {
  double p = 2.0;
  double q = 2.0;
  std::optional<double> r;
  double s = 0.0;
  NormVariant variant = NormVariant::isotropic;
  std::optional<double> b;
  ShiftSet shifts = ShiftSet::integer_lattice;

  /// Throws std::invalid_argument when r / b presence does not match the variant
  /// or an exponent is not positive.
  void validate() const;

  static NormSpec isotropic(double p, double q, double s);
  static NormSpec aniso_last(double p, double q, double r, double s);
  static NormSpec aniso_last2(double p, double q, double r, double s);
  static NormSpec maximal_isotropic(double p, double q, double s, double b);
  static NormSpec maximal_aniso(double p, double q, double r, double s, double b);
};

/// Japanese bracket <k>^s = (1 + |k|^2)^{s/2}.
double bracket(std::span<const int> k, double s);

/// || ( sum_k <k>^{sq} |Box_k f|^q )^{1/q} ||_{L^p}
double wiener_norm(const BandSet& bands, const NormSpec& spec);

/// || ( sum_{k_n} ( sum_{kbar} <kbar>^{sq} |Box_k f|^q )^{r/q} )^{1/r} ||_{L^p}
double aniso_norm(const BandSet& bands, const NormSpec& spec);

/// As aniso_norm with (k_{n-1}, k_n) in the outer l^r layer and weight <kbarbar>^s.
double aniso2_norm(const BandSet& bands, const NormSpec& spec);

/// The isotropic or last-axis aggregation with |Box_k f| replaced by Box*_k f.
/// Emits a warning (does not throw) when b <= n / min(p, q).
double maximal_wiener_norm(const BandSet& bands, const NormSpec& spec);

/// Dispatch on spec.variant.
double evaluate_norm(const BandSet& bands, const NormSpec& spec);

/// The pointwise mixed l^q / l^r aggregate whose L^p norm is the quasi-norm.
RealField pointwise_aggregate(const BandSet& bands, const NormSpec& spec);

/// Same aggregation over caller-supplied band magnitudes (one RealField per
/// lattice point of `box`, lattice order).
RealField aggregate_magnitudes(const LatticeBox& box, std::span<const RealField> magnitudes,
                               double q, std::optional<double> r, double s, int outer_axes);

/// n / min(p, q), the threshold above which the maximal norms are equivalent.
double maximal_exponent_threshold(int dimension, double p, double q);

using WarningHandler = std::function<void(const std::string&)>;
/// Replaces the sink for non-fatal warnings (default: std::clog). Returns the previous handler.
WarningHandler set_warning_handler(WarningHandler handler);

}  // namespace amalgam
