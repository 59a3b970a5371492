#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/norms.hpp"
#include "amalgam/trace.hpp"
#include "amalgam/verify/corpus.hpp"
#include "amalgam/verify/report.hpp"

namespace amalgam::verify {

/// max over `samples` random xi with max_i |xi_i| <= K - 1 of |sum_k phi_k(xi) - 1|,
/// using the literal window formula. Bound 1e-12.
ReportRow check_partition_of_unity(const WindowFamily& family, std::size_t samples, std::uint64_t seed);

/// Relative l2 error of reconstruct(decompose f). Bound 1e-11.
ReportRow check_reconstruction(const std::string& label, const SampledField& f, const BandSet& bands);

/// Admissibility of a corpus member: spectral mass outside the band. Bound 1e-12.
ReportRow check_admissible(const std::string& label, const SampledField& f, int truncation_radius);

/// max over kbar with |kbar|_inf <= K - 1 of the band identity residual. Bound 1e-9.
ReportRow check_band_identity(const std::string& label, const SampledField& f, const WindowFamily& family_n,
                              const WindowFamily& family_n1);

/// ||Tf||_{W^{p,q}_s} / ||f||_{W^{p,q,min(1,q)}_s} from the bands of f and of
/// its trace; recorded, no bound.
ReportRow check_trace_inequality(const std::string& label, const BandSet& bands, const BandSet& traced,
                                 double p, double q, double s);

/// The trace ratio with r = q against r = min(1, q) for q >= 1:
/// ||f||_{W^{p,q,q}} / ||f||_{W^{p,q,1}} <= 1 (l^1 dominates l^q).
ReportRow check_trace_r_monotone(const std::string& label, const BandSet& bands, double p, double q, double s);

/// Factor that the extension contributes to the anisotropic norm:
/// || (sum_{k_n} |Box_{k_n} w|^r)^{1/r} ||_{L^p} on the one-dimensional axis.
double extension_factor(const ExtensionProfile& profile, const GridSpec& axis, int truncation_radius, double p,
                        double r);

struct RetractionRows {
  ReportRow identity;              ///< trace(extend g) = g, relative l2, bound 1e-10
  ReportRow vanishing;             ///< max |Box_k extend g| over |k_n| >= 2, bound 1e-12
  ReportRow factorization;         ///< Box_k extend g = Box_kbar g (x) Box_kn w, bound 1e-10
  std::vector<ReportRow> ratios;   ///< ||extend g||_{W^{p,q,min(1,q)}_s} / ||g||_{W^{p,q}_s}, recorded
  std::vector<ReportRow> factors;  ///< ratio against extension_factor; bound 1e-9 (1e-6 for q < 1)
};

/// One extension and decomposition of g, then the norm ratios for every (p, q).
RetractionRows check_retraction(const std::string& label, const SampledField& g,
                                const std::vector<std::pair<double, double>>& pairs, double s,
                                const ExtensionProfile& profile, const GridSpec& target,
                                const WindowFamily& family_n, const WindowFamily& family_n1);

struct MaximalRows {
  ReportRow lower;  ///< plain / maximal <= 1 (bound only when b is above the threshold)
  ReportRow upper;  ///< maximal / plain, recorded
};

MaximalRows check_maximal_equivalence(const std::string& label, const BandSet& bands, const NormSpec& maximal);

/// sup_z |f_k(x - z)| / (1 + |d_k z|^{n/r}) with d_k = 2 sqrt n (diameter of
/// the window support) against ||f_k||_{L^p(l^q)}; recorded. Throws unless
/// r < min(p, q).
ReportRow check_triebel_maximal(const std::string& label, const BandSet& bands, double p, double q, double r,
                                ShiftSet shifts);

/// Worst |Box_k f(xbar, 0)| / (2 Box*_k f(x)) over all bands and samples with
/// |x_n| <= 1; bound 1 (equivalently every margin >= 0). Bands whose peak is
/// below 1e-12 of the largest band carry only roundoff and are left out of the
/// ratio; min_margin in the params still covers every band.
ReportRow check_pointwise_bound(const std::string& label, const BandSet& bands, double b, ShiftSet shifts);

struct ScanPoint {
  double s;
  double max_ratio;
  std::string argmax;
};

/// For each s, max over the corpus of ||Tf||_{W^{p,q}_s} / ||f||_{W^{p,q}_{s + 1/min(1,q) - 1/q + eps}}.
std::vector<ScanPoint> regularity_scan(double p, double q, const std::vector<double>& s_grid, double eps,
                                       const std::vector<CorpusMember>& corpus, const GridSpec& grid,
                                       int truncation_radius);
std::vector<ReportRow> scan_rows(double p, double q, double eps, const std::vector<ScanPoint>& points);

}  // namespace amalgam::verify
