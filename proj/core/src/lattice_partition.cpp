#include "amalgam/lattice_partition.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace amalgam {

namespace {

double smooth_ramp(double u, double sharpness) {
  return u > 0.0 ? std::exp(-sharpness / u) : 0.0;
}

// Integers m whose window eta(2(t - m)) can be nonzero at t.
std::pair<int, int> covering_range(double t) {
  const int base = static_cast<int>(std::floor(t));
  return {base - 1, base + 2};
}

}  // namespace

double BumpProfile::operator()(double t) const {
  const double a = std::abs(t);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const double u = 2.0 - a;
  const double num = smooth_ramp(u, transition_sharpness);
  const double den = num + smooth_ramp(1.0 - u, transition_sharpness);
  return num / den;
}

double eval_eta(const BumpProfile& profile, double t) { return profile(t); }

bool Box::contains(std::span<const double> xi) const {
  if (xi.size() != lower.size()) return false;
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (!(xi[i] > lower[i] && xi[i] < upper[i])) return false;
  return true;
}

WindowFamily::WindowFamily(int dimension, int truncation_radius, BumpProfile bump)
    : dimension_(dimension), radius_(truncation_radius), bump_(bump) {
  if (dimension < 1) throw std::invalid_argument("WindowFamily: dimension must be positive");
  if (truncation_radius < 0) throw std::invalid_argument("WindowFamily: negative truncation radius");
  if (!(bump.transition_sharpness > 0.0))
    throw std::invalid_argument("WindowFamily: transition sharpness must be positive");
}

void WindowFamily::check_index(std::span<const int> k) const {
  if (static_cast<int>(k.size()) != dimension_)
    throw std::invalid_argument("WindowFamily: index dimension mismatch");
  if (sup_norm(k) > radius_)
    throw std::out_of_range("WindowFamily: index " + to_string(k) + " outside truncation radius");
}

double WindowFamily::operator()(std::span<const int> k, std::span<const double> xi) const {
  check_index(k);
  if (static_cast<int>(xi.size()) != dimension_)
    throw std::invalid_argument("WindowFamily: frequency dimension mismatch");

  double numerator = 1.0;
  for (int i = 0; i < dimension_; ++i) numerator *= bump_(2.0 * (xi[i] - k[i]));
  if (numerator == 0.0) return 0.0;

  // Sum over every lattice point m with all axis windows possibly nonzero.
  std::vector<int> lo(dimension_), hi(dimension_), m(dimension_);
  for (int i = 0; i < dimension_; ++i) {
    std::tie(lo[i], hi[i]) = covering_range(xi[i]);
    m[i] = lo[i];
  }
  double denominator = 0.0;
  for (;;) {
    double term = 1.0;
    for (int i = 0; i < dimension_ && term != 0.0; ++i) term *= bump_(2.0 * (xi[i] - m[i]));
    denominator += term;
    int axis = dimension_ - 1;
    while (axis >= 0 && ++m[axis] > hi[axis]) {
      m[axis] = lo[axis];
      --axis;
    }
    if (axis < 0) break;
  }
  return numerator / denominator;
}

double WindowFamily::axis_window(int j, double t) const {
  const double numerator = bump_(2.0 * (t - j));
  if (numerator == 0.0) return 0.0;
  const auto [lo, hi] = covering_range(t);
  double denominator = 0.0;
  for (int m = lo; m <= hi; ++m) denominator += bump_(2.0 * (t - m));
  return numerator / denominator;
}

Box WindowFamily::support(std::span<const int> k) const {
  check_index(k);
  Box box;
  for (int v : k) {
    box.lower.push_back(v - 1.0);
    box.upper.push_back(v + 1.0);
  }
  return box;
}

double eval_window(const WindowFamily& family, std::span<const int> k,
                   std::span<const double> xi) {
  return family(k, xi);
}

double eval_mixed_window(const WindowFamily& family_n, const WindowFamily& family_n1,
                         std::span<const int> kbar, std::span<const int> l,
                         std::span<const double> xi) {
  if (family_n1.dimension() + 1 != family_n.dimension())
    throw std::invalid_argument("eval_mixed_window: families must have dimensions n and n-1");
  if (kbar.size() + 1 != l.size())
    throw std::invalid_argument("eval_mixed_window: kbar must have one fewer coordinate than l");
  const double outer = family_n1(kbar, xi.first(kbar.size()));
  if (outer == 0.0) return 0.0;
  return outer * family_n(l, xi);
}

Box window_support(const WindowFamily& family, std::span<const int> k) {
  return family.support(k);
}

}  // namespace amalgam
