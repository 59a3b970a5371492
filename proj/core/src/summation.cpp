#include "amalgam/summation.hpp"

#include <stdexcept>
#include <string>

namespace amalgam {

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kBlock = 64;
  if (values.size() <= kBlock) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

void require_exponent(double p, const char* what) {
  if (!(p > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive (or infinity)");
}

}  // namespace amalgam
