#pragma once

#include <complex>
#include <vector>

namespace amalgam::detail {

enum class Direction { forward, backward };

/// Unnormalized multidimensional DFT of a row-major array; forward uses
/// e^{-2 pi i jm/N}, backward e^{+2 pi i jm/N}. `in` and `out` must not alias.
void dft(const std::vector<int>& dims, const std::complex<double>* in,
         std::complex<double>* out, Direction direction);

}  // namespace amalgam::detail
