#pragma once

#include <filesystem>
#include <iosfwd>

#include "amalgam/field.hpp"

namespace amalgam {

/// AMF field files: one JSON header line
///   {"n":2,"L":[8,8],"N":[128,128],"dtype":"c128"}\n
/// followed by prod_i N_i little-endian interleaved (re, im) float64 pairs in
/// row-major order.
void write_amf(std::ostream& out, const SampledField& f);
SampledField read_amf(std::istream& in);

void write_amf(const std::filesystem::path& path, const SampledField& f);
SampledField read_amf(const std::filesystem::path& path);

}  // namespace amalgam
