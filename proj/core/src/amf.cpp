#include "amalgam/amf.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace amalgam {

namespace {

static_assert(sizeof(double) == 8);

void put_le(std::ostream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  char buf[8];
  std::memcpy(buf, &bits, 8);
  out.write(buf, 8);
}

double get_le(const char* buf) {
  std::uint64_t bits;
  std::memcpy(&bits, buf, 8);
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

void write_amf(std::ostream& out, const SampledField& f) {
  nlohmann::ordered_json header;
  header["n"] = f.grid().dimension();
  header["L"] = f.grid().period();
  header["N"] = f.grid().samples();
  header["dtype"] = "c128";
  out << header.dump() << '\n';
  for (const Complex& z : f.values()) {
    put_le(out, z.real());
    put_le(out, z.imag());
  }
  if (!out) throw std::runtime_error("write_amf: stream error");
}

SampledField read_amf(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_amf: missing header line");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("read_amf: malformed header: ") + e.what());
  }
  if (!header.contains("n") || !header.contains("L") || !header.contains("N"))
    throw std::runtime_error("read_amf: header must contain n, L and N");
  if (header.value("dtype", std::string{}) != "c128")
    throw std::runtime_error("read_amf: unsupported dtype (expected c128)");
  const int n = header.at("n").get<int>();
  auto period = header.at("L").get<std::vector<int>>();
  auto samples = header.at("N").get<std::vector<int>>();
  if (static_cast<int>(period.size()) != n || static_cast<int>(samples.size()) != n)
    throw std::runtime_error("read_amf: L and N must have n entries");
  GridSpec grid(std::move(period), std::move(samples));

  std::vector<Complex> values(grid.size());
  char buf[16];
  for (auto& z : values) {
    if (!in.read(buf, 16)) throw std::runtime_error("read_amf: sample count smaller than prod N");
    z = Complex(get_le(buf), get_le(buf + 8));
  }
  if (in.peek() != std::char_traits<char>::eof())
    throw std::runtime_error("read_amf: trailing bytes after prod N samples");
  return SampledField(std::move(grid), std::move(values));
}

void write_amf(const std::filesystem::path& path, const SampledField& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_amf: cannot open " + path.string());
  write_amf(out, f);
}

SampledField read_amf(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_amf: cannot open " + path.string());
  return read_amf(in);
}

}  // namespace amalgam
