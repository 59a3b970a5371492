#include "amalgam/verify/corpus.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "amalgam/summation.hpp"

namespace amalgam::verify {

namespace {

using TermMap = std::map<std::vector<int>, Complex>;

std::vector<int> limits(const std::vector<int>& period, int radius) {
  std::vector<int> out;
  for (int L : period) out.push_back((radius - 1) * L);
  return out;
}

std::vector<Term> to_terms(const TermMap& map, const std::vector<int>& period) {
  double energy = 0.0;
  for (const auto& [m, a] : map) energy += std::norm(a);
  double volume = 1.0;
  for (int L : period) volume *= L;
  const double scale = energy > 0.0 ? 1.0 / std::sqrt(volume * energy) : 1.0;
  std::vector<Term> terms;
  for (const auto& [m, a] : map)
    if (a != Complex(0.0)) terms.push_back({m, scale * a});
  return terms;
}

class Builder {
 public:
  Builder(const std::vector<int>& period, int radius, std::uint64_t seed)
      : period_(period), lim_(limits(period, radius)), rng_(seed) {}

  std::vector<int> random_index() {
    std::vector<int> m;
    for (int l : lim_) m.push_back(std::uniform_int_distribution<int>(-l, l)(rng_));
    return m;
  }
  Complex gauss() { return {normal_(rng_), normal_(rng_)}; }
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }

  TermMap tone() { return {{random_index(), Complex(1.0)}}; }

  TermMap trig() {
    TermMap map;
    const int count = std::uniform_int_distribution<int>(4, 24)(rng_);
    for (int i = 0; i < count; ++i) map[random_index()] += gauss();
    return map;
  }

  // exp(-|xi - c|^2 / (2 w^2)) e^{i phase} on the admissible box, i.e. a
  // periodized Gaussian of width ~1/w modulated to the centre c.
  TermMap gaussian() {
    const int n = static_cast<int>(period_.size());
    std::vector<double> centre;
    for (int a = 0; a < n; ++a) {
      const double l = double(lim_[static_cast<std::size_t>(a)]) / period_[static_cast<std::size_t>(a)];
      centre.push_back(std::round(uniform(-l, l)));
    }
    const double width = uniform(0.3, 1.0);
    const Complex phase = std::polar(1.0, uniform(0.0, 2.0 * M_PI));
    TermMap map;
    std::vector<int> m(lim_.size());
    for (int a = 0; a < n; ++a) m[static_cast<std::size_t>(a)] = -lim_[static_cast<std::size_t>(a)];
    for (;;) {
      double d2 = 0.0;
      for (int a = 0; a < n; ++a) {
        const double xi = double(m[static_cast<std::size_t>(a)]) / period_[static_cast<std::size_t>(a)];
        d2 += (xi - centre[static_cast<std::size_t>(a)]) * (xi - centre[static_cast<std::size_t>(a)]);
      }
      const double v = std::exp(-0.5 * d2 / (width * width));
      if (v > 1e-18) map[m] = v * phase;
      int a = n - 1;
      while (a >= 0 && ++m[static_cast<std::size_t>(a)] > lim_[static_cast<std::size_t>(a)]) {
        m[static_cast<std::size_t>(a)] = -lim_[static_cast<std::size_t>(a)];
        --a;
      }
      if (a < 0) break;
    }
    return map;
  }

 private:
  std::vector<int> period_;
  std::vector<int> lim_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

}  // namespace

SampledField CorpusMember::sample(const GridSpec& grid) const {
  if (grid.period() != period) throw std::invalid_argument("CorpusMember::sample: period mismatch");
  Spectrum zero = Spectrum::zeros(grid);
  std::vector<Complex> coeffs(zero.coefficients().begin(), zero.coefficients().end());
  double volume = 1.0;
  for (int L : period) volume *= L;
  for (const Term& t : terms) {
    if (!zero.representable(t.m)) throw std::invalid_argument("CorpusMember::sample: frequency not representable");
    coeffs[zero.offset(t.m)] += volume * t.amplitude;
  }
  return inverse_transform(Spectrum(grid, std::move(coeffs)));
}

std::vector<CorpusMember> generate_corpus(const CorpusSpec& spec) {
  if (spec.dimension < 1) throw std::invalid_argument("generate_corpus: dimension must be positive");
  if (spec.truncation_radius < 1) throw std::invalid_argument("generate_corpus: K must be >= 1");
  const std::vector<int> period(static_cast<std::size_t>(spec.dimension), spec.period);
  std::vector<CorpusMember> out;
  out.reserve(spec.size);
  static const char* kinds[] = {"tone", "trig", "gaussian", "separable"};
  const int kind_count = spec.dimension >= 2 ? 4 : 3;
  for (std::size_t i = 0; i < spec.size; ++i) {
    const std::uint64_t member_seed = spec.seed * 1000003ULL + i;
    Builder builder(period, spec.truncation_radius, member_seed);
    const int kind = static_cast<int>(i % static_cast<std::size_t>(kind_count));
    TermMap map;
    switch (kind) {
      case 0: map = builder.tone(); break;
      case 1: map = builder.trig(); break;
      case 2: map = builder.gaussian(); break;
      default: {
        const std::vector<int> lead(period.begin(), period.end() - 1), last{period.back()};
        Builder g(lead, spec.truncation_radius, member_seed ^ 0x9e3779b97f4a7c15ULL);
        Builder h(last, spec.truncation_radius, member_seed ^ 0xc2b2ae3d27d4eb4fULL);
        const TermMap gm = member_seed % 2 ? g.trig() : g.gaussian();
        const TermMap hm = h.trig();
        for (const auto& [a, ca] : gm)
          for (const auto& [b, cb] : hm) {
            std::vector<int> m = a;
            m.push_back(b[0]);
            map[m] += ca * cb;
          }
        break;
      }
    }
    out.push_back({kinds[kind], std::string(kinds[kind]) + "#" + std::to_string(i), period, to_terms(map, period)});
  }
  return out;
}

double spectral_mass_outside(const SampledField& f, int truncation_radius) {
  const Spectrum s = forward_transform(f);
  const GridSpec& grid = f.grid();
  std::vector<double> inside, outside;
  for (std::size_t flat = 0; flat < s.size(); ++flat) {
    const auto idx = grid.unravel(flat);
    bool in = true;
    for (int a = 0; a < grid.dimension(); ++a) {
      const double xi = double(idx[static_cast<std::size_t>(a)] - grid.zero_index(a)) / grid.period(a);
      in = in && std::abs(xi) <= truncation_radius - 1;
    }
    (in ? inside : outside).push_back(std::norm(s.coefficients()[flat]));
  }
  const double out = pairwise_sum(outside);
  const double total = out + pairwise_sum(inside);
  return total > 0.0 ? out / total : 0.0;
}

}  // namespace amalgam::verify
