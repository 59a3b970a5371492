#include "amalgam/verify/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "amalgam/norms.hpp"
#include "amalgam/summation.hpp"

namespace amalgam::verify {

namespace {

constexpr double kSlack = 1e-12;

bool finite(double x) { return !std::isinf(x); }

// sum_{j > m} j^{-beta} <= int_m^inf x^{-beta} dx
double power_tail(double m, double beta) { return std::pow(m, 1.0 - beta) / (beta - 1.0); }

// sum_{m in Z} <m>^{-gamma}, truncated at |m| <= M plus the tail of |m|^{-gamma} >= <m>^{-gamma}.
double bracket_decay_sum(double gamma, int truncation) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(truncation));
  for (int m = truncation; m >= 1; --m) terms.push_back(std::pow(1.0 + double(m) * m, -0.5 * gamma));
  return 1.0 + 2.0 * pairwise_sum(terms) + 2.0 * power_tail(truncation, gamma);
}

// sup over k of (<k_n>/<k>)^{a} (<kbar>/<k>)^{b}, a, b >= 0. Depends only on
// |kbar|^2 = t and k_n = m; the lattice scan is closed by the directional
// limit (cos^a sin^b maximized), which bounds every large-|k| value.
double bracket_ratio_sup(double a, double b, int truncation) {
  double best = 0.0;
  for (int t = 0; t <= truncation; ++t)
    for (int m = 0; m <= truncation; ++m) {
      const double total = 1.0 + t + double(m) * m;
      const double v = std::pow((1.0 + double(m) * m) / total, 0.5 * a) * std::pow((1.0 + t) / total, 0.5 * b);
      best = std::max(best, v);
    }
  double limit = 1.0;
  if (a > 0.0 && b > 0.0) {
    const double c2 = a / (a + b);
    limit = std::pow(c2, 0.5 * a) * std::pow(1.0 - c2, 0.5 * b);
  }
  return std::max(best, limit);
}

}  // namespace

std::string to_string(EmbeddingCaseId id) {
  switch (id) {
    case EmbeddingCaseId::I_i: return "I-i";
    case EmbeddingCaseId::I_ii: return "I-ii";
    case EmbeddingCaseId::II_i: return "II-i";
    case EmbeddingCaseId::II_ii: return "II-ii";
    case EmbeddingCaseId::III_i: return "III-i";
    case EmbeddingCaseId::III_ii: return "III-ii";
  }
  return "?";
}

EmbeddingCaseId parse_case_id(const std::string& name) {
  for (auto id : {EmbeddingCaseId::I_i, EmbeddingCaseId::I_ii, EmbeddingCaseId::II_i, EmbeddingCaseId::II_ii,
                  EmbeddingCaseId::III_i, EmbeddingCaseId::III_ii})
    if (to_string(id) == name) return id;
  throw std::invalid_argument("unknown embedding case '" + name + "'");
}

void EmbeddingCase::validate() const {
  if (dimension < 2) throw std::invalid_argument("embedding case: dimension must be >= 2");
  if (!(q > 0.0) || !(r > 0.0)) throw std::invalid_argument("embedding case: q and r must be positive");
  if (!(s >= 0.0)) throw std::invalid_argument("embedding case: s must be >= 0");
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument("embedding case " + to_string(id) + ": " + what);
  };
  switch (id) {
    case EmbeddingCaseId::I_i: require(!finite(q) && !finite(r), "needs q = r = inf"); break;
    case EmbeddingCaseId::I_ii: require(finite(q) && q == r, "needs q = r < inf"); break;
    case EmbeddingCaseId::II_i:
      require(!finite(q) && finite(r), "needs q = inf > r");
      require(s > 1.0 / r, "needs s > 1/r");
      require(epsilon > 0.0, "needs eps > 0");
      break;
    case EmbeddingCaseId::II_ii:
      require(finite(q) && r < q, "needs r < q < inf");
      require(s > 1.0 / r - 1.0 / q, "needs s > 1/r - 1/q");
      require(epsilon > 0.0, "needs eps > 0");
      break;
    case EmbeddingCaseId::III_i: require(finite(q) && !finite(r), "needs q < r = inf"); break;
    case EmbeddingCaseId::III_ii: require(finite(r) && q < r, "needs q < r < inf"); break;
  }
}

double EmbeddingCase::s_prime() const {
  switch (id) {
    case EmbeddingCaseId::II_i: return s - 1.0 / r - epsilon;
    case EmbeddingCaseId::II_ii: return s - (1.0 / r - 1.0 / q) - epsilon;
    default: return s;
  }
}

double EmbeddingCase::effective_s_prime() const { return std::max(s_prime(), 0.0); }

double EmbeddingCase::alpha() const {
  if (id != EmbeddingCaseId::II_ii) throw std::logic_error("alpha is defined for case II-ii only");
  const double eps = s - (1.0 / r - 1.0 / q) - effective_s_prime();
  return 1.0 - r / q + eps * r;
}

std::string EmbeddingCase::describe() const {
  Params p;
  p.add("case", to_string(id)).add("n", dimension).add("s", s).add("q", q).add("r", r);
  if (id == EmbeddingCaseId::II_i || id == EmbeddingCaseId::II_ii) p.add("eps", epsilon).add("s'", s_prime());
  return p.str();
}

double lattice_decay_sum(double beta, int truncation) {
  if (!(beta > 1.0)) throw std::invalid_argument("lattice_decay_sum: exponent must exceed 1");
  // 1 + 2 sum_{j >= 2} j^{-beta}
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(truncation));
  for (int j = truncation + 1; j >= 2; --j) terms.push_back(std::pow(double(j), -beta));
  return 1.0 + 2.0 * pairwise_sum(terms) + 2.0 * power_tail(truncation + 1.0, beta);
}

double embedding_bound(const EmbeddingCase& c) {
  c.validate();
  switch (c.id) {
    case EmbeddingCaseId::II_i: {
      // <k> >= (<kbar> + |k_n|) / sqrt 2, hence the factor 2^{s/2}.
      const double sp = c.effective_s_prime();
      return std::pow(2.0, 0.5 * c.s) * std::pow(lattice_decay_sum((c.s - sp) * c.r, 1 << 20), 1.0 / c.r);
    }
    case EmbeddingCaseId::II_ii: {
      const double sp = c.effective_s_prime();
      const double holder = 1.0 / (1.0 - c.r / c.q);  // (q/r)'
      const double gamma = c.alpha() * holder;
      const double h = bracket_decay_sum(gamma, 1 << 20);
      const double sup = bracket_ratio_sup(c.s - sp, sp, 256);
      return std::pow(h, 1.0 / c.r - 1.0 / c.q) * sup;
    }
    default: return 1.0;
  }
}

EmbeddingOutcome check_embedding(const EmbeddingCase& c, const WeightedSequence& a) {
  return check_embedding(c, a, embedding_bound(c));
}

EmbeddingOutcome check_embedding(const EmbeddingCase& c, const WeightedSequence& a, double bound) {
  c.validate();
  if (a.dimension() != c.dimension) throw std::invalid_argument("check_embedding: dimension mismatch");
  EmbeddingOutcome out;
  out.lhs = sequence_mixed_norm(a, c.q, c.r, c.s_prime(), SequenceMode::aniso_last);
  out.rhs = sequence_mixed_norm(a, c.q, c.q, c.s, SequenceMode::iso);
  out.bound = bound;
  out.pass = out.lhs <= out.bound * out.rhs + kSlack;
  return out;
}

ReportRow embedding_row(const EmbeddingCase& c, const WeightedSequence& a, std::uint64_t seed, double bound) {
  const EmbeddingOutcome o = check_embedding(c, a, bound);
  Params p;
  p.add("case", to_string(c.id)).add("n", c.dimension).add("s", c.s).add("q", c.q).add("r", c.r);
  if (c.id == EmbeddingCaseId::II_i || c.id == EmbeddingCaseId::II_ii) p.add("eps", c.epsilon);
  p.add("seed", static_cast<long long>(seed));
  ReportRow row = make_ratio_row("embedding." + to_string(c.id), p, o.lhs, o.rhs, o.bound);
  row.pass = o.pass;
  return row;
}

WeightedSequence random_sequence(int dimension, int radius, double q, double s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-radius, radius);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> magnitude;
  WeightedSequence a(dimension);
  const auto random_point = [&] {
    LatticePoint k(static_cast<std::size_t>(dimension));
    for (int& v : k) v = coord(rng);
    return k;
  };

  switch (seed % 4) {
    case 0: {  // sparse scatter
      const int count = 1 + static_cast<int>(unit(rng) * 32);
      for (int i = 0; i < count; ++i) a.set(random_point(), magnitude(rng));
      break;
    }
    case 1: {  // mass stacked along the last axis with polynomial decay
      LatticePoint k = random_point();
      if (unit(rng) < 0.5) std::fill(k.begin(), k.end() - 1, 0);
      const double theta = unit(rng) * ((std::isinf(q) ? 0.0 : 1.0 / q) + 0.3);
      for (int kn = -radius; kn <= radius; ++kn) {
        k.back() = kn;
        a.set(k, (0.5 + 0.5 * unit(rng)) * bracket(k, -s) * std::pow(1.0 + std::abs(kn), -theta));
      }
      break;
    }
    case 2: {  // values close to <k>^{-s}, saturating sup-type right-hand sides
      const int count = 1 + static_cast<int>(unit(rng) * 200);
      for (int i = 0; i < count; ++i) {
        const LatticePoint k = random_point();
        a.set(k, (0.9 + 0.1 * unit(rng)) * bracket(k, -s));
      }
      break;
    }
    default: {  // small dense block
      const int side = 1 + static_cast<int>(unit(rng) * 5);
      const LatticePoint corner = random_point();
      LatticeBox block(dimension, (side - 1) / 2 + 1);
      for (const LatticePoint& d : block.points()) {
        LatticePoint k = corner;
        bool inside = true;
        for (int i = 0; i < dimension; ++i) {
          k[static_cast<std::size_t>(i)] += d[static_cast<std::size_t>(i)];
          inside = inside && std::abs(k[static_cast<std::size_t>(i)]) <= radius;
        }
        if (inside) a.set(k, magnitude(rng));
      }
      break;
    }
  }
  const double norm = sequence_mixed_norm(a, q, q, s, SequenceMode::iso);
  return norm > 0.0 ? a.scaled(1.0 / norm) : a;
}

}  // namespace amalgam::verify
