#include "amalgam/sequence.hpp"

#include <cmath>
#include <stdexcept>

#include "amalgam/norms.hpp"
#include "amalgam/summation.hpp"

namespace amalgam {

WeightedSequence::WeightedSequence(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw std::invalid_argument("WeightedSequence: dimension must be positive");
}

void WeightedSequence::set(std::span<const int> k, double value) {
  if (static_cast<int>(k.size()) != dimension_)
    throw std::invalid_argument("WeightedSequence: index dimension mismatch");
  if (!(value >= 0.0) || !std::isfinite(value))
    throw std::invalid_argument("WeightedSequence: values must be finite and nonnegative");
  LatticePoint key(k.begin(), k.end());
  if (value == 0.0)
    entries_.erase(key);
  else
    entries_[std::move(key)] = value;
}

double WeightedSequence::get(std::span<const int> k) const {
  auto it = entries_.find(LatticePoint(k.begin(), k.end()));
  return it == entries_.end() ? 0.0 : it->second;
}

WeightedSequence WeightedSequence::scaled(double factor) const {
  WeightedSequence out(dimension_);
  for (const auto& [k, v] : entries_) out.set(k, v * factor);
  return out;
}

double sequence_mixed_norm(const WeightedSequence& a, double q, double r, double s, SequenceMode mode) {
  require_exponent(q, "sequence_mixed_norm: q");
  if (mode == SequenceMode::iso) {
    LqAccumulator acc(q);
    for (const auto& [k, v] : a.entries()) acc.add(bracket(k, s) * v);
    return acc.value();
  }
  require_exponent(r, "sequence_mixed_norm: r");
  if (a.dimension() < 2) throw std::invalid_argument("sequence_mixed_norm: aniso mode needs dimension >= 2");
  std::map<int, LqAccumulator> inner;
  for (const auto& [k, v] : a.entries()) {
    const std::span<const int> kbar(k.data(), k.size() - 1);
    inner.try_emplace(k.back(), q).first->second.add(bracket(kbar, s) * v);
  }
  LqAccumulator outer(r);
  for (const auto& [kn, acc] : inner) outer.add(acc.value());
  return outer.value();
}

}  // namespace amalgam
