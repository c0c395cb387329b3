#pragma once

#include <random>
#include <string>

#include "liecontact/lie_algebra.hpp"

namespace lt {

using namespace liecontact;

inline std::size_t idx(const LieAlgebra& g, const std::string& name) {
  const auto& names = g.basis_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw std::runtime_error("no basis element named " + name);
}

inline Vec unit(const LieAlgebra& g, const std::string& name) {
  Vec v = zero_vec(g.dim());
  v[idx(g, name)] = 1;
  return v;
}

/// Seeded rational sampler with numerator in [-hi, hi] and denominator
/// in [1, hi].
struct RationalSampler {
  std::mt19937 rng;
  long hi;
  explicit RationalSampler(unsigned seed, long hi_ = 5) : rng(seed), hi(hi_) {}
  Rational operator()() {
    std::uniform_int_distribution<long> num(-hi, hi);
    std::uniform_int_distribution<long> den(1, hi);
    return Rational(num(rng), den(rng));
  }
  Rational nonzero() {
    Rational r;
    do { r = (*this)(); } while (r == 0);
    return r;
  }
};

}  // namespace lt
