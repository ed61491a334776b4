#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "brim/polynomial.hpp"

namespace brim {

/// Source of "general" coefficients. Each (trial, salt) pair gets its own
/// stream, so trials are reproducible and independent of evaluation order.
struct GeneralElementSampler {
  std::uint64_t seed = 0;
  long bound = 997;
  int trials = 3;

  std::mt19937_64 stream(std::uint64_t trial, std::uint64_t salt = 0) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(salt),
                      static_cast<std::uint32_t>(salt >> 32)};
    return std::mt19937_64(seq);
  }
};

/// Uniform in [1, bound].
inline long draw(std::mt19937_64& rng, long bound) { return std::uniform_int_distribution<long>(1, bound)(rng); }

template <class K>
Polynomial<K> random_combination(const std::vector<Polynomial<K>>& gens, std::mt19937_64& rng, long bound) {
  Polynomial<K> f = gens.at(0).mul_term(K(draw(rng, bound)), Monomial{});
  for (std::size_t i = 1; i < gens.size(); ++i) f += gens[i].mul_term(K(draw(rng, bound)), Monomial{});
  return f;
}

}  // namespace brim
