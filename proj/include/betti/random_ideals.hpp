#pragma once

#include <cstdint>
#include <random>

#include "betti/ideal.hpp"

namespace betti {

struct RandomIdealOptions {
  int vars = 3;
  int max_generators = 6;       // drawn before minimalization
  std::uint32_t max_exponent = 6;
  bool artinian = false;   // inject a pure power of every variable first
  bool squarefree = false;  // restrict exponents to {0, 1}
};

/// Uniform bounded draw from [0, bound) by rejection sampling on the raw
/// 64-bit stream, so that seeded streams are bit-exact across platforms
/// (distribution classes are not portable).
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound);

/// A random proper nonzero ideal, returned minimalized. Generators draw each
/// exponent uniformly from [0, max_exponent] (or {0, 1} when squarefree),
/// rejecting the zero monomial.
IdealPresentation random_ideal(std::mt19937_64& rng, const RandomIdealOptions& options);

}  // namespace betti
