#include "betti/random_ideals.hpp"

#include <limits>

namespace betti {

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw DomainError("bounded_draw: bound must be positive");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t value;
  do {
    value = rng();
  } while (value >= limit);
  return value % bound;
}

IdealPresentation random_ideal(std::mt19937_64& rng, const RandomIdealOptions& options) {
  if (options.vars < 1)
    throw DomainError("random_ideal: the variable count must be positive");
  if (options.max_generators < 1)
    throw DomainError("random_ideal: the generator bound must be positive");
  const std::uint32_t top = options.squarefree ? 1 : options.max_exponent;
  if (top < 1) throw DomainError("random_ideal: the exponent bound must be positive");

  const int n = options.vars;
  std::vector<Monomial> gens;

  if (options.artinian)
    for (int x = 0; x < n; ++x)
      gens.push_back(Monomial::variable(
          n, x, static_cast<std::uint32_t>(1 + bounded_draw(rng, top))));

  const int extra = 1 + static_cast<int>(bounded_draw(
                            rng, static_cast<std::uint64_t>(options.max_generators)));
  for (int g = 0; g < extra; ++g) {
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(n));
    bool zero = true;
    do {
      zero = true;
      for (int x = 0; x < n; ++x) {
        exps[static_cast<std::size_t>(x)] =
            static_cast<std::uint32_t>(bounded_draw(rng, top + 1ull));
        if (exps[static_cast<std::size_t>(x)] != 0) zero = false;
      }
    } while (zero);
    gens.emplace_back(exps);
  }

  return minimal_generators(IdealPresentation(n, std::move(gens)));
}

}  // namespace betti
