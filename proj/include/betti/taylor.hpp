#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "betti/betti_table.hpp"
#include "betti/exact.hpp"
#include "betti/ideal.hpp"

namespace betti {

inline constexpr std::size_t kDefaultGeneratorCap = 20;

/// A single differential entry c * m between two basis symbols.
struct Term {
  Rational coeff;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

/// A complex of free modules whose basis symbols are subsets of a generator
/// list, encoded as bitmasks. diff[i] holds the entries of d_i: F_i -> F_{i-1},
/// keyed (source mask, target mask); absent keys are zero entries.
struct ChainComplex {
  int vars = 0;
  std::vector<Monomial> generators;
  std::vector<std::vector<std::uint32_t>> basis;  // per hdeg, masks ascending
  std::map<std::uint32_t, Monomial> mdeg;         // mask -> lcm of its members
  std::vector<std::map<std::pair<std::uint32_t, std::uint32_t>, Term>> diff;

  int max_hdeg() const { return static_cast<int>(basis.size()) - 1; }
};

/// The full 2^q-symbol complex on the given list, which need not be minimal
/// and may contain duplicates or 1. Sign convention: deleting the j-th listed
/// member of a symbol contributes (-1)^{j+1}, so deleting the lowest-indexed
/// member always has sign +1.
ChainComplex taylor_complex(int vars, const std::vector<Monomial>& gens,
                            std::size_t cap = kDefaultGeneratorCap);

/// Throws IntegrityError unless the bases are sorted and consistent, every
/// entry is homogeneous (mdeg(target) * mono = mdeg(source)) with a nonzero
/// coefficient, and d∘d = 0.
void check_integrity(const ChainComplex& complex);

/// Betti numbers of the multidegree-l strand, indices 0..max_hdeg. The strand
/// keeps the basis symbols of multidegree exactly l and the entries whose
/// monomial part is 1; homology ranks are computed over Q (prime == 0) or
/// over GF(prime).
std::vector<long> strand_betti(const ChainComplex& complex, const Monomial& l,
                               std::int64_t prime = 0);

/// The distinct multidegrees of the complex's symbols, in deg-lex order.
/// On a freshly built complex this is the subset-lcm lattice, including 1.
std::vector<Monomial> lcm_lattice(const ChainComplex& complex);

/// Brute-force multigraded Betti table of S/M: strand homology at every
/// multidegree of the subset-lcm lattice of the minimal generators. The zero
/// ideal yields {(0, 1) -> 1}; the unit ideal is rejected.
BettiTable betti_table_oracle(const IdealPresentation& ideal,
                              std::int64_t prime = 0,
                              std::size_t cap = kDefaultGeneratorCap);

/// Betti numbers beta_{i,m} of S/M at the single multidegree m, computed on
/// the presentation AS GIVEN: no minimalization, duplicates and 1 among the
/// generators honored. Twin-ideal comparisons depend on exactly this.
std::vector<long> multidegree_betti(const IdealPresentation& presentation,
                                    const Monomial& m, std::int64_t prime = 0,
                                    std::size_t cap = kDefaultGeneratorCap);

}  // namespace betti
