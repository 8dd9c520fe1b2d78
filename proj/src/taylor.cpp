#include "betti/taylor.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace betti {

ChainComplex taylor_complex(int vars, const std::vector<Monomial>& gens,
                            std::size_t cap) {
  if (gens.empty()) throw DomainError("taylor_complex: the generator list is empty");
  if (gens.size() > cap)
    throw CapacityError("taylor_complex: " + std::to_string(gens.size()) +
                        " generators exceed the cap of " + std::to_string(cap));
  for (const Monomial& g : gens)
    if (g.vars() != vars)
      throw DimensionError("taylor_complex: generator " + to_string(g) +
                           " does not live in " + std::to_string(vars) + " variables");

  const int q = static_cast<int>(gens.size());
  const std::uint32_t full = (q == 32) ? 0xffffffffu : ((1u << q) - 1);

  ChainComplex complex;
  complex.vars = vars;
  complex.generators = gens;
  complex.basis.resize(static_cast<std::size_t>(q) + 1);
  complex.diff.resize(static_cast<std::size_t>(q) + 1);

  complex.mdeg.emplace(0, Monomial::one(vars));
  complex.basis[0].push_back(0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int low = std::countr_zero(mask);
    const Monomial& rest = complex.mdeg.at(mask & (mask - 1));
    complex.mdeg.emplace(mask, lcm(rest, gens[static_cast<std::size_t>(low)]));
    complex.basis[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  }

  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int s = std::popcount(mask);
    const Monomial& whole = complex.mdeg.at(mask);
    int j = 0;  // 1-based rank of the deleted member
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      ++j;
      const std::uint32_t target = mask & ~(bits & ~(bits - 1));
      Term term;
      term.coeff = (j % 2 == 1) ? 1 : -1;
      term.mono = quotient(whole, complex.mdeg.at(target));
      complex.diff[static_cast<std::size_t>(s)].emplace(std::make_pair(mask, target),
                                                       std::move(term));
    }
  }
  return complex;
}

namespace {

bool in_basis(const std::vector<std::uint32_t>& basis, std::uint32_t mask) {
  return std::binary_search(basis.begin(), basis.end(), mask);
}

}  // namespace

void check_integrity(const ChainComplex& complex) {
  const int top = complex.max_hdeg();
  if (static_cast<int>(complex.diff.size()) != top + 1)
    throw IntegrityError("check_integrity: basis/differential size mismatch");

  for (int i = 0; i <= top; ++i) {
    const auto& basis = complex.basis[static_cast<std::size_t>(i)];
    if (!std::is_sorted(basis.begin(), basis.end()) ||
        std::adjacent_find(basis.begin(), basis.end()) != basis.end())
      throw IntegrityError("check_integrity: basis not strictly ascending");
    for (std::uint32_t mask : basis) {
      if (std::popcount(mask) != i)
        throw IntegrityError("check_integrity: symbol in the wrong homological degree");
      Monomial expected = Monomial::one(complex.vars);
      for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1)
        expected = lcm(expected,
                       complex.generators[static_cast<std::size_t>(std::countr_zero(bits))]);
      if (complex.mdeg.at(mask) != expected)
        throw IntegrityError("check_integrity: cached multidegree is not the member lcm");
    }
  }

  for (int i = 1; i <= top; ++i) {
    for (const auto& [key, term] : complex.diff[static_cast<std::size_t>(i)]) {
      const auto [source, target] = key;
      if (!in_basis(complex.basis[static_cast<std::size_t>(i)], source) ||
          !in_basis(complex.basis[static_cast<std::size_t>(i - 1)], target))
        throw IntegrityError("check_integrity: entry endpoint outside the basis");
      if (term.coeff == 0)
        throw IntegrityError("check_integrity: stored zero coefficient");
      if (complex.mdeg.at(target) * term.mono != complex.mdeg.at(source))
        throw IntegrityError("check_integrity: inhomogeneous entry");
    }
  }

  for (int i = 2; i <= top; ++i) {
    const auto& upper = complex.diff[static_cast<std::size_t>(i)];
    const auto& lower = complex.diff[static_cast<std::size_t>(i - 1)];
    std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> composite;
    for (const auto& [key, term] : upper) {
      const auto [source, mid] = key;
      for (auto it = lower.lower_bound({mid, 0});
           it != lower.end() && it->first.first == mid; ++it)
        composite[{source, it->first.second}] += term.coeff * it->second.coeff;
    }
    for (const auto& [key, value] : composite)
      if (value != 0) throw IntegrityError("check_integrity: d∘d is nonzero");
  }
}

std::vector<long> strand_betti(const ChainComplex& complex, const Monomial& l,
                               std::int64_t prime) {
  const int top = complex.max_hdeg();
  std::vector<std::vector<std::uint32_t>> strand(static_cast<std::size_t>(top) + 1);
  std::vector<std::map<std::uint32_t, std::size_t>> position(static_cast<std::size_t>(top) + 1);
  for (int i = 0; i <= top; ++i)
    for (std::uint32_t mask : complex.basis[static_cast<std::size_t>(i)])
      if (complex.mdeg.at(mask) == l) {
        position[static_cast<std::size_t>(i)].emplace(mask, strand[static_cast<std::size_t>(i)].size());
        strand[static_cast<std::size_t>(i)].push_back(mask);
      }

  // rank[i] is the rank of d_i restricted to the strand; d_0 = 0.
  std::vector<long> rank(static_cast<std::size_t>(top) + 2, 0);
  for (int i = 1; i <= top; ++i) {
    const auto& sources = strand[static_cast<std::size_t>(i)];
    const auto& targets = strand[static_cast<std::size_t>(i - 1)];
    if (sources.empty() || targets.empty()) continue;
    std::vector<std::vector<Rational>> matrix(
        targets.size(), std::vector<Rational>(sources.size(), Rational(0)));
    bool any = false;
    for (const auto& [key, term] : complex.diff[static_cast<std::size_t>(i)]) {
      if (!term.mono.is_one()) continue;
      const auto [source, target] = key;
      const auto src = position[static_cast<std::size_t>(i)].find(source);
      if (src == position[static_cast<std::size_t>(i)].end()) continue;
      // Homogeneity puts the target in the same strand.
      matrix[position[static_cast<std::size_t>(i - 1)].at(target)][src->second] = term.coeff;
      any = true;
    }
    if (!any) continue;
    rank[static_cast<std::size_t>(i)] =
        prime == 0 ? rank_over_rationals(matrix) : rank_mod_p(matrix, prime);
  }

  std::vector<long> betti(static_cast<std::size_t>(top) + 1, 0);
  for (int i = 0; i <= top; ++i) {
    const long value = static_cast<long>(strand[static_cast<std::size_t>(i)].size()) -
                       rank[static_cast<std::size_t>(i)] - rank[static_cast<std::size_t>(i) + 1];
    if (value < 0) throw IntegrityError("strand_betti: negative homology rank");
    betti[static_cast<std::size_t>(i)] = value;
  }
  return betti;
}

std::vector<Monomial> lcm_lattice(const ChainComplex& complex) {
  std::set<Monomial, DegLex> seen;
  for (const auto& [mask, m] : complex.mdeg) seen.insert(m);
  return {seen.begin(), seen.end()};
}

BettiTable betti_table_oracle(const IdealPresentation& ideal, std::int64_t prime,
                              std::size_t cap) {
  BettiTable table;
  if (ideal.is_zero()) {
    table.add(0, Monomial::one(ideal.vars()));
    return table;
  }
  const IdealPresentation minimal = minimal_generators(ideal);
  if (minimal.contains_unit())
    throw DomainError("betti_table_oracle: the unit ideal has no resolution to measure");

  const ChainComplex complex = taylor_complex(ideal.vars(), minimal.generators(), cap);
  for (const Monomial& l : lcm_lattice(complex)) {
    const std::vector<long> betti = strand_betti(complex, l, prime);
    for (int i = 0; i <= complex.max_hdeg(); ++i)
      table.add(i, l, betti[static_cast<std::size_t>(i)]);
  }
  return table;
}

std::vector<long> multidegree_betti(const IdealPresentation& presentation,
                                    const Monomial& m, std::int64_t prime,
                                    std::size_t cap) {
  if (presentation.is_zero())
    throw DomainError("multidegree_betti: the generator list is empty");
  const ChainComplex complex =
      taylor_complex(presentation.vars(), presentation.generators(), cap);
  return strand_betti(complex, m, prime);
}

}  // namespace betti
