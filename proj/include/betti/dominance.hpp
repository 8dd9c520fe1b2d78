#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "betti/betti_table.hpp"
#include "betti/ideal.hpp"

namespace betti {

/// A dominant subset of the minimal generators, together with the least
/// witness variable for each member and the subset lcm.
struct DominantWitness {
  std::vector<int> indices;    // positions in the minimal generator list, ascending
  std::vector<int> variables;  // witness variable per position, 0-based
  Monomial lcm_monomial;

  bool operator==(const DominantWitness&) const = default;
};

/// True iff the exponent of variable var in m strictly exceeds its exponent
/// in every other element of context. Elements equal to m are not compared
/// against; a singleton context makes every variable a witness vacuously.
bool is_dominant_in(const Monomial& m, const std::vector<Monomial>& context, int var);

/// A witness if every element of L is dominant within L, choosing the least
/// witness variable for each element; otherwise absent. Witness indices are
/// positions in L.
std::optional<DominantWitness> dominant_set_witness(const std::vector<Monomial>& L);

/// All size-n subsets D of the minimal generators that are dominant sets and
/// whose lcm is strongly divided by no minimal generator; nonempty exactly
/// when the projective dimension reaches the variable count. Subsets are
/// enumerated in lexicographic index order. Rejects the zero and unit ideals.
std::vector<DominantWitness> enumerate_dominant_class(const IdealPresentation& ideal);

/// Closed-form test for projective dimension = variable count.
bool pd_is_n(const IdealPresentation& ideal);

/// Deduplicated lcms of the dominant class, deg-lex sorted: exactly the
/// multidegrees with a nonzero top Betti number, each contributing 1.
std::vector<Monomial> top_betti_multidegrees(const IdealPresentation& ideal);

long top_betti_total(const IdealPresentation& ideal);
long top_betti_graded(const IdealPresentation& ideal, std::uint64_t degree);

/// (b0, b1, b2, b3) for a proper nonzero ideal in exactly 3 variables:
/// (1, q, #L + q - 1, #L) with q the minimal generator count and #L the
/// top Betti total.
std::array<long, 4> trivariate_betti(const IdealPresentation& ideal);

/// For a squarefree ideal, the closed-form "projective dimension = n" test;
/// true exactly when the minimal generators are x1, ..., xn.
bool squarefree_pd_check(const IdealPresentation& ideal);

/// Counts the subsets A of the minimal generators whose lcm matches
/// lcm(D) exactly on the given variables and is strictly smaller on all
/// others. D must belong to the dominant class and variable_indices must be
/// nonempty, strictly ascending, 0-based. The count is provably odd.
long count_lcm_matching_subsets(const IdealPresentation& ideal,
                                const DominantWitness& D,
                                const std::vector<int>& variable_indices);

/// When the projective dimension reaches n, the Betti-number sum is at least
/// 2^n; computed against the strand oracle. A false return is a bug, not a
/// valid outcome.
bool betti_sum_bound_holds(const IdealPresentation& ideal);

/// For an Artinian ideal: if the top Betti number is 1, the minimal
/// generators must be pure powers x1^a1, ..., xn^an; returns those exponents,
/// or absent when the top Betti number exceeds 1.
std::optional<std::vector<std::uint32_t>> classify_artinian_top_betti_one(
    const IdealPresentation& ideal);

/// Consequences of a unit Betti number b_k = 1: the projective dimension
/// equals k; codim = k is the Cohen-Macaulay/Gorenstein case and forces the
/// symmetry b_i = b_{k-i}; when additionally k = n, the ideal is exactly n
/// pure powers.
struct UnitBettiReport {
  int k = 0;
  int pd = 0;
  int codimension = 0;
  bool codim_equals_k = false;
  bool betti_symmetric = false;  // asserted true whenever codim_equals_k
  std::optional<std::vector<std::uint32_t>> pure_powers;
  std::vector<long> totals;
};

UnitBettiReport unit_betti_report(const IdealPresentation& ideal, int k);

}  // namespace betti
