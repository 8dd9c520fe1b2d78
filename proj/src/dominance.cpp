#include "betti/dominance.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "betti/taylor.hpp"

namespace betti {

bool is_dominant_in(const Monomial& m, const std::vector<Monomial>& context, int var) {
  if (std::find(context.begin(), context.end(), m) == context.end())
    throw DomainError("is_dominant_in: " + to_string(m) + " is not in the context set");
  for (const Monomial& other : context) {
    if (other == m) continue;
    if (m.exponent(var) <= other.exponent(var)) return false;
  }
  return true;
}

std::optional<DominantWitness> dominant_set_witness(const std::vector<Monomial>& L) {
  DominantWitness witness;
  if (L.empty()) return witness;
  witness.lcm_monomial = Monomial::one(L.front().vars());
  for (int i = 0; i < static_cast<int>(L.size()); ++i) {
    const Monomial& m = L[static_cast<std::size_t>(i)];
    int var = -1;
    for (int x = 0; x < m.vars() && var < 0; ++x) {
      bool dominant = true;
      for (const Monomial& other : L) {
        if (other == m) continue;
        if (m.exponent(x) <= other.exponent(x)) {
          dominant = false;
          break;
        }
      }
      if (dominant) var = x;
    }
    if (var < 0) return std::nullopt;
    witness.indices.push_back(i);
    witness.variables.push_back(var);
    witness.lcm_monomial = lcm(witness.lcm_monomial, m);
  }
  return witness;
}

namespace {

IdealPresentation require_proper(const IdealPresentation& ideal, const char* op) {
  const IdealPresentation minimal = minimal_generators(ideal);
  if (minimal.is_zero())
    throw DomainError(std::string(op) + ": the zero ideal is not in scope");
  if (minimal.contains_unit())
    throw DomainError(std::string(op) + ": the unit ideal is not in scope");
  return minimal;
}

bool lcm_strongly_divided(const IdealPresentation& minimal, const Monomial& l) {
  return std::any_of(minimal.generators().begin(), minimal.generators().end(),
                     [&](const Monomial& g) { return strongly_divides(g, l); });
}

}  // namespace

std::vector<DominantWitness> enumerate_dominant_class(const IdealPresentation& ideal) {
  const IdealPresentation minimal = require_proper(ideal, "enumerate_dominant_class");
  const int n = ideal.vars();
  const int q = static_cast<int>(minimal.generator_count());

  std::vector<DominantWitness> found;
  if (q < n) return found;

  std::vector<int> pick(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pick[static_cast<std::size_t>(i)] = i;
  std::vector<Monomial> subset;
  while (true) {
    subset.clear();
    for (int index : pick) subset.push_back(minimal.generators()[static_cast<std::size_t>(index)]);
    if (auto witness = dominant_set_witness(subset)) {
      if (!lcm_strongly_divided(minimal, witness->lcm_monomial)) {
        witness->indices = pick;
        found.push_back(std::move(*witness));
      }
    }
    // next combination in lexicographic order
    int slot = n - 1;
    while (slot >= 0 && pick[static_cast<std::size_t>(slot)] == q - n + slot) --slot;
    if (slot < 0) break;
    ++pick[static_cast<std::size_t>(slot)];
    for (int j = slot + 1; j < n; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return found;
}

bool pd_is_n(const IdealPresentation& ideal) {
  return !enumerate_dominant_class(ideal).empty();
}

std::vector<Monomial> top_betti_multidegrees(const IdealPresentation& ideal) {
  std::set<Monomial, DegLex> lcms;
  for (const DominantWitness& witness : enumerate_dominant_class(ideal))
    lcms.insert(witness.lcm_monomial);
  return {lcms.begin(), lcms.end()};
}

long top_betti_total(const IdealPresentation& ideal) {
  return static_cast<long>(top_betti_multidegrees(ideal).size());
}

long top_betti_graded(const IdealPresentation& ideal, std::uint64_t degree) {
  const auto lcms = top_betti_multidegrees(ideal);
  return static_cast<long>(std::count_if(lcms.begin(), lcms.end(), [&](const Monomial& l) {
    return l.total_degree() == degree;
  }));
}

std::array<long, 4> trivariate_betti(const IdealPresentation& ideal) {
  if (ideal.vars() != 3)
    throw DomainError("trivariate_betti: the ideal lives in " +
                      std::to_string(ideal.vars()) + " variables, not 3");
  const IdealPresentation minimal = require_proper(ideal, "trivariate_betti");
  const long q = static_cast<long>(minimal.generator_count());
  const long top = top_betti_total(ideal);
  return {1, q, top + q - 1, top};
}

bool squarefree_pd_check(const IdealPresentation& ideal) {
  if (!is_squarefree(ideal))
    throw DomainError("squarefree_pd_check: the ideal is not squarefree");
  return pd_is_n(ideal);
}

long count_lcm_matching_subsets(const IdealPresentation& ideal,
                                const DominantWitness& D,
                                const std::vector<int>& variable_indices) {
  const IdealPresentation minimal = require_proper(ideal, "count_lcm_matching_subsets");
  const int n = ideal.vars();
  const int q = static_cast<int>(minimal.generator_count());

  if (variable_indices.empty())
    throw DomainError("count_lcm_matching_subsets: the variable index set is empty");
  for (std::size_t i = 0; i < variable_indices.size(); ++i) {
    const int v = variable_indices[i];
    if (v < 0 || v >= n || (i > 0 && v <= variable_indices[i - 1]))
      throw DomainError("count_lcm_matching_subsets: variable indices must be "
                        "strictly ascending and in range");
  }

  // D must belong to the dominant class of this ideal.
  if (static_cast<int>(D.indices.size()) != n)
    throw DomainError("count_lcm_matching_subsets: the witness does not have "
                      "cardinality n");
  std::vector<Monomial> members;
  for (std::size_t i = 0; i < D.indices.size(); ++i) {
    const int index = D.indices[i];
    if (index < 0 || index >= q || (i > 0 && index <= D.indices[i - 1]))
      throw DomainError("count_lcm_matching_subsets: witness indices must be "
                        "strictly ascending positions in the minimal generators");
    members.push_back(minimal.generators()[static_cast<std::size_t>(index)]);
  }
  const auto witness = dominant_set_witness(members);
  if (!witness || witness->lcm_monomial != D.lcm_monomial ||
      lcm_strongly_divided(minimal, witness->lcm_monomial))
    throw DomainError("count_lcm_matching_subsets: the witness is not in the "
                      "dominant class of this ideal");

  // Any qualifying subset consists of divisors of lcm(D); prune to those.
  std::vector<Monomial> pool;
  for (const Monomial& g : minimal.generators())
    if (divides(g, D.lcm_monomial)) pool.push_back(g);
  if (pool.size() > kDefaultGeneratorCap)
    throw CapacityError("count_lcm_matching_subsets: divisor pool exceeds the "
                        "subset-enumeration cap");

  std::vector<bool> on_index(static_cast<std::size_t>(n), false);
  for (int v : variable_indices) on_index[static_cast<std::size_t>(v)] = true;

  long count = 0;
  const std::uint32_t full = (1u << pool.size()) - 1;
  for (std::uint32_t mask = 0;; ++mask) {
    Monomial subset_lcm = Monomial::one(n);
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      const int low = static_cast<int>(std::countr_zero(bits));
      subset_lcm = lcm(subset_lcm, pool[static_cast<std::size_t>(low)]);
    }
    bool match = true;
    for (int v = 0; v < n && match; ++v) {
      if (on_index[static_cast<std::size_t>(v)])
        match = subset_lcm.exponent(v) == D.lcm_monomial.exponent(v);
      else
        match = subset_lcm.exponent(v) < D.lcm_monomial.exponent(v);
    }
    if (match) ++count;
    if (mask == full) break;
  }
  return count;
}

bool betti_sum_bound_holds(const IdealPresentation& ideal) {
  if (!pd_is_n(ideal))
    throw DomainError("betti_sum_bound_holds: the projective dimension does "
                      "not reach the variable count");
  const long sum = betti_table_oracle(ideal).sum();
  return sum >= (1L << ideal.vars());
}

std::optional<std::vector<std::uint32_t>> classify_artinian_top_betti_one(
    const IdealPresentation& ideal) {
  if (!is_artinian(ideal))
    throw DomainError("classify_artinian_top_betti_one: the ideal is not Artinian");
  if (top_betti_total(ideal) != 1) return std::nullopt;

  const IdealPresentation minimal = minimal_generators(ideal);
  const int n = ideal.vars();
  if (static_cast<int>(minimal.generator_count()) != n)
    throw IntegrityError("classify_artinian_top_betti_one: unit top Betti "
                         "number on a non-pure-power ideal");
  std::vector<std::uint32_t> exponents(static_cast<std::size_t>(n), 0);
  for (const Monomial& g : minimal.generators()) {
    int var = -1;
    for (int x = 0; x < n; ++x)
      if (g.exponent(x) != 0) {
        if (var >= 0)
          throw IntegrityError("classify_artinian_top_betti_one: unit top "
                               "Betti number on a non-pure-power ideal");
        var = x;
      }
    exponents[static_cast<std::size_t>(var)] = g.exponent(var);
  }
  return exponents;
}

UnitBettiReport unit_betti_report(const IdealPresentation& ideal, int k) {
  const IdealPresentation minimal = require_proper(ideal, "unit_betti_report");
  if (k < 1 || k > ideal.vars())
    throw DomainError("unit_betti_report: k must lie in 1.." +
                      std::to_string(ideal.vars()));
  const BettiTable table = betti_table_oracle(ideal);
  if (table.total(k) != 1)
    throw DomainError("unit_betti_report: the Betti number in homological "
                      "degree " + std::to_string(k) + " is not 1");

  UnitBettiReport report;
  report.k = k;
  report.pd = table.pd();
  report.totals = table.totals();
  if (report.pd != k)
    throw IntegrityError("unit_betti_report: a unit Betti number must sit in "
                         "the top homological degree");
  report.codimension = codim(ideal);
  report.codim_equals_k = report.codimension == k;
  if (report.codim_equals_k) {
    for (int i = 0; i <= k; ++i)
      if (table.total(i) != table.total(k - i))
        throw IntegrityError("unit_betti_report: Betti numbers fail to be "
                             "symmetric in the codim = k case");
    report.betti_symmetric = true;
    if (k == ideal.vars())
      report.pure_powers = classify_artinian_top_betti_one(ideal);
  }
  return report;
}

}  // namespace betti
