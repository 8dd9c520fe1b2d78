#include "betti/verify.hpp"

#include <algorithm>
#include <sstream>

#include "betti/cancellation.hpp"
#include "betti/dominance.hpp"
#include "betti/taylor.hpp"

namespace betti {

namespace {

bool is_pure_power(const Monomial& g) {
  int support = 0;
  for (int x = 0; x < g.vars(); ++x)
    if (g.exponent(x) != 0) ++support;
  return support == 1;
}

bool is_pure_power_ideal(const IdealPresentation& minimal) {
  if (static_cast<int>(minimal.generator_count()) != minimal.vars()) return false;
  return std::all_of(minimal.generators().begin(), minimal.generators().end(),
                     is_pure_power);
}

std::string totals_text(const std::vector<long>& totals) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < totals.size(); ++i)
    out << (i ? ", " : "") << totals[i];
  out << ")";
  return out.str();
}

}  // namespace

void verify_one_ideal(const IdealPresentation& ideal, const VerifyOptions& options,
                      std::vector<std::string>& failures) {
  const IdealPresentation minimal = minimal_generators(ideal);
  const int n = ideal.vars();
  const std::string where = to_string(minimal) + " (n = " + std::to_string(n) + ")";
  auto fail = [&](const char* tag, const std::string& detail) {
    failures.push_back(std::string("[") + tag + "] " + where + ": " + detail);
  };

  const BettiTable oracle = betti_table_oracle(ideal);

  // Cancellation engine agreement, under every pivot order when requested.
  {
    const ChainComplex taylor = taylor_complex(n, minimal.generators());
    const BettiTable cancelled =
        betti_from_minimal(minimalize(taylor, PivotOrder::TopDown).complex);
    if (cancelled != oracle)
      fail("cancel-table", "cancellation totals " + totals_text(cancelled.totals()) +
                               " differ from oracle " + totals_text(oracle.totals()));
    if (options.check_pivot_orders) {
      for (PivotOrder order : {PivotOrder::BottomUp, PivotOrder::TopDownReversed}) {
        const BettiTable other = betti_from_minimal(minimalize(taylor, order).complex);
        if (other != cancelled)
          fail("pivot-order", "pivot order changes the Betti table");
      }
    }
  }

  // Closed-form top Betti numbers against the oracle's top row.
  {
    const std::vector<Monomial> tops = top_betti_multidegrees(ideal);
    std::vector<Monomial> oracle_tops;
    const auto row = oracle.entries().find(n);
    if (row != oracle.entries().end())
      for (const auto& [mdeg, count] : row->second) {
        oracle_tops.push_back(mdeg);
        if (count != 1)
          fail("top-pattern", "top multidegree " + to_string(mdeg) +
                                  " has count " + std::to_string(count));
      }
    if (tops != oracle_tops)
      fail("top-multidegree", "closed form lists " + std::to_string(tops.size()) +
                                  " top multidegrees, oracle has " +
                                  std::to_string(oracle_tops.size()));
    if (top_betti_total(ideal) != oracle.total(n))
      fail("top-total", "closed form " + std::to_string(top_betti_total(ideal)) +
                            " vs oracle " + std::to_string(oracle.total(n)));
    for (const Monomial& l : tops) {
      if (top_betti_graded(ideal, l.total_degree()) !=
          oracle.graded(n, l.total_degree()))
        fail("top-graded", "degree " + std::to_string(l.total_degree()));
      for (int i = 0; i < n; ++i)
        if (oracle.multigraded(i, l) != 0)
          fail("top-pattern", "multidegree " + to_string(l) +
                                  " also appears in homological degree " +
                                  std::to_string(i));
    }
  }

  if (pd_is_n(ideal) != (oracle.pd() == n))
    fail("pd-predicate", "closed form says " +
                             std::string(pd_is_n(ideal) ? "pd = n" : "pd < n") +
                             ", oracle pd = " + std::to_string(oracle.pd()));

  {
    long alternating = 0;
    const std::vector<long> totals = oracle.totals();
    for (std::size_t i = 0; i < totals.size(); ++i)
      alternating += (i % 2 == 0) ? totals[i] : -totals[i];
    if (alternating != 0)
      fail("euler", "alternating Betti sum is " + std::to_string(alternating));
  }

  if (oracle.pd() == n && oracle.sum() < (1L << n))
    fail("sum-bound", "Betti sum " + std::to_string(oracle.sum()) +
                          " is below 2^n = " + std::to_string(1L << n));

  {
    std::vector<DominantWitness> witnesses = enumerate_dominant_class(ideal);
    if (static_cast<int>(witnesses.size()) > options.max_witnesses)
      witnesses.resize(static_cast<std::size_t>(options.max_witnesses));
    for (const DominantWitness& witness : witnesses) {
      for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
        std::vector<int> indices;
        for (int v = 0; v < n; ++v)
          if (bits & (1u << v)) indices.push_back(v);
        const long count = count_lcm_matching_subsets(ideal, witness, indices);
        if (count % 2 == 0)
          fail("parity", "even subset count " + std::to_string(count) +
                             " at lcm " + to_string(witness.lcm_monomial));
      }
    }
  }

  {
    Monomial m = Monomial::one(n);
    for (const Monomial& g : minimal.generators()) m = lcm(m, g);
    const std::vector<long> original = multidegree_betti(minimal, m);
    const std::vector<long> twin = multidegree_betti(twin_ideal(minimal), m);
    if (original != twin)
      fail("twin", "multidegree Betti numbers at " + to_string(m) +
                       " differ between the ideal and its twin");
  }

  if (is_artinian(ideal)) {
    const auto classified = classify_artinian_top_betti_one(ideal);
    const long top = oracle.total(n);
    if (top == 1) {
      if (!classified || !is_pure_power_ideal(minimal))
        fail("artinian", "unit top Betti number without a pure-power classification");
    } else {
      if (classified)
        fail("artinian", "classification produced for top Betti " + std::to_string(top));
      if (is_pure_power_ideal(minimal))
        fail("artinian", "pure powers with top Betti " + std::to_string(top));
    }
  }

  if (is_squarefree(ideal)) {
    const bool full_pd = oracle.pd() == n;
    const bool is_variables =
        is_pure_power_ideal(minimal) &&
        std::all_of(minimal.generators().begin(), minimal.generators().end(),
                    [](const Monomial& g) { return g.total_degree() == 1; });
    if (squarefree_pd_check(ideal) != full_pd)
      fail("squarefree", "closed form disagrees with the oracle");
    if (full_pd != is_variables)
      fail("squarefree", "full projective dimension must single out (x1, ..., xn)");
  }

  if (options.prime > 0) {
    const BettiTable modular = betti_table_oracle(ideal, options.prime);
    if (modular != oracle)
      fail("field", "tables over Q and GF(" + std::to_string(options.prime) +
                        ") differ");
  }
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  std::mt19937_64 rng(options.seed);
  for (int i = 0; i < options.count; ++i) {
    const IdealPresentation ideal = random_ideal(rng, options.ideal);
    verify_one_ideal(ideal, options, report.failures);
    ++report.checked;
  }
  return report;
}

}  // namespace betti
