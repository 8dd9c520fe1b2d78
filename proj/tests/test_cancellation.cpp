#include "betti/cancellation.hpp"

#include <bit>

#include <nlohmann/json.hpp>

#include "betti/random_ideals.hpp"
#include "doctest.h"

using namespace betti;

namespace {

Monomial m(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

IdealPresentation ideal(int n, std::vector<std::vector<std::uint32_t>> rows) {
  std::vector<Monomial> gens;
  for (auto& row : rows) gens.push_back(Monomial(std::move(row)));
  return IdealPresentation(n, std::move(gens));
}

const IdealPresentation reference =
    ideal(3, {{0, 4, 0}, {1, 0, 4}, {6, 1, 0}, {5, 3, 0}});

long symbol_count(const ChainComplex& C) {
  long total = 0;
  for (const auto& level : C.basis) total += static_cast<long>(level.size());
  return total;
}

}  // namespace

TEST_CASE("a redundant generator cancels in exactly one step") {
  // the list (x, xy) is non-minimal: [x,xy] -> [xy] carries coefficient 1
  auto result = minimalize(taylor_complex(2, {m({1, 0}), m({1, 1})}));
  REQUIRE(result.steps.size() == 1);
  const CancellationStep& step = result.steps.front();
  CHECK(step.hdeg == 2);
  CHECK(step.theta_mask == 3u);
  CHECK(step.pi_mask == 2u);
  CHECK(step.pivot_coefficient == Rational(1));

  const BettiTable table = betti_from_minimal(result.complex);
  CHECK(table.totals() == std::vector<long>{1, 1});
  CHECK(table.multigraded(1, m({1, 0})) == 1);
}

TEST_CASE("an already-minimal complex needs no steps") {
  auto result = minimalize(taylor_complex(2, {m({2, 0}), m({1, 1})}));
  CHECK(result.steps.empty());
  CHECK(betti_from_minimal(result.complex).totals() ==
        std::vector<long>{1, 2, 1});
}

TEST_CASE("cancellation matches the strand oracle on the reference ideal") {
  auto result = minimalize(taylor_complex(3, reference.generators()),
                           PivotOrder::TopDown, true);
  const BettiTable table = betti_from_minimal(result.complex);
  CHECK(table.totals() == std::vector<long>{1, 4, 5, 2});
  CHECK(table == betti_table_oracle(reference));
  // 16 Taylor symbols shrink to 12 basis elements: two steps
  CHECK(result.steps.size() == 2);
  CHECK(symbol_count(result.complex) == 12);
}

TEST_CASE("every step pairs adjacent symbols of equal multidegree") {
  const auto C = taylor_complex(3, reference.generators());
  const auto result = minimalize(C);
  for (const CancellationStep& step : result.steps) {
    CHECK(std::popcount(step.theta_mask) == step.hdeg);
    CHECK(std::popcount(step.pi_mask) == step.hdeg - 1);
    CHECK(C.mdeg.at(step.theta_mask) == C.mdeg.at(step.pi_mask));
    CHECK(step.pivot_coefficient != Rational(0));
  }
}

TEST_CASE("pivot orders disagree on steps but agree on the result") {
  std::mt19937_64 rng(2026);
  RandomIdealOptions options;
  options.vars = 3;
  options.max_generators = 5;
  options.max_exponent = 4;
  for (int trial = 0; trial < 25; ++trial) {
    const IdealPresentation I = random_ideal(rng, options);
    const auto C = taylor_complex(3, I.generators());
    const BettiTable a = betti_from_minimal(minimalize(C).complex);
    const BettiTable b =
        betti_from_minimal(minimalize(C, PivotOrder::BottomUp).complex);
    const BettiTable c =
        betti_from_minimal(minimalize(C, PivotOrder::TopDownReversed).complex);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a == betti_table_oracle(I));
  }
}

TEST_CASE("a unit generator collapses the whole complex") {
  // resolving S/(1): the quotient is zero, so every symbol cancels
  auto result =
      minimalize(taylor_complex(2, {m({3, 0}), m({0, 3}), m({0, 0})}));
  CHECK(symbol_count(result.complex) == 0);
  CHECK(result.steps.size() == 4);
  CHECK(betti_from_minimal(result.complex).sum() == 0);
}

TEST_CASE("betti_from_minimal rejects reducible complexes") {
  const auto C = taylor_complex(2, {m({1, 0}), m({1, 1})});
  CHECK_THROWS_AS(betti_from_minimal(C), DomainError);
}

TEST_CASE("step log serializes with exact coefficients") {
  const auto result = minimalize(taylor_complex(2, {m({1, 0}), m({1, 1})}));
  const nlohmann::json log = steps_to_json(result.steps);
  REQUIRE(log.is_array());
  REQUIRE(log.size() == 1);
  CHECK(log[0]["hdeg"] == 2);
  CHECK(log[0]["theta_mask"] == 3);
  CHECK(log[0]["pi_mask"] == 2);
  CHECK(log[0]["pivot_coefficient"] == "1");
}
