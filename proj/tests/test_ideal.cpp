#include "betti/ideal.hpp"

#include <nlohmann/json.hpp>

#include "doctest.h"

using namespace betti;

namespace {

Monomial m(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

IdealPresentation ideal(int n, std::vector<std::vector<std::uint32_t>> rows) {
  std::vector<Monomial> gens;
  for (auto& row : rows) gens.push_back(Monomial(std::move(row)));
  return IdealPresentation(n, std::move(gens));
}

}  // namespace

TEST_CASE("presentation basics") {
  const auto I = ideal(3, {{6, 1, 0}, {5, 3, 0}});
  CHECK(I.vars() == 3);
  CHECK(I.generator_count() == 2);
  CHECK_FALSE(I.is_zero());
  CHECK_FALSE(I.contains_unit());
  CHECK(IdealPresentation(2, {}).is_zero());
  CHECK(ideal(2, {{0, 0}}).contains_unit());
  CHECK_THROWS_AS(IdealPresentation(0, {}), DimensionError);
  CHECK_THROWS_AS(ideal(3, {{1, 0}}), DimensionError);
}

TEST_CASE("minimal generators") {
  // duplicates and divisibility-redundant generators drop out
  const auto raw = ideal(3, {{3, 2, 0}, {3, 0, 0}, {0, 0, 2}, {0, 0, 2}});
  const auto minimal = minimal_generators(raw);
  CHECK(minimal == ideal(3, {{0, 0, 2}, {3, 0, 0}}));
  // canonical deg-lex order
  const auto sorted = minimal_generators(ideal(2, {{2, 0}, {2, 1}, {4, 0}, {1, 1}}));
  CHECK(sorted == ideal(2, {{1, 1}, {2, 0}}));
  // idempotence
  CHECK(minimal_generators(sorted) == sorted);
  // unit ideal collapses to {1}; zero ideal stays empty
  CHECK(minimal_generators(ideal(2, {{0, 0}, {1, 0}})) == ideal(2, {{0, 0}}));
  CHECK(minimal_generators(IdealPresentation(2, {})).is_zero());
}

TEST_CASE("squarefree and artinian predicates") {
  CHECK(is_squarefree(ideal(3, {{1, 1, 0}, {0, 1, 1}})));
  CHECK_FALSE(is_squarefree(ideal(2, {{2, 0}})));
  // redundant non-squarefree generators do not spoil squarefreeness
  CHECK(is_squarefree(ideal(2, {{1, 0}, {2, 1}})));

  CHECK(is_artinian(ideal(2, {{2, 0}, {0, 3}})));
  CHECK_FALSE(is_artinian(ideal(2, {{2, 0}, {1, 1}})));
  CHECK(is_artinian(ideal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 1}, {1, 1, 1}})));
  CHECK_FALSE(is_artinian(IdealPresentation(2, {})));
}

TEST_CASE("codimension") {
  CHECK(codim(ideal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}})) == 3);
  CHECK(codim(ideal(2, {{1, 1}})) == 1);
  CHECK(codim(ideal(2, {{2, 0}, {1, 1}})) == 1);
  CHECK(codim(ideal(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);
  CHECK_THROWS_AS(codim(IdealPresentation(2, {})), DomainError);
  CHECK_THROWS_AS(codim(ideal(2, {{0, 0}})), DomainError);
}

TEST_CASE("restriction to divisors of a multidegree") {
  const auto I = ideal(3, {{6, 1, 0}, {5, 3, 0}, {0, 4, 0}, {1, 0, 4}});
  const auto restricted = restrict_to_divisors(I, m({6, 3, 4}));
  CHECK(restricted == ideal(3, {{1, 0, 4}, {6, 1, 0}, {5, 3, 0}}));
  // the full lcm keeps everything
  CHECK(restrict_to_divisors(I, m({6, 4, 4})) == minimal_generators(I));
  CHECK(restrict_to_divisors(I, Monomial::one(3)).is_zero());
}

TEST_CASE("twin construction") {
  // reference example: top lcm a^3*b^2*c^2, twins keep only maximal exponents
  const auto M = ideal(3, {{3, 2, 0}, {3, 0, 1}, {1, 0, 2}, {0, 1, 2}});
  const auto twin = twin_ideal(M);
  CHECK(twin == ideal(3, {{3, 2, 0}, {3, 0, 0}, {0, 0, 2}, {0, 0, 2}}));
  // order, duplicates, and length preserved; output not minimalized
  CHECK(twin.generator_count() == 4);

  // pure powers are their own twin
  const auto powers = ideal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}});
  CHECK(twin_ideal(powers) == powers);

  // a generator strongly dividing the top lcm twins to 1
  const auto with_unit = twin_ideal(ideal(2, {{3, 0}, {0, 3}, {1, 1}}));
  CHECK(with_unit == ideal(2, {{3, 0}, {0, 3}, {0, 0}}));
  CHECK(with_unit.contains_unit());

  CHECK_THROWS_AS(twin_ideal(IdealPresentation(2, {})), DomainError);

  // applying the construction twice changes nothing
  CHECK(twin_ideal(twin) == twin);
}

TEST_CASE("ideal text round trip") {
  const auto I = ideal(3, {{6, 1, 0}, {5, 3, 0}, {0, 4, 0}, {1, 0, 4}});
  CHECK(to_string(I) == "x1^6*x2, x1^5*x2^3, x2^4, x1*x3^4");
  CHECK(parse_ideal_text(to_string(I)) == I);
  CHECK(to_string(IdealPresentation(3, {})) == "0");
}

TEST_CASE("ideal text parsing") {
  CHECK(parse_ideal_text("x1^2, x2") == ideal(2, {{2, 0}, {0, 1}}));
  // inferred ambient count is the largest index used
  CHECK(parse_ideal_text("x3").vars() == 3);
  // explicit override may widen but not narrow
  CHECK(parse_ideal_text("x1", 4).vars() == 4);
  CHECK_THROWS_AS(parse_ideal_text("x3", 2), ParseError);
  // zero ideal needs an explicit ambient count
  CHECK(parse_ideal_text("0", 2) == IdealPresentation(2, {}));
  CHECK(parse_ideal_text("", 2) == IdealPresentation(2, {}));
  CHECK_THROWS_AS(parse_ideal_text("0"), ParseError);
  // the identity is a valid generator (unit ideal)
  CHECK(parse_ideal_text("1, x1^2") == ideal(1, {{0}, {2}}));
}

TEST_CASE("letter aliases map alphabetically onto x1..xk") {
  const auto M = parse_ideal_text("a^3*b^2, a^3*c, a*c^2, b*c^2");
  CHECK(M == ideal(3, {{3, 2, 0}, {3, 0, 1}, {1, 0, 2}, {0, 1, 2}}));
  // alphabetical, not first-appearance, order
  CHECK(parse_ideal_text("c, a") == ideal(2, {{0, 1}, {1, 0}}));
  // aliases and canonical names cannot mix
  CHECK_THROWS_AS(parse_ideal_text("a, x1"), ParseError);
  // letters beyond one character are not variables
  CHECK_THROWS_AS(parse_ideal_text("ab"), ParseError);
}

TEST_CASE("ideal json round trip") {
  const auto I = ideal(3, {{6, 1, 0}, {5, 3, 0}, {0, 4, 0}, {1, 0, 4}});
  const nlohmann::json j = ideal_to_json(I);
  CHECK(j["n"] == 3);
  CHECK(j["generators"].size() == 4);
  CHECK(ideal_from_json(j) == I);
  CHECK(ideal_from_json(nlohmann::json::parse(R"({"n":2,"generators":[]})")) ==
        IdealPresentation(2, {}));
  CHECK_THROWS_AS(ideal_from_json(nlohmann::json::parse(R"({"n":0,"generators":[]})")),
                  ParseError);
  CHECK_THROWS_AS(ideal_from_json(nlohmann::json::parse(R"({"n":2,"generators":[[1]]})")),
                  ParseError);
}
