#include "betti/betti_table.hpp"

#include <nlohmann/json.hpp>

#include "doctest.h"

using namespace betti;

TEST_CASE("table accumulates and aggregates") {
  BettiTable t;
  CHECK(t.pd() == 0);
  CHECK(t.totals() == std::vector<long>{0});

  t.add(0, Monomial::one(2));
  t.add(1, Monomial({2, 0}));
  t.add(1, Monomial({1, 1}));
  t.add(2, Monomial({2, 1}));
  t.add(2, Monomial({2, 1}));  // same slot twice
  t.add(2, Monomial({2, 2}), 0);  // zero contribution is dropped

  CHECK(t.pd() == 2);
  CHECK(t.totals() == std::vector<long>{1, 2, 2});
  CHECK(t.sum() == 5);
  CHECK(t.multigraded(1, Monomial({1, 1})) == 1);
  CHECK(t.multigraded(2, Monomial({2, 1})) == 2);
  CHECK(t.multigraded(2, Monomial({2, 2})) == 0);
  CHECK(t.graded(1, 2) == 2);
  CHECK(t.graded(2, 3) == 2);
  CHECK(t.graded(2, 4) == 0);
  CHECK(t.total(7) == 0);
  CHECK_THROWS_AS(t.add(1, Monomial({1, 0}), -2), DomainError);
}

TEST_CASE("table serializes with graded and multigraded views") {
  BettiTable t;
  t.add(0, Monomial::one(2));
  t.add(1, Monomial({2, 0}));
  t.add(1, Monomial({1, 1}));
  t.add(2, Monomial({2, 1}));

  const nlohmann::json j = t.to_json();
  CHECK(j["pd"] == 2);
  CHECK(j["total"] == nlohmann::json::array({1, 2, 1}));
  CHECK(j["graded"]["0,0"] == 1);
  CHECK(j["graded"]["1,2"] == 2);
  CHECK(j["graded"]["2,3"] == 1);
  CHECK(j["multigraded"]["0"]["1"] == 1);
  CHECK(j["multigraded"]["1"]["x1^2"] == 1);
  CHECK(j["multigraded"]["1"]["x1*x2"] == 1);
  CHECK(j["multigraded"]["2"]["x1^2*x2"] == 1);
}
