#include "betti/monomial.hpp"

#include <vector>

#include "doctest.h"

using namespace betti;

namespace {

Monomial m(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("constructors and accessors") {
  Monomial a = m({6, 1, 0});
  CHECK(a.vars() == 3);
  CHECK(a.exponent(0) == 6);
  CHECK(a.exponent(2) == 0);
  CHECK(a.total_degree() == 7);
  CHECK_FALSE(a.is_one());
  CHECK_FALSE(a.is_squarefree());

  CHECK(Monomial::one(4) == m({0, 0, 0, 0}));
  CHECK(Monomial::one(2).is_one());
  CHECK(Monomial::variable(3, 1) == m({0, 1, 0}));
  CHECK(Monomial::variable(3, 2, 5) == m({0, 0, 5}));
  CHECK(m({1, 0, 1}).is_squarefree());
  CHECK(Monomial::one(3).is_squarefree());
}

TEST_CASE("total degree does not overflow 32-bit exponents") {
  Monomial big = m({4000000000u, 4000000000u});
  CHECK(big.total_degree() == 8000000000ull);
}

TEST_CASE("deg-lex order") {
  // degree first
  CHECK(deg_lex_less(m({1, 1}), m({3, 0})));
  // then lexicographic on exponent vectors
  CHECK(deg_lex_less(m({2, 1}), m({3, 0})));
  CHECK_FALSE(deg_lex_less(m({3, 0}), m({2, 1})));
  CHECK_FALSE(deg_lex_less(m({2, 1}), m({2, 1})));

  std::vector<Monomial> v = {m({0, 4}), m({1, 1}), m({2, 0})};
  std::sort(v.begin(), v.end(), DegLex{});
  CHECK(v == std::vector<Monomial>{m({1, 1}), m({2, 0}), m({0, 4})});
}

TEST_CASE("lcm, divides, product, quotient") {
  Monomial a = m({6, 1, 0});
  Monomial b = m({5, 3, 0});
  CHECK(lcm(a, b) == m({6, 3, 0}));
  CHECK(divides(m({5, 1, 0}), a));
  CHECK_FALSE(divides(a, b));
  CHECK(a * b == m({11, 4, 0}));
  CHECK(quotient(m({6, 3, 0}), b) == m({1, 0, 0}));
  CHECK_THROWS_AS(quotient(b, a), DomainError);
  CHECK_THROWS_AS(lcm(a, m({1, 2})), DimensionError);
  CHECK_THROWS_AS((void)divides(a, m({1, 2})), DimensionError);
}

TEST_CASE("strong divisibility") {
  // strict inequality required on every support coordinate
  CHECK(strongly_divides(m({5, 3, 0}), m({6, 4, 4})));
  CHECK_FALSE(strongly_divides(m({5, 4, 0}), m({6, 4, 4})));
  // zero exponents impose nothing, so 1 strongly divides everything
  CHECK(strongly_divides(m({0, 0, 0}), m({0, 0, 0})));
  CHECK(strongly_divides(m({0, 3, 0}), m({0, 4, 0})));
  // strong divisibility implies divisibility
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t j = 0; j < 3; ++j)
      for (std::uint32_t k = 0; k < 3; ++k)
        for (std::uint32_t l = 0; l < 3; ++l) {
          Monomial p = m({i, j}), q = m({k, l});
          if (strongly_divides(p, q)) CHECK(divides(p, q));
        }
}

TEST_CASE("canonical text form") {
  CHECK(to_string(m({6, 3, 4})) == "x1^6*x2^3*x3^4");
  CHECK(to_string(m({0, 1, 0})) == "x2");
  CHECK(to_string(m({1, 0, 2})) == "x1*x3^2");
  CHECK(to_string(Monomial::one(3)) == "1");
}

TEST_CASE("monomial parsing") {
  CHECK(parse_monomial("x1^6*x2^3*x3^4", 3) == m({6, 3, 4}));
  CHECK(parse_monomial("x2", 3) == m({0, 1, 0}));
  CHECK(parse_monomial("1", 3) == Monomial::one(3));
  CHECK(parse_monomial(" x1 * x2 ", 2) == m({1, 1}));
  // repeated variables accumulate
  CHECK(parse_monomial("x1*x1^2", 2) == m({3, 0}));
  // round trip
  for (auto& mono : {m({6, 1, 0}), m({0, 0, 0}), m({1, 2, 3})})
    CHECK(parse_monomial(to_string(mono), 3) == mono);

  CHECK_THROWS_AS(parse_monomial("x4", 3), ParseError);
  CHECK_THROWS_AS(parse_monomial("x0", 3), ParseError);
  CHECK_THROWS_AS(parse_monomial("", 3), ParseError);
  CHECK_THROWS_AS(parse_monomial("x1^", 3), ParseError);
  CHECK_THROWS_AS(parse_monomial("y2", 3), ParseError);
  CHECK_THROWS_AS(parse_monomial("x1*", 3), ParseError);

  try {
    parse_monomial("x1*x9", 3);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}
