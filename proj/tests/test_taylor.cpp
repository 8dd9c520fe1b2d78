#include "betti/taylor.hpp"

#include "doctest.h"

using namespace betti;

namespace {

Monomial m(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

IdealPresentation ideal(int n, std::vector<std::vector<std::uint32_t>> rows) {
  std::vector<Monomial> gens;
  for (auto& row : rows) gens.push_back(Monomial(std::move(row)));
  return IdealPresentation(n, std::move(gens));
}

// x2^4, x1*x3^4, x1^6*x2, x1^5*x2^3 in canonical order
const IdealPresentation reference =
    ideal(3, {{0, 4, 0}, {1, 0, 4}, {6, 1, 0}, {5, 3, 0}});

}  // namespace

TEST_CASE("two-generator differential follows the sign convention") {
  const auto C = taylor_complex(2, {m({2, 0}), m({1, 1})});
  CHECK(C.max_hdeg() == 2);
  CHECK(C.basis[1] == std::vector<std::uint32_t>{1, 2});
  CHECK(C.mdeg.at(3) == m({2, 1}));
  // deleting the first listed member (x^2) keeps [xy] with sign +1
  CHECK(C.diff[2].at({3, 2}) == Term{Rational(1), m({1, 0})});
  // deleting the second (xy) keeps [x^2] with sign -1
  CHECK(C.diff[2].at({3, 1}) == Term{Rational(-1), m({0, 1})});
  CHECK(C.diff[1].at({1, 0}) == Term{Rational(1), m({2, 0})});
  CHECK(C.diff[1].at({2, 0}) == Term{Rational(1), m({1, 1})});
  CHECK_NOTHROW(check_integrity(C));
}

TEST_CASE("integrity holds on assorted complexes") {
  CHECK_NOTHROW(check_integrity(taylor_complex(3, reference.generators())));
  CHECK_NOTHROW(check_integrity(taylor_complex(1, {m({1}), m({2}), m({3})})));
  // duplicates and the identity are legal list members
  CHECK_NOTHROW(check_integrity(
      taylor_complex(2, {m({3, 0}), m({0, 3}), m({0, 0}), m({0, 3})})));
}

TEST_CASE("integrity rejects corrupted complexes") {
  auto C = taylor_complex(2, {m({2, 0}), m({1, 1})});
  C.diff[2].at({3, 2}).coeff = 2;  // breaks d∘d = 0
  CHECK_THROWS_AS(check_integrity(C), IntegrityError);

  auto D = taylor_complex(2, {m({2, 0}), m({1, 1})});
  D.diff[1].at({1, 0}).mono = m({1, 1});  // inhomogeneous
  CHECK_THROWS_AS(check_integrity(D), IntegrityError);

  auto E = taylor_complex(2, {m({2, 0}), m({1, 1})});
  E.mdeg.at(3) = m({9, 9});  // cached lcm no longer matches
  CHECK_THROWS_AS(check_integrity(E), IntegrityError);
}

TEST_CASE("capacity and dimension guards") {
  CHECK_THROWS_AS(taylor_complex(1, {m({1}), m({2}), m({3})}, 2), CapacityError);
  CHECK_THROWS_AS(taylor_complex(2, {}), DomainError);
  CHECK_THROWS_AS(taylor_complex(3, {m({1, 0})}), DimensionError);
}

TEST_CASE("strand homology of small complexes") {
  // (x^2, xy): the strand at x^2*y is the lone pair symbol
  const auto C = taylor_complex(2, {m({2, 0}), m({1, 1})});
  CHECK(strand_betti(C, m({2, 1})) == std::vector<long>{0, 0, 1});
  CHECK(strand_betti(C, m({2, 0})) == std::vector<long>{0, 1, 0});
  CHECK(strand_betti(C, m({0, 0})) == std::vector<long>{1, 0, 0});
  // off-lattice multidegrees vanish
  CHECK(strand_betti(C, m({5, 5})) == std::vector<long>{0, 0, 0});

  // (x, xy): the invertible entry kills both strand ranks at xy
  const auto D = taylor_complex(2, {m({1, 0}), m({1, 1})});
  CHECK(strand_betti(D, m({1, 1})) == std::vector<long>{0, 0, 0});
}

TEST_CASE("lcm lattice of the reference ideal") {
  const auto lattice = lcm_lattice(taylor_complex(3, reference.generators()));
  CHECK(lattice.size() == 14);  // 16 subsets, two lcm collisions
  CHECK(lattice.front() == m({0, 0, 0}));
  CHECK(std::is_sorted(lattice.begin(), lattice.end(), DegLex{}));
}

TEST_CASE("oracle reproduces the reference Betti totals") {
  const BettiTable table = betti_table_oracle(reference);
  CHECK(table.totals() == std::vector<long>{1, 4, 5, 2});
  CHECK(table.pd() == 3);
  CHECK(table.sum() == 12);
  CHECK(table.multigraded(3, m({6, 3, 4})) == 1);
  CHECK(table.multigraded(3, m({5, 4, 4})) == 1);
  CHECK(table.graded(3, 13) == 2);
  CHECK(table.total(1) == 4);
}

TEST_CASE("oracle on complete intersections gives binomial totals") {
  CHECK(betti_table_oracle(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).totals() ==
        std::vector<long>{1, 3, 3, 1});
  CHECK(betti_table_oracle(ideal(2, {{2, 0}, {0, 3}})).totals() ==
        std::vector<long>{1, 2, 1});
  CHECK(betti_table_oracle(ideal(1, {{5}})).totals() == std::vector<long>{1, 1});
}

TEST_CASE("oracle edge ideals") {
  const BettiTable zero = betti_table_oracle(IdealPresentation(3, {}));
  CHECK(zero.totals() == std::vector<long>{1});
  CHECK(zero.multigraded(0, m({0, 0, 0})) == 1);
  CHECK_THROWS_AS(betti_table_oracle(ideal(2, {{0, 0}})), DomainError);
  // non-minimal input is minimalized first
  CHECK(betti_table_oracle(ideal(2, {{1, 0}, {1, 1}})).totals() ==
        std::vector<long>{1, 1});
}

TEST_CASE("restriction consistency across the lattice") {
  const auto C = taylor_complex(3, reference.generators());
  const BettiTable full = betti_table_oracle(reference);
  for (const Monomial& l : lcm_lattice(C)) {
    const auto restricted = restrict_to_divisors(reference, l);
    const BettiTable local = betti_table_oracle(restricted);
    for (int i = 0; i <= 3; ++i)
      CHECK(full.multigraded(i, l) == local.multigraded(i, l));
  }
}

TEST_CASE("multidegree betti honors the raw presentation") {
  // twin of the 4-generator reference pair example, duplicates kept
  const auto M = ideal(3, {{3, 2, 0}, {3, 0, 1}, {1, 0, 2}, {0, 1, 2}});
  const Monomial top = m({3, 2, 2});
  const auto twin = twin_ideal(M);
  CHECK(twin.generator_count() == 4);
  CHECK(multidegree_betti(M, top) == multidegree_betti(twin, top));

  // a raw list with 1 resolves the zero module: everything vanishes
  const auto with_unit = ideal(2, {{3, 0}, {0, 3}, {0, 0}});
  const auto at_top = multidegree_betti(with_unit, m({3, 3}));
  CHECK(std::all_of(at_top.begin(), at_top.end(), [](long b) { return b == 0; }));

  CHECK_THROWS_AS(multidegree_betti(IdealPresentation(2, {}), m({1, 1})),
                  DomainError);
}

TEST_CASE("rational and prime-field tables agree on the goldens") {
  for (const auto& I :
       {reference, ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
        ideal(2, {{2, 0}, {1, 1}}), ideal(2, {{2, 0}, {0, 2}, {1, 1}})}) {
    CHECK(betti_table_oracle(I, 32749) == betti_table_oracle(I));
  }
}
