#include <catch2/catch_amalgamated.hpp>

#include "sublat/classify.hpp"
#include "sublat/green.hpp"
#include "sublat/semigroup.hpp"

using namespace sublat;

namespace {

// Brandt semigroup on {a, b, ab, ba, 0} with ids in that order: the
// standard 5-element inverse semigroup with a nongroup generator.
FiniteSemigroup brandt5() {
  return FiniteSemigroup(5,
                         {{4, 2, 4, 0, 4},
                          {3, 4, 1, 4, 4},
                          {0, 4, 2, 4, 4},
                          {4, 1, 4, 3, 4},
                          {4, 4, 4, 4, 4}},
                         {"a", "b", "ab", "ba", "0"});
}

}  // namespace

TEST_CASE("Green's relations on standard examples", "[green]") {
  SECTION("left zero: L universal, R trivial") {
    auto g = green(FiniteSemigroup::left_zero(3));
    REQUIRE(g.L.size() == 1);
    REQUIRE(g.R.size() == 3);
    REQUIRE(g.H.size() == 3);
    REQUIRE(g.D.size() == 1);
    REQUIRE(g.J.size() == 1);
  }
  SECTION("chain semilattice: everything trivial") {
    auto g = green(FiniteSemigroup::chain_semilattice(3));
    REQUIRE(g.L.size() == 3);
    REQUIRE(g.R.size() == 3);
    REQUIRE(g.D.size() == 3);
  }
  SECTION("group: everything universal") {
    auto g = green(FiniteSemigroup::cyclic_group(4));
    REQUIRE(g.L.size() == 1);
    REQUIRE(g.R.size() == 1);
    REQUIRE(g.H.size() == 1);
  }
  SECTION("rectangular band: rows are R-classes, columns L-classes") {
    auto g = green(FiniteSemigroup::rectangular_band(2, 3));
    REQUIRE(g.L.size() == 3);
    REQUIRE(g.R.size() == 2);
    REQUIRE(g.H.size() == 6);
    REQUIRE(g.D.size() == 1);
  }
  SECTION("Brandt semigroup: two D-classes, trivial H") {
    auto S = brandt5();
    auto g = green(S);
    REQUIRE(g.D.size() == 2);
    REQUIRE(g.h_trivial());
    REQUIRE(g.l_of[0] == g.l_of[3]);  // a L ba
    REQUIRE(g.r_of[0] == g.r_of[2]);  // a R ab
    REQUIRE(g.d_of[0] == g.d_of[1]);
    REQUIRE(g.d_of[0] != g.d_of[4]);
  }
  SECTION("D equals J on finite inputs") {
    for (auto const& S : {FiniteSemigroup::left_zero(4), brandt5(),
                          FiniteSemigroup::cyclic_group(6)}) {
      auto g = green(S);
      REQUIRE(g.d_of == g.j_of);
    }
  }
}

TEST_CASE("group elements via the H-class criterion", "[green]") {
  auto S = brandt5();
  auto g = green(S);
  REQUIRE_FALSE(is_group_element(S, g, 0));  // a
  REQUIRE_FALSE(is_group_element(S, g, 1));  // b
  REQUIRE(is_group_element(S, g, 2));        // ab, idempotent
  REQUIRE(is_group_element(S, g, 4));        // zero
  REQUIRE(nongroup_elements(S, g) == ElemSet::of({0, 1}));

  auto Z = FiniteSemigroup::cyclic_group(4);
  auto gz = green(Z);
  REQUIRE(nongroup_elements(Z, gz).empty());
}

TEST_CASE("property flags", "[classify]") {
  SECTION("rectangular band") {
    auto r = classify(FiniteSemigroup::rectangular_band(2, 2));
    REQUIRE(r.is_band);
    REQUIRE(r.is_orthodox);
    REQUIRE_FALSE(r.is_inverse);
    REQUIRE(r.is_completely_simple);
    REQUIRE(r.is_regular);
    REQUIRE_FALSE(r.is_semilattice);
    REQUIRE_FALSE(r.is_group);
  }
  SECTION("chain semilattice") {
    auto r = classify(FiniteSemigroup::chain_semilattice(3));
    REQUIRE(r.is_band);
    REQUIRE(r.is_semilattice);
    REQUIRE(r.is_inverse);
    REQUIRE(r.is_orthodox);
    REQUIRE_FALSE(r.is_group);
  }
  SECTION("cyclic group") {
    auto r = classify(FiniteSemigroup::cyclic_group(4));
    REQUIRE(r.is_group);
    REQUIRE(r.is_inverse);
    REQUIRE(r.is_completely_simple);
    REQUIRE_FALSE(r.is_band);
    REQUIRE_FALSE(r.is_combinatorial);
  }
  SECTION("null semigroup is not regular") {
    auto r = classify(FiniteSemigroup::null_semigroup(3));
    REQUIRE_FALSE(r.is_regular);
    REQUIRE_FALSE(r.is_orthodox);
  }
  SECTION("Brandt semigroup is inverse but not completely simple") {
    auto r = classify(brandt5());
    REQUIRE(r.is_inverse);
    REQUIRE(r.is_orthodox);
    REQUIRE(r.is_combinatorial);
    REQUIRE_FALSE(r.is_completely_simple);
    REQUIRE_FALSE(r.is_band);
  }
  SECTION("element orders") {
    auto r = classify(FiniteSemigroup::cyclic_group(4));
    REQUIRE(r.element_orders == std::vector<int>{1, 4, 2, 4});
  }
}

TEST_CASE("inverse sets", "[classify]") {
  auto S = brandt5();
  REQUIRE(inverses(S, 0) == ElemSet::of({1}));
  REQUIRE(inverses(S, 1) == ElemSet::of({0}));
  REQUIRE(inverses(S, 2) == ElemSet::of({2}));
  REQUIRE(inverses(S, 4) == ElemSet::of({4}));

  // in a rectangular band every element is an inverse of every other
  auto B = FiniteSemigroup::rectangular_band(2, 2);
  for (int x = 0; x < 4; ++x) {
    REQUIRE(inverses(B, x) == B.universe());
  }

  // null semigroup: nonzero elements have no inverses
  auto N = FiniteSemigroup::null_semigroup(3);
  REQUIRE(inverses(N, 1).empty());
  REQUIRE(inverses(N, 0) == ElemSet::of({0}));
}
