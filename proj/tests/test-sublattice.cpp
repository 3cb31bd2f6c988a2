#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "sublat/elem-set.hpp"
#include "sublat/semigroup.hpp"
#include "sublat/sublattice.hpp"

using namespace sublat;

namespace {

FiniteSemigroup brandt5() {
  return FiniteSemigroup(5, {4, 2, 4, 0, 4,
                             3, 4, 1, 4, 4,
                             0, 4, 2, 4, 4,
                             4, 1, 4, 3, 4,
                             4, 4, 4, 4, 4},
                         {"a", "b", "ab", "ba", "0"});
}

// every subset checked for closure directly, independent of the
// closure-growth enumeration under test
int closed_subset_count(FiniteSemigroup const& S,
                        SubsemigroupLattice const& L) {
  int n     = S.order();
  int found = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    ElemSet u;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        u.set(i);
      }
    }
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      for (int j = 0; j < n && closed; ++j) {
        if (u.test(i) && u.test(j) && !u.test(S.product(i, j))) {
          closed = false;
        }
      }
    }
    if (closed) {
      ++found;
      REQUIRE(L.index_of(u) >= 0);
    } else {
      REQUIRE(L.index_of(u) == -1);
    }
  }
  return found;
}

}  // namespace

TEST_CASE("node sets agree with a direct closure scan", "[sublattice]") {
  std::vector<FiniteSemigroup> grounds;
  grounds.push_back(FiniteSemigroup::chain_semilattice(3));
  grounds.push_back(FiniteSemigroup::left_zero(3));
  grounds.push_back(FiniteSemigroup::cyclic_group(4));
  grounds.push_back(FiniteSemigroup::direct_product(FiniteSemigroup::cyclic_group(2),
                                                    FiniteSemigroup::cyclic_group(2)));
  grounds.push_back(FiniteSemigroup::rectangular_band(2, 2));
  grounds.push_back(brandt5());
  for (FiniteSemigroup const& S : grounds) {
    SubsemigroupLattice L = sub_lattice(S);
    REQUIRE(L.size() == closed_subset_count(S, L));
  }
}

TEST_CASE("frozen lattice sizes", "[sublattice]") {
  REQUIRE(sub_lattice(FiniteSemigroup::chain_semilattice(3)).size() == 8);
  REQUIRE(sub_lattice(FiniteSemigroup::left_zero(3)).size() == 8);
  REQUIRE(sub_lattice(FiniteSemigroup::cyclic_group(4)).size() == 4);
  REQUIRE(sub_lattice(FiniteSemigroup::direct_product(
              FiniteSemigroup::cyclic_group(2), FiniteSemigroup::cyclic_group(2)))
              .size() == 6);
  // in a left-zero or chain semilattice every subset is closed
  for (int n = 1; n <= 4; ++n) {
    REQUIRE(sub_lattice(FiniteSemigroup::left_zero(n)).size() == (1 << n));
    REQUIRE(sub_lattice(FiniteSemigroup::chain_semilattice(n)).size() == (1 << n));
  }
}

TEST_CASE("boolean cover structure", "[sublattice]") {
  SubsemigroupLattice L = sub_lattice(FiniteSemigroup::left_zero(3));
  REQUIRE(L.nodes[static_cast<std::size_t>(L.bottom())].empty());
  REQUIRE(L.nodes[static_cast<std::size_t>(L.top())].count() == 3);
  for (int v = 0; v < L.size(); ++v) {
    int pc = L.nodes[static_cast<std::size_t>(v)].count();
    REQUIRE(L.rank[static_cast<std::size_t>(v)] == pc);
    REQUIRE(static_cast<int>(L.covers_down[static_cast<std::size_t>(v)].size()) == pc);
    REQUIRE(static_cast<int>(L.covers_up[static_cast<std::size_t>(v)].size()) == 3 - pc);
    REQUIRE(L.downset_size[static_cast<std::size_t>(v)] == (1 << pc));
    REQUIRE(L.upset_size[static_cast<std::size_t>(v)] == (1 << (3 - pc)));
  }
}

TEST_CASE("a group's subsemigroups form the subgroup chain", "[sublattice]") {
  SubsemigroupLattice L = sub_lattice(FiniteSemigroup::cyclic_group(4));
  REQUIRE(L.nodes[1] == ElemSet::of({0}));
  REQUIRE(L.nodes[2] == ElemSet::of({0, 2}));
  REQUIRE(L.rank[static_cast<std::size_t>(L.top())] == 3);
  for (int v = 0; v < L.size(); ++v) {
    REQUIRE(L.covers_up[static_cast<std::size_t>(v)].size() == (v == L.top() ? 0u : 1u));
  }
  REQUIRE(L.index_of(ElemSet::of({1})) == -1);
}

TEST_CASE("meet and join", "[sublattice]") {
  SECTION("chain of subgroups") {
    SubsemigroupLattice L = sub_lattice(FiniteSemigroup::cyclic_group(4));
    REQUIRE(lattice_ops(L, 1, 2) == std::pair<int, int>{1, 2});
    REQUIRE(lattice_ops(L, 2, 2) == std::pair<int, int>{2, 2});
    REQUIRE(lattice_ops(L, 0, 3) == std::pair<int, int>{0, 3});
  }
  SECTION("incomparable subgroups meet at the identity, join to everything") {
    SubsemigroupLattice L = sub_lattice(FiniteSemigroup::direct_product(
        FiniteSemigroup::cyclic_group(2), FiniteSemigroup::cyclic_group(2)));
    REQUIRE(L.size() == 6);
    REQUIRE(L.nodes[2] == ElemSet::of({0, 1}));
    REQUIRE(L.nodes[3] == ElemSet::of({0, 2}));
    REQUIRE(lattice_ops(L, 2, 3) == std::pair<int, int>{1, 5});
  }
}

TEST_CASE("order bound", "[sublattice]") {
  REQUIRE_THROWS_AS(sub_lattice(FiniteSemigroup::null_semigroup(13)), TooLarge);
  REQUIRE_THROWS_AS(sub_lattice(FiniteSemigroup::left_zero(5), 4), TooLarge);
  REQUIRE_NOTHROW(sub_lattice(FiniteSemigroup::left_zero(5)));
}

TEST_CASE("dot rendering", "[sublattice]") {
  SubsemigroupLattice L   = sub_lattice(FiniteSemigroup::left_zero(2));
  std::string         dot = lattice_dot(L);
  REQUIRE(dot.find("digraph sublattice") != std::string::npos);
  REQUIRE(dot.find("rankdir=BT") != std::string::npos);
  REQUIRE(dot.find("[label=\"{}\"]") != std::string::npos);
  REQUIRE(dot.find("[label=\"{0,1}\"]") != std::string::npos);
  REQUIRE(dot.find("n0 -> n1;") != std::string::npos);
  REQUIRE(dot.find("n0 -> n2;") != std::string::npos);
  REQUIRE(dot.find("n1 -> n3;") != std::string::npos);
  REQUIRE(dot.find("n2 -> n3;") != std::string::npos);

  // labels use the ground semigroup's element names when it has them
  SubsemigroupLattice LB = sub_lattice(brandt5());
  int v = LB.index_of(ElemSet::of({2}));
  REQUIRE(v >= 0);
  REQUIRE(lattice_node_label(LB, v) == "{ab}");
  REQUIRE(lattice_dot(LB).find("[label=\"{ab}\"]") != std::string::npos);
}
