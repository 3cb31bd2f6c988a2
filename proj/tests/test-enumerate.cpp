#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "sublat/enumerate.hpp"
#include "sublat/semigroup.hpp"

using namespace sublat;

namespace {

// every n^(n*n) table generated outright and grouped by relabeling orbit,
// independent of the backtracking enumerator under test
struct NaiveClasses {
  std::set<std::vector<int>> assoc_tables;
  std::set<std::vector<int>> keys;
};

std::vector<int> relabel(std::vector<int> const& t, int n, std::vector<int> const& sigma) {
  std::vector<int> out(t.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)]) * n
          + sigma[static_cast<std::size_t>(j)]] =
          sigma[static_cast<std::size_t>(t[static_cast<std::size_t>(i) * n + j])];
    }
  }
  return out;
}

std::vector<int> naive_key(std::vector<int> const& t, int n, EnumMode mode) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> best = t;
  do {
    best = std::min(best, relabel(t, n, sigma));
    if (mode == EnumMode::iso_or_anti) {
      std::vector<int> tr(t.size());
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          tr[static_cast<std::size_t>(i) * n + j] = t[static_cast<std::size_t>(j) * n + i];
        }
      }
      best = std::min(best, relabel(tr, n, sigma));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

NaiveClasses naive_enumerate(int n, EnumMode mode) {
  NaiveClasses     out;
  std::vector<int> t(static_cast<std::size_t>(n) * n, 0);
  for (;;) {
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a) {
      for (int b = 0; b < n && assoc; ++b) {
        for (int c = 0; c < n && assoc; ++c) {
          int ab = t[static_cast<std::size_t>(a) * n + b];
          int bc = t[static_cast<std::size_t>(b) * n + c];
          if (t[static_cast<std::size_t>(ab) * n + c]
              != t[static_cast<std::size_t>(a) * n + bc]) {
            assoc = false;
          }
        }
      }
    }
    if (assoc) {
      out.assoc_tables.insert(t);
      out.keys.insert(naive_key(t, n, mode));
    }
    std::size_t pos = 0;
    while (pos < t.size() && t[pos] == n - 1) {
      t[pos] = 0;
      ++pos;
    }
    if (pos == t.size()) {
      break;
    }
    ++t[pos];
  }
  return out;
}

}  // namespace

TEST_CASE("representatives match the brute-force orbit count", "[enumerate]") {
  for (int n = 2; n <= 3; ++n) {
    for (EnumMode mode : {EnumMode::iso, EnumMode::iso_or_anti}) {
      NaiveClasses naive = naive_enumerate(n, mode);
      std::vector<FiniteSemigroup> reps = all_semigroups(n, mode);
      REQUIRE(reps.size() == naive.keys.size());
      for (FiniteSemigroup const& S : reps) {
        REQUIRE(naive.assoc_tables.count(S.flat_table()) == 1);
        // each representative is its own orbit key
        REQUIRE(naive_key(S.flat_table(), n, mode) == S.flat_table());
      }
    }
  }
}

TEST_CASE("frozen class counts", "[enumerate]") {
  REQUIRE(all_semigroups(1, EnumMode::iso).size() == 1);
  REQUIRE(all_semigroups(2, EnumMode::iso).size() == 5);
  REQUIRE(all_semigroups(3, EnumMode::iso).size() == 24);
  REQUIRE(all_semigroups(4, EnumMode::iso).size() == 188);
  REQUIRE(all_semigroups(1, EnumMode::iso_or_anti).size() == 1);
  REQUIRE(all_semigroups(2, EnumMode::iso_or_anti).size() == 4);
  REQUIRE(all_semigroups(3, EnumMode::iso_or_anti).size() == 18);
  REQUIRE(all_semigroups(4, EnumMode::iso_or_anti).size() == 126);
}

TEST_CASE("the two modes are linked by self-duality", "[enumerate]") {
  for (int n = 1; n <= 4; ++n) {
    auto iso  = all_semigroups(n, EnumMode::iso);
    auto anti = all_semigroups(n, EnumMode::iso_or_anti);
    int  self_dual = 0;
    for (FiniteSemigroup const& S : anti) {
      if (canonical_form(S).self_dual) {
        ++self_dual;
      }
    }
    // each non-self-dual class under iso-or-anti splits into two iso classes
    REQUIRE(static_cast<int>(iso.size())
            == 2 * static_cast<int>(anti.size()) - self_dual);
  }
}

TEST_CASE("canonical forms", "[enumerate]") {
  FiniteSemigroup b2(5, {4, 2, 4, 0, 4,
                         3, 4, 1, 4, 4,
                         0, 4, 2, 4, 4,
                         4, 1, 4, 3, 4,
                         4, 4, 4, 4, 4});
  CanonicalTable c = canonical_form(b2);
  SECTION("invariant under relabeling") {
    std::vector<int> sigma{3, 1, 4, 0, 2};
    FiniteSemigroup  shuffled(5, relabel(b2.flat_table(), 5, sigma));
    REQUIRE(canonical_form(shuffled) == c);
  }
  SECTION("canonicalizing is idempotent") {
    REQUIRE(canonical_form(FiniteSemigroup(c.order, c.table)) == c);
  }
  SECTION("self-duality flags") {
    REQUIRE(c.self_dual);  // inversion realizes the antiisomorphism
    REQUIRE(canonical_form(FiniteSemigroup::chain_semilattice(2)).self_dual);
    REQUIRE_FALSE(canonical_form(FiniteSemigroup::left_zero(2)).self_dual);
  }
}

TEST_CASE("isomorphism-or-duality comparisons", "[enumerate]") {
  FiniteSemigroup lz2 = FiniteSemigroup::left_zero(2);
  FiniteSemigroup rz2 = FiniteSemigroup::right_zero(2);
  REQUIRE(iso_test(lz2, rz2) == IsoResult::antiisomorphic_only);
  REQUIRE(iso_test(rz2, lz2) == IsoResult::antiisomorphic_only);
  REQUIRE(iso_test(lz2, lz2.dual()) == IsoResult::antiisomorphic_only);
  REQUIRE(iso_test(lz2, lz2) == IsoResult::isomorphic);
  REQUIRE(iso_test(FiniteSemigroup::cyclic_group(2),
                   FiniteSemigroup::chain_semilattice(2)) == IsoResult::neither);
  REQUIRE(iso_test(FiniteSemigroup::cyclic_group(4),
                   FiniteSemigroup::direct_product(FiniteSemigroup::cyclic_group(2),
                                                   FiniteSemigroup::cyclic_group(2)))
          == IsoResult::neither);
  REQUIRE(iso_test(lz2, FiniteSemigroup::left_zero(3)) == IsoResult::neither);
}

TEST_CASE("streaming and limits", "[enumerate]") {
  int calls = 0;
  enumerate_semigroups(3, EnumMode::iso, [&](FiniteSemigroup const&) {
    ++calls;
    return calls < 5;
  });
  REQUIRE(calls == 5);

  REQUIRE_THROWS_AS(enumerate_semigroups(6, EnumMode::iso,
                                         [](FiniteSemigroup const&) { return true; }),
                    TooLarge);
  REQUIRE_THROWS_AS(enumerate_semigroups(7, EnumMode::iso,
                                         [](FiniteSemigroup const&) { return true; },
                                         true),
                    TooLarge);
  REQUIRE_THROWS_AS(enumerate_semigroups(0, EnumMode::iso,
                                         [](FiniteSemigroup const&) { return true; }),
                    SizeZero);
}
