#include <cstdint>

#include <catch2/catch_amalgamated.hpp>

#include "sublat/monogenic.hpp"

using namespace sublat;

TEST_CASE("pair-of-pairs elements validate their invariants", "[monogenic]") {
  SECTION("generator and its inverse") {
    C2Elt x = c2_generator();
    REQUIRE(x == C2Elt(1, 0, 0, 1));
    REQUIRE(c2_inv(x) == C2Elt(0, 1, 1, 0));
    REQUIRE(x.weight() == 1);
    REQUIRE_FALSE(x.is_idempotent());
  }
  SECTION("coordinates must be nonnegative with matching sums") {
    REQUIRE_THROWS_AS(C2Elt(-1, 0, 0, -1), NotCanonical);
    REQUIRE_THROWS_AS(C2Elt(1, 0, 0, 2), NotCanonical);
    REQUIRE_THROWS_AS(C2Elt(0, 0, 0, 0), NotCanonical);
  }
  SECTION("products and inverses") {
    C2Elt x = c2_generator();
    REQUIRE(c2_mul(x, x) == C2Elt(2, 0, 0, 2));
    REQUIRE(c2_mul(x, c2_inv(x)) == C2Elt(1, 1, 0, 0));
    REQUIRE(c2_mul(c2_inv(x), x) == C2Elt(0, 0, 1, 1));
    // x x^-1 x = x and the two one-sided products are idempotent
    REQUIRE(c2_mul(c2_mul(x, c2_inv(x)), x) == x);
    REQUIRE(c2_mul(x, c2_inv(x)).is_idempotent());
    REQUIRE(c2_mul(c2_inv(x), x).is_idempotent());
  }
  SECTION("attributes") {
    C2Attrs a = c2_attrs(C2Elt(2, 1, 1, 2));
    REQUIRE(a.weight == 3);
    REQUIRE(a.dclass_size == 16);
    REQUIRE_FALSE(a.is_idempotent);
    REQUIRE(c2_attrs(C2Elt(1, 1, 0, 0)).is_idempotent);
  }
}

TEST_CASE("weight levels", "[monogenic]") {
  for (std::int64_t m = 1; m <= 6; ++m) {
    auto level = elements_of_weight(m);
    REQUIRE(static_cast<std::int64_t>(level.size()) == (m + 1) * (m + 1));
    std::int64_t idem = 0;
    for (C2Elt const& u : level) {
      REQUIRE(u.weight() == m);
      if (u.is_idempotent()) {
        ++idem;
      }
    }
    REQUIRE(idem == m + 1);
  }
  REQUIRE(elements_of_weight_at_most(3).size() == 4 + 9 + 16);
}

TEST_CASE("word evaluation over the generator alphabet", "[monogenic]") {
  C2Elt x = c2_generator();
  REQUIRE(word_eval({1}) == x);
  REQUIRE(word_eval({-1}) == c2_inv(x));
  REQUIRE(word_eval({1, -1}) == C2Elt(1, 1, 0, 0));
  REQUIRE(word_eval({-1, 1}) == C2Elt(0, 0, 1, 1));
  REQUIRE(word_eval({1, 1, -1}) == c2_mul(c2_mul(x, x), c2_inv(x)));
  REQUIRE_THROWS_AS(word_eval({}), EmptyWord);
  REQUIRE_THROWS_AS(word_eval({1, 0}), InvalidEntry);

  REQUIRE(parse_generator_word("x x^-1  x") == std::vector<int>{1, -1, 1});
  REQUIRE(parse_generator_word("") == std::vector<int>{});
  REQUIRE_THROWS_AS(parse_generator_word("x y"), InvalidEntry);
}

// The conversion formulas are only trusted because of this exhaustive
// comparison against evaluating x^-p x^q x^-r by pair arithmetic.
TEST_CASE("canonical words against the evaluation oracle", "[monogenic][oracle]") {
  int triples = 0;
  for (std::int64_t q = 1; q <= 8; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      for (std::int64_t r = 0; r <= q; ++r) {
        C3Word w(p, q, r);
        ++triples;
        C2Elt oracle = word_eval(w.letters());
        REQUIRE(c3_to_c2(w) == oracle);
        REQUIRE(c2_to_c3(oracle) == w);
        REQUIRE(w.is_idempotent() == oracle.is_idempotent());
      }
    }
  }
  REQUIRE(triples == 284);

  // and back: every element of weight <= 8 comes from exactly its triple
  for (C2Elt const& u : elements_of_weight_at_most(8)) {
    REQUIRE(c3_to_c2(c2_to_c3(u)) == u);
  }
}

TEST_CASE("canonical word validation", "[monogenic]") {
  REQUIRE_THROWS_AS(C3Word(0, 0, 0), NotCanonical);
  REQUIRE_THROWS_AS(C3Word(2, 1, 0), NotCanonical);
  REQUIRE_THROWS_AS(C3Word(0, 1, 2), NotCanonical);
  REQUIRE_THROWS_AS(C3Word(-1, 1, 0), NotCanonical);
  REQUIRE(C3Word(1, 2, 1).is_idempotent());
  REQUIRE(C3Word(1, 1, 0).letters() == std::vector<int>{-1, 1});
}

TEST_CASE("serialization", "[monogenic]") {
  C2Elt u(2, 1, 1, 2);
  REQUIRE(to_string(u) == "((2,1),(1,2))");
  REQUIRE(parse_c2(to_string(u)) == u);
  REQUIRE(parse_c2("((1,0),(0,1))") == c2_generator());
  REQUIRE_THROWS_AS(parse_c2("((1,0),(0,1)"), InvalidEntry);
  REQUIRE_THROWS_AS(parse_c2("((1,0),(0,1)) "), InvalidEntry);
  REQUIRE_THROWS_AS(parse_c2("((a,0),(0,1))"), InvalidEntry);
  // well-formed but invalid coordinates fail the element check
  REQUIRE_THROWS_AS(parse_c2("((1,1),(1,0))"), NotCanonical);
}

TEST_CASE("powers and bounded order evidence", "[monogenic]") {
  C2Elt x = c2_generator();
  SECTION("fast exponentiation matches iterated products") {
    C2Elt it = x;
    for (std::int64_t k = 1; k <= 10; ++k) {
      REQUIRE(c2_power(x, k) == it);
      it = c2_mul(it, x);
    }
    C2Elt u(2, 1, 1, 2);
    REQUIRE(c2_power(u, 5) == c2_mul(c2_mul(c2_mul(c2_mul(u, u), u), u), u));
    REQUIRE_THROWS_AS(c2_power(x, 0), InvalidEntry);
  }
  SECTION("the generator shows no torsion up to the horizon") {
    OrderEvidence ev = order_evidence(x, 12, [](C2Elt a, C2Elt b) {
      return c2_mul(a, b);
    });
    REQUIRE(ev.passed());
    REQUIRE(ev.all_distinct);
    REQUIRE(ev.none_idempotent);
  }
  SECTION("idempotents fail immediately") {
    OrderEvidence ev = order_evidence(C2Elt(1, 1, 0, 0), 3, [](C2Elt a, C2Elt b) {
      return c2_mul(a, b);
    });
    REQUIRE_FALSE(ev.passed());
    REQUIRE_FALSE(ev.none_idempotent);
    REQUIRE_FALSE(ev.all_distinct);
  }
}
