#ifndef SUBLAT_BICYCLIC_HPP_
#define SUBLAT_BICYCLIC_HPP_

#include <algorithm>
#include <cstdint>
#include <string>

#include "exceptions.hpp"

namespace sublat {

//! The pair model of the bicyclic semigroup: nonnegative pairs (m, n),
//! identity (0, 0), idempotents exactly the (n, n).
struct BicyclicElt {
  std::int64_t m = 0;
  std::int64_t n = 0;

  bool is_idempotent() const noexcept { return m == n; }

  bool operator==(BicyclicElt const& o) const noexcept {
    return m == o.m && n == o.n;
  }
  bool operator<(BicyclicElt const& o) const noexcept {
    return m != o.m ? m < o.m : n < o.n;
  }
};

inline BicyclicElt bicyclic_mul(BicyclicElt u, BicyclicElt v) {
  std::int64_t r = std::min(u.n, v.m);
  return BicyclicElt{u.m + v.m - r, u.n + v.n - r};
}

inline std::string to_string(BicyclicElt u) {
  return "(" + std::to_string(u.m) + "," + std::to_string(u.n) + ")";
}

// The presentation side: words over the alphabet {a, b}, where a = (0, 1)
// and b = (1, 0). Irreducible words under the relations below are exactly
// b^m a^n (m + n >= 1) together with "ab", which is the identity (0, 0).

inline BicyclicElt const kBicyclicA{0, 1};
inline BicyclicElt const kBicyclicB{1, 0};

//! Left-to-right product of the letter values, by pair arithmetic.
inline BicyclicElt bicyclic_eval_word(std::string const& word) {
  if (word.empty()) {
    throw EmptyWord();
  }
  BicyclicElt acc{0, 0};
  bool        first = true;
  for (char ch : word) {
    if (ch != 'a' && ch != 'b') {
      throw InvalidEntry("bicyclic words use the alphabet {a, b}, got '"
                         + std::string(1, ch) + "'");
    }
    BicyclicElt letter = ch == 'a' ? kBicyclicA : kBicyclicB;
    acc   = first ? letter : bicyclic_mul(acc, letter);
    first = false;
  }
  return acc;
}

//! Rewrites under aba -> a, bab -> b, aab -> a, abb -> b until no rule
//! applies. Every rule drops the length by 2, so this terminates; the
//! irreducible words are b^m a^n and "ab", one per semigroup element, so
//! the strategy (leftmost match here) does not matter.
inline std::string bicyclic_normal_form(std::string word) {
  if (word.empty()) {
    throw EmptyWord();
  }
  for (char ch : word) {
    if (ch != 'a' && ch != 'b') {
      throw InvalidEntry("bicyclic words use the alphabet {a, b}, got '"
                         + std::string(1, ch) + "'");
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 2 < word.size(); ++i) {
      auto piece = word.substr(i, 3);
      if (piece == "aba" || piece == "aab") {
        word.replace(i, 3, "a");
        changed = true;
        break;
      }
      if (piece == "bab" || piece == "abb") {
        word.replace(i, 3, "b");
        changed = true;
        break;
      }
    }
  }
  return word;
}

//! The pair an irreducible word denotes.
inline BicyclicElt bicyclic_parse_normal_form(std::string const& nf) {
  if (nf == "ab") {
    return BicyclicElt{0, 0};
  }
  std::int64_t m = 0;
  std::size_t  i = 0;
  while (i < nf.size() && nf[i] == 'b') {
    ++m;
    ++i;
  }
  std::int64_t n = 0;
  while (i < nf.size() && nf[i] == 'a') {
    ++n;
    ++i;
  }
  if (i != nf.size() || nf.empty()) {
    throw NotCanonical("not a bicyclic normal form: \"" + nf + "\"");
  }
  return BicyclicElt{m, n};
}

//! The canonical word for a pair: b^m a^n, or "ab" for the identity.
inline std::string bicyclic_word_of(BicyclicElt u) {
  if (u.m == 0 && u.n == 0) {
    return "ab";
  }
  return std::string(static_cast<std::size_t>(u.m), 'b')
         + std::string(static_cast<std::size_t>(u.n), 'a');
}

}  // namespace sublat

#endif  // SUBLAT_BICYCLIC_HPP_
