#ifndef SUBLAT_MONOGENIC_HPP_
#define SUBLAT_MONOGENIC_HPP_

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "bicyclic.hpp"
#include "exceptions.hpp"

namespace sublat {

//! The free monogenic inverse semigroup, modeled inside the square of the
//! bicyclic semigroup: pairs ((m,n),(p,q)) with m+p = n+q > 0, generated
//! by x = ((1,0),(0,1)). The common value m+p is the weight.
class C2Elt {
 public:
  C2Elt(std::int64_t m, std::int64_t n, std::int64_t p, std::int64_t q)
      : m_(m), n_(n), p_(p), q_(q) {
    if (m < 0 || n < 0 || p < 0 || q < 0) {
      throw NotCanonical("negative coordinate in " + repr(m, n, p, q));
    }
    if (m + p != n + q) {
      throw NotCanonical("coordinate sums differ in " + repr(m, n, p, q));
    }
    if (m + p <= 0) {
      throw NotCanonical("zero weight in " + repr(m, n, p, q));
    }
  }
  C2Elt(BicyclicElt left, BicyclicElt right)
      : C2Elt(left.m, left.n, right.m, right.n) {}

  std::int64_t m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return n_; }
  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  BicyclicElt left() const noexcept { return BicyclicElt{m_, n_}; }
  BicyclicElt right() const noexcept { return BicyclicElt{p_, q_}; }

  std::int64_t weight() const noexcept { return m_ + p_; }
  bool is_idempotent() const noexcept { return m_ == n_ && p_ == q_; }

  bool operator==(C2Elt const& o) const noexcept {
    return m_ == o.m_ && n_ == o.n_ && p_ == o.p_ && q_ == o.q_;
  }
  bool operator!=(C2Elt const& o) const noexcept { return !(*this == o); }
  bool operator<(C2Elt const& o) const noexcept {
    if (m_ != o.m_) return m_ < o.m_;
    if (n_ != o.n_) return n_ < o.n_;
    if (p_ != o.p_) return p_ < o.p_;
    return q_ < o.q_;
  }

 private:
  static std::string repr(std::int64_t m, std::int64_t n, std::int64_t p,
                          std::int64_t q) {
    return "((" + std::to_string(m) + "," + std::to_string(n) + "),("
           + std::to_string(p) + "," + std::to_string(q) + "))";
  }
  std::int64_t m_, n_, p_, q_;
};

inline C2Elt c2_generator() { return C2Elt(1, 0, 0, 1); }

//! Componentwise bicyclic product. The coordinate-sum invariant survives
//! because both components subtract the same kind of overlap.
inline C2Elt c2_mul(C2Elt u, C2Elt v) {
  return C2Elt(bicyclic_mul(u.left(), v.left()), bicyclic_mul(u.right(), v.right()));
}

inline C2Elt c2_inv(C2Elt u) {
  return C2Elt(u.n(), u.m(), u.q(), u.p());
}

struct C2Attrs {
  std::int64_t weight;
  bool         is_idempotent;
  std::int64_t dclass_size;  // (weight + 1)^2
};

inline C2Attrs c2_attrs(C2Elt u) {
  std::int64_t w = u.weight();
  return C2Attrs{w, u.is_idempotent(), (w + 1) * (w + 1)};
}

//! All (w+1)^2 elements of a given weight, in coordinate order.
inline std::vector<C2Elt> elements_of_weight(std::int64_t w) {
  std::vector<C2Elt> out;
  if (w <= 0) {
    return out;
  }
  out.reserve(static_cast<std::size_t>((w + 1) * (w + 1)));
  for (std::int64_t m = 0; m <= w; ++m) {
    for (std::int64_t n = 0; n <= w; ++n) {
      out.push_back(C2Elt(m, n, w - m, w - n));
    }
  }
  return out;
}

inline std::vector<C2Elt> elements_of_weight_at_most(std::int64_t w) {
  std::vector<C2Elt> out;
  for (std::int64_t m = 1; m <= w; ++m) {
    auto level = elements_of_weight(m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

//! Product of generator letters, +1 for x and -1 for x^-1, left to right.
inline C2Elt word_eval(std::vector<int> const& letters) {
  if (letters.empty()) {
    throw EmptyWord();
  }
  C2Elt x    = c2_generator();
  C2Elt xinv = c2_inv(x);
  bool  first = true;
  C2Elt acc   = x;
  for (int letter : letters) {
    if (letter != 1 && letter != -1) {
      throw InvalidEntry("word letters must be +1 (x) or -1 (x^-1), got "
                         + std::to_string(letter));
    }
    C2Elt value = letter == 1 ? x : xinv;
    acc   = first ? value : c2_mul(acc, value);
    first = false;
  }
  return acc;
}

//! Parses whitespace-separated tokens "x" and "x^-1".
inline std::vector<int> parse_generator_word(std::string const& text) {
  std::vector<int> letters;
  std::size_t      i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') {
      ++j;
    }
    std::string tok = text.substr(i, j - i);
    if (tok == "x") {
      letters.push_back(1);
    } else if (tok == "x^-1") {
      letters.push_back(-1);
    } else {
      throw InvalidEntry("unknown generator token \"" + tok + "\"");
    }
    i = j;
  }
  return letters;
}

//! The canonical-word model: s = x^-p x^q x^-r with q > 0 and 0 <= p, r <= q.
struct C3Word {
  std::int64_t p, q, r;

  C3Word(std::int64_t p, std::int64_t q, std::int64_t r) : p(p), q(q), r(r) {
    if (q <= 0 || p < 0 || r < 0 || p > q || r > q) {
      throw NotCanonical("invalid canonical word (p,q,r) = (" + std::to_string(p)
                         + "," + std::to_string(q) + "," + std::to_string(r) + ")");
    }
  }

  bool is_idempotent() const noexcept { return p + r == q; }
  std::vector<int> letters() const {
    std::vector<int> out;
    out.insert(out.end(), static_cast<std::size_t>(p), -1);
    out.insert(out.end(), static_cast<std::size_t>(q), 1);
    out.insert(out.end(), static_cast<std::size_t>(r), -1);
    return out;
  }
  bool operator==(C3Word const& o) const noexcept {
    return p == o.p && q == o.q && r == o.r;
  }
};

// The conversion formulas below were adopted only after being checked,
// exhaustively for q <= 8, against evaluating x^-p x^q x^-r by c2_mul.
// That check is frozen in the test suite and the acceptance run.

inline C2Elt c3_to_c2(C3Word w) {
  return C2Elt(w.q - w.p, w.r, w.p, w.q - w.r);
}

inline C3Word c2_to_c3(C2Elt u) {
  return C3Word(u.p(), u.m() + u.p(), u.n());
}

//! Serialization as "((m,n),(p,q))".
inline std::string to_string(C2Elt u) {
  return "((" + std::to_string(u.m()) + "," + std::to_string(u.n()) + "),("
         + std::to_string(u.p()) + "," + std::to_string(u.q()) + "))";
}

inline C2Elt parse_c2(std::string const& text) {
  std::int64_t v[4];
  std::size_t  i = 0;
  auto expect = [&](char ch) {
    if (i >= text.size() || text[i] != ch) {
      throw InvalidEntry("malformed element \"" + text + "\": expected '"
                         + std::string(1, ch) + "' at position " + std::to_string(i));
    }
    ++i;
  };
  auto number = [&]() {
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      ++i;
    }
    if (i == start) {
      throw InvalidEntry("malformed element \"" + text + "\": expected a digit at position "
                         + std::to_string(i));
    }
    return static_cast<std::int64_t>(std::strtoll(text.substr(start, i - start).c_str(),
                                                  nullptr, 10));
  };
  expect('(');
  expect('(');
  v[0] = number();
  expect(',');
  v[1] = number();
  expect(')');
  expect(',');
  expect('(');
  v[2] = number();
  expect(',');
  v[3] = number();
  expect(')');
  expect(')');
  if (i != text.size()) {
    throw InvalidEntry("malformed element \"" + text + "\": trailing characters");
  }
  return C2Elt(v[0], v[1], v[2], v[3]);
}

//! k-th power by repeated squaring; works for any value type with an
//! associative multiply.
template <typename Elt, typename Mul>
Elt power(Elt base, std::int64_t k, Mul&& mul) {
  if (k < 1) {
    throw InvalidEntry("power exponent must be >= 1, got " + std::to_string(k));
  }
  Elt  acc    = base;  // invariant: result = acc^remaining, folded into acc
  bool seeded = false;
  Elt  result = base;
  std::int64_t remaining = k;
  while (remaining > 0) {
    if (remaining & 1) {
      result = seeded ? mul(result, acc) : acc;
      seeded = true;
    }
    remaining >>= 1;
    if (remaining > 0) {
      acc = mul(acc, acc);
    }
  }
  return result;
}

inline C2Elt c2_power(C2Elt u, std::int64_t k) {
  return power(u, k, [](C2Elt a, C2Elt b) { return c2_mul(a, b); });
}

struct OrderEvidence {
  bool all_distinct    = false;
  bool none_idempotent = false;
  int  horizon         = 0;

  bool passed() const { return all_distinct && none_idempotent; }
};

//! Computes s, s^2, ..., s^K and reports whether they are pairwise
//! distinct and all non-idempotent. Bounded evidence of infinite order,
//! not a proof.
template <typename Elt, typename Mul>
OrderEvidence order_evidence(Elt s, int horizon, Mul&& mul) {
  OrderEvidence    ev{true, true, horizon};
  std::vector<Elt> powers;
  Elt              cur = s;
  for (int i = 1; i <= horizon; ++i) {
    for (Elt const& seen : powers) {
      if (seen == cur) {
        ev.all_distinct = false;
      }
    }
    if (mul(cur, cur) == cur) {
      ev.none_idempotent = false;
    }
    powers.push_back(cur);
    if (i < horizon) {
      cur = mul(cur, s);
    }
  }
  return ev;
}

}  // namespace sublat

#endif  // SUBLAT_MONOGENIC_HPP_
