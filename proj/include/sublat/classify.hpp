#ifndef SUBLAT_CLASSIFY_HPP_
#define SUBLAT_CLASSIFY_HPP_

#include <vector>

#include "elem-set.hpp"
#include "green.hpp"
#include "semigroup.hpp"

namespace sublat {

//! V_S(x): all y with xyx = x and yxy = y. Empty iff x is not regular.
inline ElemSet inverses(FiniteSemigroup const& S, int x) {
  ElemSet v;
  for (int y = 0; y < S.order(); ++y) {
    if (S.product(S.product(x, y), x) == x && S.product(S.product(y, x), y) == y) {
      v.set(y);
    }
  }
  return v;
}

//! o(x) = |<x>|.
inline int element_order(FiniteSemigroup const& S, int x) {
  require_mask_capacity(S);
  ElemSet seen = ElemSet::single(x);
  int     p    = x;
  while (true) {
    p = S.product(p, x);
    if (seen.test(p)) {
      return seen.count();
    }
    seen.set(p);
  }
}

struct PropertyReport {
  bool is_band             = false;
  bool is_semilattice      = false;
  bool is_rectangular_band = false;
  bool is_regular          = false;
  bool is_inverse          = false;
  bool is_orthodox         = false;
  bool is_group            = false;
  bool is_completely_simple = false;
  bool is_combinatorial    = false;
  bool is_torsion_free     = false;
  std::vector<int> element_orders;
};

//! All flags computed exactly by exhaustive checks over the table.
inline PropertyReport classify(FiniteSemigroup const& S) {
  int            n = S.order();
  PropertyReport r;

  ElemSet idem = S.idempotents();
  r.is_band    = idem.count() == n;

  bool commutative = true;
  for (int x = 0; x < n && commutative; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (S.product(x, y) != S.product(y, x)) {
        commutative = false;
        break;
      }
    }
  }
  r.is_semilattice = r.is_band && commutative;

  if (r.is_band) {
    r.is_rectangular_band = true;
    for (int x = 0; x < n && r.is_rectangular_band; ++x) {
      for (int y = 0; y < n; ++y) {
        if (S.product(S.product(x, y), x) != x) {
          r.is_rectangular_band = false;
          break;
        }
      }
    }
  }

  r.is_regular = true;
  r.is_inverse = true;
  for (int x = 0; x < n; ++x) {
    int nv = inverses(S, x).count();
    if (nv == 0) {
      r.is_regular = false;
    }
    if (nv != 1) {
      r.is_inverse = false;
    }
  }

  // orthodox: regular with E_S closed under the product
  bool idem_closed = true;
  for (int e = 0; e < n && idem_closed; ++e) {
    if (!idem.test(e)) {
      continue;
    }
    for (int f = 0; f < n; ++f) {
      if (idem.test(f) && !idem.test(S.product(e, f))) {
        idem_closed = false;
        break;
      }
    }
  }
  r.is_orthodox = r.is_regular && idem_closed;

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x) {
      if (S.product(e, x) != x || S.product(x, e) != x) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity >= 0) {
    r.is_group = true;
    for (int x = 0; x < n && r.is_group; ++x) {
      bool inv = false;
      for (int y = 0; y < n; ++y) {
        if (S.product(x, y) == identity && S.product(y, x) == identity) {
          inv = true;
          break;
        }
      }
      r.is_group = inv;
    }
  }

  GreenData g          = green(S);
  r.is_completely_simple = g.J.size() == 1 && !idem.empty();
  r.is_combinatorial     = g.h_trivial();

  // every nonidempotent element of a finite semigroup has finite order, so
  // torsion-free reduces to "no nonidempotent elements"
  r.is_torsion_free = r.is_band;

  r.element_orders.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    r.element_orders.push_back(element_order(S, x));
  }
  return r;
}

}  // namespace sublat

#endif  // SUBLAT_CLASSIFY_HPP_
