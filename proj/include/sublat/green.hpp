#ifndef SUBLAT_GREEN_HPP_
#define SUBLAT_GREEN_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "elem-set.hpp"
#include "exceptions.hpp"
#include "semigroup.hpp"

namespace sublat {

//! The five Green partitions of a finite semigroup. Classes are listed in
//! order of their least member and each class is sorted, so the data is a
//! deterministic function of the table.
struct GreenData {
  std::vector<std::vector<int>> L, R, H, D, J;
  // element id -> class index, one vector per relation
  std::vector<int> l_of, r_of, h_of, d_of, j_of;

  bool h_trivial() const {
    return std::all_of(H.begin(), H.end(),
                       [](auto const& c) { return c.size() == 1; });
  }
};

namespace detail {

inline std::pair<std::vector<std::vector<int>>, std::vector<int>>
classes_from_keys(std::vector<ElemSet> const& key) {
  int                          n = static_cast<int>(key.size());
  std::map<ElemSet, int>       index;
  std::vector<std::vector<int>> classes;
  std::vector<int>             of(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    auto [it, fresh] = index.emplace(key[static_cast<std::size_t>(x)],
                                     static_cast<int>(classes.size()));
    if (fresh) {
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(it->second)].push_back(x);
    of[static_cast<std::size_t>(x)] = it->second;
  }
  return {std::move(classes), std::move(of)};
}

inline std::pair<std::vector<std::vector<int>>, std::vector<int>>
classes_from_labels(std::vector<int> const& label, int n) {
  std::map<int, int>            index;
  std::vector<std::vector<int>> classes;
  std::vector<int>              of(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    auto [it, fresh] = index.emplace(label[static_cast<std::size_t>(x)],
                                     static_cast<int>(classes.size()));
    if (fresh) {
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(it->second)].push_back(x);
    of[static_cast<std::size_t>(x)] = it->second;
  }
  return {std::move(classes), std::move(of)};
}

}  // namespace detail

//! L via S^1 x, R via x S^1, H = L meet R, D = join of L and R, J via
//! S^1 x S^1. For finite semigroups D = J; the two are computed separately
//! and checked against each other.
inline GreenData green(FiniteSemigroup const& S) {
  require_mask_capacity(S);
  int n = S.order();

  std::vector<ElemSet> lkey(static_cast<std::size_t>(n));
  std::vector<ElemSet> rkey(static_cast<std::size_t>(n));
  std::vector<ElemSet> jkey(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    ElemSet lx = ElemSet::single(x);
    ElemSet rx = lx;
    ElemSet jx = lx;
    for (int s = 0; s < n; ++s) {
      lx.set(S.product(s, x));
      rx.set(S.product(x, s));
      int xs = S.product(x, s);
      int sx = S.product(s, x);
      jx.set(xs);
      jx.set(sx);
      for (int t = 0; t < n; ++t) {
        jx.set(S.product(sx, t));
      }
    }
    lkey[static_cast<std::size_t>(x)] = lx;
    rkey[static_cast<std::size_t>(x)] = rx;
    jkey[static_cast<std::size_t>(x)] = jx;
  }

  GreenData g;
  std::tie(g.L, g.l_of) = detail::classes_from_keys(lkey);
  std::tie(g.R, g.r_of) = detail::classes_from_keys(rkey);

  // H: common refinement of L and R
  {
    std::vector<int> label(static_cast<std::size_t>(n));
    int              nl = static_cast<int>(g.L.size());
    for (int x = 0; x < n; ++x) {
      label[static_cast<std::size_t>(x)] =
          g.l_of[static_cast<std::size_t>(x)]
          + nl * g.r_of[static_cast<std::size_t>(x)];
    }
    std::tie(g.H, g.h_of) = detail::classes_from_labels(label, n);
  }

  // D: join of L and R via union-find over elements
  {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) {
        parent[static_cast<std::size_t>(a)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        a = parent[static_cast<std::size_t>(a)];
      }
      return a;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    };
    for (auto const& cls : g.L) {
      for (std::size_t i = 1; i < cls.size(); ++i) {
        unite(cls[0], cls[i]);
      }
    }
    for (auto const& cls : g.R) {
      for (std::size_t i = 1; i < cls.size(); ++i) {
        unite(cls[0], cls[i]);
      }
    }
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      label[static_cast<std::size_t>(x)] = find(x);
    }
    std::tie(g.D, g.d_of) = detail::classes_from_labels(label, n);
  }

  std::tie(g.J, g.j_of) = detail::classes_from_keys(jkey);

  // finite semigroups satisfy D = J
  if (g.D.size() != g.J.size() || g.d_of != g.j_of) {
    throw SublatError("internal error: D != J on a finite semigroup");
  }
  return g;
}

//! x is a group element iff its H-class contains an idempotent (that
//! H-class is then a group).
inline bool is_group_element(FiniteSemigroup const& S, GreenData const& g, int x) {
  for (int y : g.H[static_cast<std::size_t>(g.h_of[static_cast<std::size_t>(x)])]) {
    if (S.is_idempotent(y)) {
      return true;
    }
  }
  return false;
}

inline ElemSet nongroup_elements(FiniteSemigroup const& S, GreenData const& g) {
  ElemSet out;
  for (int x = 0; x < S.order(); ++x) {
    if (!is_group_element(S, g, x)) {
      out.set(x);
    }
  }
  return out;
}

}  // namespace sublat

#endif  // SUBLAT_GREEN_HPP_
