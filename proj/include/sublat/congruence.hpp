#ifndef SUBLAT_CONGRUENCE_HPP_
#define SUBLAT_CONGRUENCE_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "exceptions.hpp"
#include "green.hpp"
#include "semigroup.hpp"

namespace sublat {

//! A partition of the element ids, normalized so that class labels appear
//! in first-occurrence order (class_of[0] == 0). Two partitions are equal
//! iff their normalized label vectors are.
struct CongruencePartition {
  std::vector<int> class_of;
  int              num_classes = 0;

  static CongruencePartition from_labels(std::vector<int> labels) {
    CongruencePartition p;
    p.class_of.assign(labels.size(), -1);
    // labels may be arbitrary ints, not indices, so remap through a map
    std::map<int, int> remap;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, fresh] = remap.emplace(labels[i], p.num_classes);
      if (fresh) {
        ++p.num_classes;
      }
      p.class_of[i] = it->second;
    }
    return p;
  }

  static CongruencePartition identity(int n) {
    CongruencePartition p;
    p.class_of.resize(static_cast<std::size_t>(n));
    std::iota(p.class_of.begin(), p.class_of.end(), 0);
    p.num_classes = n;
    return p;
  }

  static CongruencePartition universal(int n) {
    CongruencePartition p;
    p.class_of.assign(static_cast<std::size_t>(n), 0);
    p.num_classes = n > 0 ? 1 : 0;
    return p;
  }

  int size() const noexcept { return static_cast<int>(class_of.size()); }

  bool related(int x, int y) const {
    return class_of[static_cast<std::size_t>(x)]
           == class_of[static_cast<std::size_t>(y)];
  }

  std::vector<std::vector<int>> classes() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(num_classes));
    for (std::size_t x = 0; x < class_of.size(); ++x) {
      out[static_cast<std::size_t>(class_of[x])].push_back(static_cast<int>(x));
    }
    return out;
  }

  //! this refines other: every class of *this lies inside a class of other.
  bool refines(CongruencePartition const& other) const {
    std::vector<int> img(static_cast<std::size_t>(num_classes), -1);
    for (std::size_t x = 0; x < class_of.size(); ++x) {
      int  c = class_of[x];
      int& m = img[static_cast<std::size_t>(c)];
      int  o = other.class_of[x];
      if (m < 0) {
        m = o;
      } else if (m != o) {
        return false;
      }
    }
    return true;
  }

  bool operator==(CongruencePartition const& o) const {
    return class_of == o.class_of;
  }
  bool operator<(CongruencePartition const& o) const {
    return class_of < o.class_of;
  }
};

//! Checks the compatibility law; the first violating quadruple, if any, is
//! written to *witness.
inline bool is_congruence(FiniteSemigroup const&     S,
                          CongruencePartition const& p,
                          std::array<int, 4>*        witness = nullptr) {
  int n = S.order();
  for (int x = 0; x < n; ++x) {
    for (int x2 = x + 1; x2 < n; ++x2) {
      if (!p.related(x, x2)) {
        continue;
      }
      for (int s = 0; s < n; ++s) {
        if (!p.related(S.product(x, s), S.product(x2, s))) {
          if (witness != nullptr) {
            *witness = {x, x2, s, s};
          }
          return false;
        }
        if (!p.related(S.product(s, x), S.product(s, x2))) {
          if (witness != nullptr) {
            *witness = {s, s, x, x2};
          }
          return false;
        }
      }
    }
  }
  return true;
}

//! The least congruence relating a and b, by union-find closure.
inline CongruencePartition principal_congruence(FiniteSemigroup const& S, int a, int b) {
  int              n = S.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  std::vector<std::pair<int, int>> work;
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
      work.emplace_back(x, y);
    }
  };
  unite(a, b);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (int s = 0; s < n; ++s) {
      unite(S.product(x, s), S.product(y, s));
      unite(S.product(s, x), S.product(s, y));
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    labels[static_cast<std::size_t>(v)] = find(v);
  }
  return CongruencePartition::from_labels(std::move(labels));
}

inline constexpr int kCongruenceScanBound = 8;

//! All congruences of S, by scanning every partition in restricted-growth
//! order. Placing i into the block of an earlier j forces the whole
//! principal congruence of (i, j), which prunes most branches early.
inline std::vector<CongruencePartition> congruences(FiniteSemigroup const& S,
                                                    int bound = kCongruenceScanBound) {
  int n = S.order();
  if (n > bound) {
    throw TooLarge("congruence scan limited to order " + std::to_string(bound)
                   + ", got " + std::to_string(n));
  }

  // pc[i][j]: the principal congruence of (i, j), for pruning
  std::vector<std::vector<CongruencePartition>> pc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pc[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
    for (int j = 0; j < i; ++j) {
      pc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          principal_congruence(S, i, j);
    }
  }

  std::vector<CongruencePartition> found;
  std::vector<int>                 rgs(static_cast<std::size_t>(n), 0);

  auto rec = [&](auto&& self, int i, int max_label) -> void {
    if (i == n) {
      CongruencePartition p;
      p.class_of    = rgs;
      p.num_classes = max_label + 1;
      if (is_congruence(S, p)) {
        found.push_back(std::move(p));
      }
      return;
    }
    for (int c = 0; c <= max_label + 1; ++c) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (rgs[static_cast<std::size_t>(j)] != c) {
          continue;
        }
        // the final congruence must contain pc[i][j]; any already-placed
        // pair it relates must share a block
        auto const& forced = pc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        for (int p = 0; p < i && ok; ++p) {
          for (int q = p + 1; q <= i; ++q) {
            int qq = q == i ? -1 : rgs[static_cast<std::size_t>(q)];
            if (q == i) {
              qq = c;
            }
            if (forced.related(p, q)
                && rgs[static_cast<std::size_t>(p)] != qq) {
              ok = false;
              break;
            }
          }
        }
      }
      if (!ok) {
        continue;
      }
      rgs[static_cast<std::size_t>(i)] = c;
      self(self, i + 1, std::max(max_label, c));
    }
  };
  rec(rec, 1, 0);  // element 0 always takes label 0
  std::sort(found.begin(), found.end());
  return found;
}

//! Quotient table on the classes of rho; the natural map is then a
//! homomorphism by construction.
inline FiniteSemigroup quotient(FiniteSemigroup const&     S,
                                CongruencePartition const& rho) {
  std::array<int, 4> w{};
  if (!is_congruence(S, rho, &w)) {
    throw NotACongruence(w[0], w[1], w[2], w[3]);
  }
  int              k = rho.num_classes;
  std::vector<int> rep(static_cast<std::size_t>(k), -1);
  for (int x = 0; x < S.order(); ++x) {
    int c = rho.class_of[static_cast<std::size_t>(x)];
    if (rep[static_cast<std::size_t>(c)] < 0) {
      rep[static_cast<std::size_t>(c)] = x;
    }
  }
  std::vector<int> t(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      t[static_cast<std::size_t>(i) * k + j] =
          rho.class_of[static_cast<std::size_t>(S.product(
              rep[static_cast<std::size_t>(i)], rep[static_cast<std::size_t>(j)]))];
    }
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  auto classes = rho.classes();
  for (auto const& cls : classes) {
    std::string label = "{";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      label += (i == 0 ? "" : ",") + S.name(cls[i]);
    }
    names.push_back(label + "}");
  }
  return FiniteSemigroup(k, std::move(t), std::move(names));
}

//! gamma: x ~ y iff V(x) = V(y). Requires S orthodox. The result is
//! verified to be a congruence with an inverse quotient and, when the
//! order is within scan_bound, least among congruences with inverse
//! quotient, by exhaustive scan.
inline CongruencePartition gamma(FiniteSemigroup const& S,
                                 int                    scan_bound = kCongruenceScanBound) {
  PropertyReport props = classify(S);
  if (!props.is_orthodox) {
    throw NotOrthodox();
  }
  int                  n = S.order();
  std::vector<ElemSet> vsets(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    vsets[static_cast<std::size_t>(x)] = inverses(S, x);
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    int cls = x;
    for (int y = 0; y < x; ++y) {
      if (vsets[static_cast<std::size_t>(y)] == vsets[static_cast<std::size_t>(x)]) {
        cls = labels[static_cast<std::size_t>(y)];
        break;
      }
    }
    labels[static_cast<std::size_t>(x)] = cls;
  }
  CongruencePartition g = CongruencePartition::from_labels(std::move(labels));

  if (!is_congruence(S, g)) {
    throw SublatError("internal error: gamma is not a congruence on an orthodox input");
  }
  if (!classify(quotient(S, g)).is_inverse) {
    throw SublatError("internal error: S/gamma is not inverse on an orthodox input");
  }
  if (n <= scan_bound) {
    for (auto const& rho : congruences(S, scan_bound)) {
      if (classify(quotient(S, rho)).is_inverse && !g.refines(rho)) {
        throw SublatError("internal error: gamma is not least among inverse congruences");
      }
    }
  }
  return g;
}

}  // namespace sublat

#endif  // SUBLAT_CONGRUENCE_HPP_
