#ifndef SUBLAT_SUBLATTICE_HPP_
#define SUBLAT_SUBLATTICE_HPP_

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "elem-set.hpp"
#include "exceptions.hpp"
#include "semigroup.hpp"

namespace sublat {

inline constexpr int kSubLatticeBound = 12;

//! The lattice of all subsemigroups of a finite semigroup, the empty one
//! included. Nodes are membership masks sorted by (size, mask), so index
//! 0 is the empty set and the last index is the whole semigroup; the
//! order relation is inclusion and the cover lists are its transitive
//! reduction.
struct SubsemigroupLattice {
  FiniteSemigroup               ground;
  std::vector<ElemSet>          nodes;
  std::vector<std::vector<int>> covers_up;    // nodes covering this one
  std::vector<std::vector<int>> covers_down;  // nodes this one covers
  std::vector<int>              rank;         // longest chain from the bottom
  std::vector<int>              downset_size; // nodes below or equal
  std::vector<int>              upset_size;   // nodes above or equal

  int size() const { return static_cast<int>(nodes.size()); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  int index_of(ElemSet const& mask) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), mask);
    if (it == nodes.end() || !(*it == mask)) {
      return -1;
    }
    return static_cast<int>(it - nodes.begin());
  }
};

//! Enumerates Sub(S) by closure growth: every subsemigroup arises by
//! adding one generator at a time to a smaller one, so breadth-first
//! expansion from the empty set by closure(U + {x}) reaches all of them.
//! Worst-case exponential, hence the order bound.
inline SubsemigroupLattice sub_lattice(FiniteSemigroup const& S,
                                       int bound = kSubLatticeBound) {
  int n = S.order();
  if (n > bound) {
    throw TooLarge("subsemigroup enumeration limited to order " + std::to_string(bound)
                   + ", got " + std::to_string(n));
  }
  require_mask_capacity(S);

  std::unordered_set<ElemSet, ElemSetHash> seen;
  std::vector<ElemSet>                     frontier{ElemSet()};
  seen.insert(ElemSet());
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (ElemSet const& u : frontier) {
      for (int x = 0; x < n; ++x) {
        if (u.test(x)) {
          continue;
        }
        ElemSet v = u;
        v.set(x);
        v = generate(S, v);
        if (seen.insert(v).second) {
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }

  SubsemigroupLattice L{S, std::vector<ElemSet>(seen.begin(), seen.end()),
                        {},     {}, {}, {}, {}};
  std::sort(L.nodes.begin(), L.nodes.end());

  int N = L.size();
  L.covers_up.resize(static_cast<std::size_t>(N));
  L.covers_down.resize(static_cast<std::size_t>(N));
  for (int v = 0; v < N; ++v) {
    // lower covers of v: maximal strict subsets, scanned largest first;
    // node order is by size, so a reverse scan visits them in order
    std::vector<int> maximal;
    for (int u = v - 1; u >= 0; --u) {
      if (!L.nodes[static_cast<std::size_t>(u)].is_subset_of(
              L.nodes[static_cast<std::size_t>(v)])
          || L.nodes[static_cast<std::size_t>(u)] == L.nodes[static_cast<std::size_t>(v)]) {
        continue;
      }
      bool below_known = false;
      for (int w : maximal) {
        if (L.nodes[static_cast<std::size_t>(u)].is_subset_of(
                L.nodes[static_cast<std::size_t>(w)])) {
          below_known = true;
          break;
        }
      }
      if (!below_known) {
        maximal.push_back(u);
      }
    }
    std::sort(maximal.begin(), maximal.end());
    for (int u : maximal) {
      L.covers_down[static_cast<std::size_t>(v)].push_back(u);
      L.covers_up[static_cast<std::size_t>(u)].push_back(v);
    }
  }

  L.rank.assign(static_cast<std::size_t>(N), 0);
  for (int v = 0; v < N; ++v) {  // index order is topological: covers grow size
    for (int u : L.covers_down[static_cast<std::size_t>(v)]) {
      L.rank[static_cast<std::size_t>(v)] =
          std::max(L.rank[static_cast<std::size_t>(v)],
                   L.rank[static_cast<std::size_t>(u)] + 1);
    }
  }
  L.downset_size.assign(static_cast<std::size_t>(N), 0);
  L.upset_size.assign(static_cast<std::size_t>(N), 0);
  for (int v = 0; v < N; ++v) {
    for (int u = 0; u < N; ++u) {
      if (L.nodes[static_cast<std::size_t>(u)].is_subset_of(
              L.nodes[static_cast<std::size_t>(v)])) {
        L.downset_size[static_cast<std::size_t>(v)] += 1;
        L.upset_size[static_cast<std::size_t>(u)] += 1;
      }
    }
  }

  // spot-check the lattice laws on a bounded, deterministic sample
  int stride = std::max(1, N / 24);
  for (int a = 0; a < N; a += stride) {
    for (int b = a; b < N; b += stride) {
      ElemSet meet = L.nodes[static_cast<std::size_t>(a)]
                     & L.nodes[static_cast<std::size_t>(b)];
      ElemSet join = generate(S, L.nodes[static_cast<std::size_t>(a)]
                                     | L.nodes[static_cast<std::size_t>(b)]);
      if (L.index_of(meet) < 0 || L.index_of(join) < 0) {
        throw SublatError("internal error: meet or join escaped the enumeration");
      }
      ElemSet absorb = generate(S, L.nodes[static_cast<std::size_t>(a)] | meet);
      if (!(absorb == L.nodes[static_cast<std::size_t>(a)])
          || !((L.nodes[static_cast<std::size_t>(a)] & join)
               == L.nodes[static_cast<std::size_t>(a)])) {
        throw SublatError("internal error: absorption law failed");
      }
    }
  }
  return L;
}

//! Meet is intersection, join is the closure of the union; both are nodes.
inline std::pair<int, int> lattice_ops(SubsemigroupLattice const& L, int a, int b) {
  ElemSet meet = L.nodes[static_cast<std::size_t>(a)] & L.nodes[static_cast<std::size_t>(b)];
  ElemSet join = generate(L.ground, L.nodes[static_cast<std::size_t>(a)]
                                        | L.nodes[static_cast<std::size_t>(b)]);
  int mi = L.index_of(meet);
  int ji = L.index_of(join);
  if (mi < 0 || ji < 0) {
    throw SublatError("internal error: meet or join is not a lattice node");
  }
  return {mi, ji};
}

inline std::string lattice_node_label(SubsemigroupLattice const& L, int v) {
  std::string label = "{";
  bool        first = true;
  L.nodes[static_cast<std::size_t>(v)].for_each([&](int x) {
    if (!first) {
      label += ",";
    }
    label += L.ground.name(x);
    first = false;
  });
  return label + "}";
}

//! DOT digraph of the cover relation, edges pointing up the order.
inline std::string lattice_dot(SubsemigroupLattice const& L) {
  std::string out = "digraph sublattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int v = 0; v < L.size(); ++v) {
    out += "  n" + std::to_string(v) + " [label=\"" + lattice_node_label(L, v) + "\"];\n";
  }
  for (int v = 0; v < L.size(); ++v) {
    for (int u : L.covers_up[static_cast<std::size_t>(v)]) {
      out += "  n" + std::to_string(v) + " -> n" + std::to_string(u) + ";\n";
    }
  }
  return out + "}\n";
}

}  // namespace sublat

#endif  // SUBLAT_SUBLATTICE_HPP_
