#ifndef SUBLAT_LATTICE_ISO_HPP_
#define SUBLAT_LATTICE_ISO_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "exceptions.hpp"
#include "parallel.hpp"
#include "semigroup.hpp"
#include "sublattice.hpp"

namespace sublat {

inline constexpr int kLatticeIsoNodeBound = 1 << 14;

//! A lattice isomorphism as a node-index bijection: node i of the left
//! lattice corresponds to node map[i] of the right one.
struct LatticeIso {
  std::vector<int> map;
};

//! Order-preservation in both directions, checked literally on inclusion.
inline bool is_lattice_iso(SubsemigroupLattice const& L1, SubsemigroupLattice const& L2,
                           LatticeIso const& iso) {
  int N = L1.size();
  if (L2.size() != N || static_cast<int>(iso.map.size()) != N) {
    return false;
  }
  std::vector<char> used(static_cast<std::size_t>(N), 0);
  for (int v : iso.map) {
    if (v < 0 || v >= N || used[static_cast<std::size_t>(v)]) {
      return false;
    }
    used[static_cast<std::size_t>(v)] = 1;
  }
  for (int u = 0; u < N; ++u) {
    for (int v = 0; v < N; ++v) {
      bool below1 = L1.nodes[static_cast<std::size_t>(u)].is_subset_of(
          L1.nodes[static_cast<std::size_t>(v)]);
      bool below2 = L2.nodes[static_cast<std::size_t>(iso.map[static_cast<std::size_t>(u)])]
                        .is_subset_of(L2.nodes[static_cast<std::size_t>(
                            iso.map[static_cast<std::size_t>(v)])]);
      if (below1 != below2) {
        return false;
      }
    }
  }
  return true;
}

namespace detail {

//! Node colors for iso search: start from (rank, downset, upset, cover
//! degrees) and refine by the color multisets of cover neighbors until
//! stable. Equal colors are a necessary condition for correspondence.
inline std::vector<int> refine_colors(SubsemigroupLattice const& L) {
  int              N = L.size();
  std::vector<int> color(static_cast<std::size_t>(N));
  {
    std::map<std::tuple<int, int, int, int, int>, int> palette;
    for (int v = 0; v < N; ++v) {
      auto key = std::make_tuple(L.rank[static_cast<std::size_t>(v)],
                                 L.downset_size[static_cast<std::size_t>(v)],
                                 L.upset_size[static_cast<std::size_t>(v)],
                                 static_cast<int>(L.covers_down[static_cast<std::size_t>(v)].size()),
                                 static_cast<int>(L.covers_up[static_cast<std::size_t>(v)].size()));
      auto [it, fresh] = palette.emplace(key, static_cast<int>(palette.size()));
      color[static_cast<std::size_t>(v)] = it->second;
      (void)fresh;
    }
  }
  for (;;) {
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> palette;
    std::vector<int> next(static_cast<std::size_t>(N));
    for (int v = 0; v < N; ++v) {
      std::vector<int> down, up;
      for (int u : L.covers_down[static_cast<std::size_t>(v)]) {
        down.push_back(color[static_cast<std::size_t>(u)]);
      }
      for (int u : L.covers_up[static_cast<std::size_t>(v)]) {
        up.push_back(color[static_cast<std::size_t>(u)]);
      }
      std::sort(down.begin(), down.end());
      std::sort(up.begin(), up.end());
      auto key = std::make_tuple(color[static_cast<std::size_t>(v)], std::move(down),
                                 std::move(up));
      auto [it, fresh] = palette.emplace(std::move(key), static_cast<int>(palette.size()));
      next[static_cast<std::size_t>(v)] = it->second;
      (void)fresh;
    }
    bool stable = std::equal(color.begin(), color.end(), next.begin());
    color = std::move(next);
    if (stable) {
      return color;
    }
  }
}

//! Color histogram, used as a cheap iso-rejection signature.
inline std::vector<int> color_signature(std::vector<int> const& colors) {
  std::vector<int> sig = colors;
  std::sort(sig.begin(), sig.end());
  return sig;
}

struct IsoSearch {
  SubsemigroupLattice const& L1;
  SubsemigroupLattice const& L2;
  std::vector<int>           c1, c2;
  std::vector<std::vector<int>> candidates;  // per L1 node, L2 nodes of equal color
  std::vector<int>           order;          // assignment order, most constrained first
  std::vector<int>           map;            // L1 -> L2, -1 unassigned
  std::vector<char>          used;           // L2 side
  std::function<bool(LatticeIso const&)> const& sink;
  bool                       stopped = false;

  IsoSearch(SubsemigroupLattice const& a, SubsemigroupLattice const& b,
            std::function<bool(LatticeIso const&)> const& cb)
      : L1(a), L2(b), sink(cb) {}

  //! Colors must match as multisets; builds candidate lists or reports
  //! impossibility.
  bool prepare() {
    int N = L1.size();
    if (L2.size() != N) {
      return false;
    }
    rekey();
    if (color_signature(c1) != color_signature(c2)) {
      return false;
    }
    candidates.assign(static_cast<std::size_t>(N), {});
    for (int v = 0; v < N; ++v) {
      for (int w = 0; w < N; ++w) {
        if (c1[static_cast<std::size_t>(v)] == c2[static_cast<std::size_t>(w)]) {
          candidates[static_cast<std::size_t>(v)].push_back(w);
        }
      }
      if (candidates[static_cast<std::size_t>(v)].empty()) {
        return false;
      }
    }
    order.resize(static_cast<std::size_t>(N));
    for (int v = 0; v < N; ++v) {
      order[static_cast<std::size_t>(v)] = v;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a2, int b2) {
      return candidates[static_cast<std::size_t>(a2)].size()
             < candidates[static_cast<std::size_t>(b2)].size();
    });
    map.assign(static_cast<std::size_t>(N), -1);
    used.assign(static_cast<std::size_t>(N), 0);
    return true;
  }

  //! Computes comparable colors for both sides at once by running the
  //! refinement on the disjoint union of the two cover digraphs.
  void rekey() {
    int N = L1.size();
    // colors refined on the disjoint union of the two cover digraphs give
    // directly comparable values
    std::vector<std::vector<int>> down(static_cast<std::size_t>(2) * N),
        up(static_cast<std::size_t>(2) * N);
    std::vector<std::tuple<int, int, int, int, int>> base(static_cast<std::size_t>(2) * N);
    for (int v = 0; v < N; ++v) {
      down[static_cast<std::size_t>(v)] = L1.covers_down[static_cast<std::size_t>(v)];
      up[static_cast<std::size_t>(v)]   = L1.covers_up[static_cast<std::size_t>(v)];
      base[static_cast<std::size_t>(v)] =
          std::make_tuple(L1.rank[static_cast<std::size_t>(v)],
                          L1.downset_size[static_cast<std::size_t>(v)],
                          L1.upset_size[static_cast<std::size_t>(v)],
                          static_cast<int>(L1.covers_down[static_cast<std::size_t>(v)].size()),
                          static_cast<int>(L1.covers_up[static_cast<std::size_t>(v)].size()));
    }
    for (int v = 0; v < N; ++v) {
      auto shift = [N](std::vector<int> xs) {
        for (int& x : xs) {
          x += N;
        }
        return xs;
      };
      down[static_cast<std::size_t>(N + v)] =
          shift(L2.covers_down[static_cast<std::size_t>(v)]);
      up[static_cast<std::size_t>(N + v)] = shift(L2.covers_up[static_cast<std::size_t>(v)]);
      base[static_cast<std::size_t>(N + v)] =
          std::make_tuple(L2.rank[static_cast<std::size_t>(v)],
                          L2.downset_size[static_cast<std::size_t>(v)],
                          L2.upset_size[static_cast<std::size_t>(v)],
                          static_cast<int>(L2.covers_down[static_cast<std::size_t>(v)].size()),
                          static_cast<int>(L2.covers_up[static_cast<std::size_t>(v)].size()));
    }
    int              M = 2 * N;
    std::vector<int> color(static_cast<std::size_t>(M));
    {
      std::map<std::tuple<int, int, int, int, int>, int> palette;
      for (int v = 0; v < M; ++v) {
        auto [it, fresh] = palette.emplace(base[static_cast<std::size_t>(v)],
                                           static_cast<int>(palette.size()));
        color[static_cast<std::size_t>(v)] = it->second;
        (void)fresh;
      }
    }
    for (;;) {
      std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> palette;
      std::vector<int> next(static_cast<std::size_t>(M));
      for (int v = 0; v < M; ++v) {
        std::vector<int> dc, uc;
        for (int u : down[static_cast<std::size_t>(v)]) {
          dc.push_back(color[static_cast<std::size_t>(u)]);
        }
        for (int u : up[static_cast<std::size_t>(v)]) {
          uc.push_back(color[static_cast<std::size_t>(u)]);
        }
        std::sort(dc.begin(), dc.end());
        std::sort(uc.begin(), uc.end());
        auto key = std::make_tuple(color[static_cast<std::size_t>(v)], std::move(dc),
                                   std::move(uc));
        auto [it, fresh] = palette.emplace(std::move(key), static_cast<int>(palette.size()));
        next[static_cast<std::size_t>(v)] = it->second;
        (void)fresh;
      }
      bool stable = std::equal(color.begin(), color.end(), next.begin());
      color = std::move(next);
      if (stable) {
        break;
      }
    }
    c1.assign(color.begin(), color.begin() + N);
    c2.assign(color.begin() + N, color.end());
  }

  bool cover_in(std::vector<int> const& xs, int v) const {
    return std::binary_search(xs.begin(), xs.end(), v);
  }

  //! Cover edges between v and every already-assigned node must agree
  //! with those between w and the corresponding images, in both
  //! directions; that makes any completed map cover-preserving both ways.
  bool consistent(int v, int w) const {
    for (std::size_t i = 0; i < map.size(); ++i) {
      int u = static_cast<int>(i);
      int m = map[i];
      if (m < 0) {
        continue;
      }
      bool d1 = cover_in(L1.covers_down[static_cast<std::size_t>(v)], u);
      bool d2 = cover_in(L2.covers_down[static_cast<std::size_t>(w)], m);
      if (d1 != d2) {
        return false;
      }
      bool u1 = cover_in(L1.covers_up[static_cast<std::size_t>(v)], u);
      bool u2 = cover_in(L2.covers_up[static_cast<std::size_t>(w)], m);
      if (u1 != u2) {
        return false;
      }
    }
    return true;
  }

  void run(std::size_t depth) {
    if (stopped) {
      return;
    }
    if (depth == order.size()) {
      LatticeIso iso{map};
      if (!sink(iso)) {
        stopped = true;
      }
      return;
    }
    int v = order[depth];
    for (int w : candidates[static_cast<std::size_t>(v)]) {
      if (used[static_cast<std::size_t>(w)] || !consistent(v, w)) {
        continue;
      }
      map[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      run(depth + 1);
      used[static_cast<std::size_t>(w)] = 0;
      map[static_cast<std::size_t>(v)] = -1;
      if (stopped) {
        return;
      }
    }
  }
};

}  // namespace detail

//! Exhaustive, duplicate-free stream of all lattice isomorphisms; the
//! callback may return false to stop. Completed maps are cover-preserving
//! both ways by the incremental consistency check.
inline void all_lattice_isos(SubsemigroupLattice const& L1, SubsemigroupLattice const& L2,
                             std::function<bool(LatticeIso const&)> const& sink) {
  if (L1.size() > kLatticeIsoNodeBound || L2.size() > kLatticeIsoNodeBound) {
    throw TooLarge("lattice isomorphism search limited to "
                   + std::to_string(kLatticeIsoNodeBound) + " nodes");
  }
  detail::IsoSearch search(L1, L2, sink);
  if (!search.prepare()) {
    return;
  }
  search.run(0);
}

//! First isomorphism in deterministic search order, if any.
inline std::optional<LatticeIso> lattice_iso(SubsemigroupLattice const& L1,
                                             SubsemigroupLattice const& L2) {
  std::optional<LatticeIso> found;
  all_lattice_isos(L1, L2, [&](LatticeIso const& iso) {
    found = iso;
    return false;
  });
  if (found && !is_lattice_iso(L1, L2, *found)) {
    throw SublatError("internal error: search returned a non-isomorphism");
  }
  return found;
}

//! An element-level map claimed to realize a lattice isomorphism, with
//! the result of the full UPhi = Uphi verification.
struct InducedBijection {
  std::vector<int> phi;       // element of S -> element of T
  bool             induces = false;
  std::string      diagnostic;
};

//! The image of node U under phi, as a mask over T's elements.
inline ElemSet apply_elementwise(std::vector<int> const& phi, ElemSet const& u) {
  ElemSet out;
  u.for_each([&](int x) { out.set(phi[static_cast<std::size_t>(x)]); });
  return out;
}

//! Literal check of the induction property: U Phi = U phi for every node.
inline bool is_induced_by(SubsemigroupLattice const& L1, SubsemigroupLattice const& L2,
                          LatticeIso const& iso, std::vector<int> const& phi) {
  for (int v = 0; v < L1.size(); ++v) {
    ElemSet image = apply_elementwise(phi, L1.nodes[static_cast<std::size_t>(v)]);
    if (!(image == L2.nodes[static_cast<std::size_t>(iso.map[static_cast<std::size_t>(v)])])) {
      return false;
    }
  }
  return true;
}

//! Attempts the inducing bijection via the generator formula: phi(x) is
//! the unique y whose generated subsemigroup is the Phi-image of the one
//! x generates. Absent when some image is not monogenic with a unique
//! generator, which finite non-band inputs can produce.
inline std::optional<InducedBijection> induced_bijection(SubsemigroupLattice const& L1,
                                                         SubsemigroupLattice const& L2,
                                                         LatticeIso const& iso) {
  int              n1 = L1.ground.order();
  int              n2 = L2.ground.order();
  InducedBijection out;
  out.phi.assign(static_cast<std::size_t>(n1), -1);
  for (int x = 0; x < n1; ++x) {
    int node = L1.index_of(generate(L1.ground, ElemSet::single(x)));
    if (node < 0) {
      throw SublatError("internal error: a monogenic subsemigroup escaped the lattice");
    }
    ElemSet          image = L2.nodes[static_cast<std::size_t>(
        iso.map[static_cast<std::size_t>(node)])];
    std::vector<int> gens;
    for (int y = 0; y < n2; ++y) {
      if (generate(L2.ground, ElemSet::single(y)) == image) {
        gens.push_back(y);
      }
    }
    if (gens.size() != 1) {
      return std::nullopt;
    }
    out.phi[static_cast<std::size_t>(x)] = gens[0];
  }
  std::vector<char> hit(static_cast<std::size_t>(n2), 0);
  for (int y : out.phi) {
    if (hit[static_cast<std::size_t>(y)]) {
      return std::nullopt;
    }
    hit[static_cast<std::size_t>(y)] = 1;
  }
  if (n1 != n2) {
    return std::nullopt;
  }
  out.induces = is_induced_by(L1, L2, iso, out.phi);
  out.diagnostic = out.induces ? "verified on every node"
                               : "constructed but some node image differs";
  return out;
}

//! Sweep for the lattice-closedness of bands: no semigroup may be lattice
//! isomorphic to a band without being a band itself.
struct BandClosureReport {
  int                              corpus_size = 0;
  std::vector<std::pair<int, int>> iso_pairs;   // lattice-isomorphic corpus pairs
  std::vector<std::pair<int, int>> violations;  // pairs breaking closedness

  bool passed() const { return violations.empty(); }
};

inline BandClosureReport band_closure_check(std::vector<FiniteSemigroup> const& corpus,
                                            int threads = 1,
                                            int sub_bound = kSubLatticeBound) {
  int                              n = static_cast<int>(corpus.size());
  std::vector<SubsemigroupLattice> lattices;
  std::vector<char>                band(static_cast<std::size_t>(n), 0);
  lattices.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    lattices.push_back(sub_lattice(corpus[static_cast<std::size_t>(i)], sub_bound));
    band[static_cast<std::size_t>(i)] = classify(corpus[static_cast<std::size_t>(i)]).is_band;
  }
  std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    signature[static_cast<std::size_t>(i)] =
        detail::color_signature(detail::refine_colors(lattices[static_cast<std::size_t>(i)]));
  }

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (lattices[static_cast<std::size_t>(i)].size()
              == lattices[static_cast<std::size_t>(j)].size()
          && signature[static_cast<std::size_t>(i)] == signature[static_cast<std::size_t>(j)]) {
        pairs.emplace_back(i, j);
      }
    }
  }
  std::vector<char> found(pairs.size(), 0);
  parallel_for(static_cast<int>(pairs.size()), threads, [&](int idx) {
    auto [i, j] = pairs[static_cast<std::size_t>(idx)];
    found[static_cast<std::size_t>(idx)] =
        lattice_iso(lattices[static_cast<std::size_t>(i)],
                    lattices[static_cast<std::size_t>(j)])
            .has_value();
  });

  BandClosureReport rep;
  rep.corpus_size = n;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    if (!found[idx]) {
      continue;
    }
    rep.iso_pairs.push_back(pairs[idx]);
    auto [i, j] = pairs[idx];
    if (band[static_cast<std::size_t>(i)] != band[static_cast<std::size_t>(j)]) {
      rep.violations.push_back(pairs[idx]);
    }
  }
  return rep;
}

}  // namespace sublat

#endif  // SUBLAT_LATTICE_ISO_HPP_
