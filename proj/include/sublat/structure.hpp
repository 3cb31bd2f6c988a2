#ifndef SUBLAT_STRUCTURE_HPP_
#define SUBLAT_STRUCTURE_HPP_

#include <algorithm>
#include <array>
#include <vector>

#include "classify.hpp"
#include "congruence.hpp"
#include "elem-set.hpp"
#include "enumerate.hpp"
#include "exceptions.hpp"
#include "green.hpp"
#include "semigroup.hpp"

namespace sublat {

//! The unique minimal ideal. In a finite semigroup it equals the smallest
//! principal two-sided ideal: for z in the kernel K, the principal ideal
//! of z lies inside K, so no principal ideal is smaller than K itself.
inline ElemSet kernel(FiniteSemigroup const& S) {
  int     n = S.order();
  ElemSet best;
  for (int x = 0; x < n; ++x) {
    ElemSet ideal = ElemSet::single(x);
    for (int s = 0; s < n; ++s) {
      ideal.set(S.product(s, x));
      ideal.set(S.product(x, s));
      for (int u = 0; u < n; ++u) {
        ideal.set(S.product(s, S.product(x, u)));
      }
    }
    if (x == 0 || ideal.count() < best.count()) {
      best = ideal;
    }
  }
  return best;
}

struct KernelDecomposition {
  std::vector<int> kernel_elements;  // global ids, ascending
  FiniteSemigroup  kernel;           // K as a semigroup in its own right
  FiniteSemigroup  group;            // H-class of the least idempotent of K
  FiniteSemigroup  band;             // E_K, a rectangular band
  FiniteSemigroup  product;          // group x band
  std::vector<int> witness;          // K-local id -> product id, an isomorphism
};

//! Splits the kernel of an orthodox semigroup as (group) x (rectangular
//! band). The map sends k to the pair (e0 k e0, unique idempotent of the
//! H-class of k), e0 the least idempotent; it is checked to be a bijective
//! homomorphism onto the direct product. The maximal inverse image is
//! cross-checked: K / gamma must be isomorphic to the group factor.
inline KernelDecomposition kernel_decomposition(FiniteSemigroup const& S) {
  if (!classify(S).is_orthodox) {
    throw NotOrthodox();
  }
  ElemSet          kmask = kernel(S);
  std::vector<int> kglobal;
  FiniteSemigroup  K = subsemigroup(S, kmask, &kglobal);
  int              nk = K.order();

  GreenData kg = green(K);
  {
    PropertyReport kp = classify(K);
    bool group_h = true;
    for (int x = 0; x < nk && group_h; ++x) {
      group_h = is_group_element(K, kg, x);
    }
    if (!kp.is_completely_simple || !group_h) {
      throw KernelNotCompletelySimple();
    }
  }

  ElemSet ek = K.idempotents();
  int     e0 = ek.min();

  ElemSet hmask;
  for (int x = 0; x < nk; ++x) {
    if (kg.h_of[static_cast<std::size_t>(x)] == kg.h_of[static_cast<std::size_t>(e0)]) {
      hmask.set(x);
    }
  }
  std::vector<int> hlocal;  // H id -> K-local id
  std::vector<int> elocal;  // E_K id -> K-local id
  FiniteSemigroup  H = subsemigroup(K, hmask, &hlocal);
  FiniteSemigroup  E = subsemigroup(K, ek, &elocal);
  if (!classify(H).is_group) {
    throw KernelNotCompletelySimple();
  }
  if (!classify(E).is_rectangular_band) {
    throw SublatError("internal error: kernel idempotents of an orthodox semigroup"
                      " must form a rectangular band");
  }
  FiniteSemigroup P = FiniteSemigroup::direct_product(H, E);

  auto index_of = [](std::vector<int> const& v, int x) {
    return static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin());
  };
  std::vector<int> witness(static_cast<std::size_t>(nk), -1);
  std::vector<int> hit(static_cast<std::size_t>(P.order()), 0);
  for (int k = 0; k < nk; ++k) {
    int h = K.product(K.product(e0, k), e0);
    int f = -1;
    for (int x : ek.to_vector()) {
      if (kg.h_of[static_cast<std::size_t>(x)] == kg.h_of[static_cast<std::size_t>(k)]) {
        f = x;
        break;
      }
    }
    if (f < 0 || !hmask.test(h)) {
      throw SublatError("internal error: kernel decomposition map out of range");
    }
    int pid = index_of(hlocal, h) * E.order() + index_of(elocal, f);
    witness[static_cast<std::size_t>(k)] = pid;
    hit[static_cast<std::size_t>(pid)] += 1;
  }
  bool bijective = nk == P.order()
      && std::all_of(hit.begin(), hit.end(), [](int c) { return c == 1; });
  bool homomorphic = true;
  for (int a = 0; a < nk && homomorphic; ++a) {
    for (int b = 0; b < nk; ++b) {
      if (witness[static_cast<std::size_t>(K.product(a, b))]
          != P.product(witness[static_cast<std::size_t>(a)],
                       witness[static_cast<std::size_t>(b)])) {
        homomorphic = false;
        break;
      }
    }
  }
  if (!bijective || !homomorphic) {
    throw SublatError("internal error: kernel decomposition witness failed verification");
  }

  if (iso_test(quotient(K, gamma(K)), H) != IsoResult::isomorphic) {
    throw SublatError("internal error: kernel / gamma is not isomorphic to the group factor");
  }

  return KernelDecomposition{std::move(kglobal), std::move(K), std::move(H),
                             std::move(E),       std::move(P), std::move(witness)};
}

struct BandComponents {
  FiniteSemigroup               semilattice;         // quotient by D
  std::vector<int>              component_of;        // element -> semilattice id
  std::vector<std::vector<int>> component_elements;  // global ids per component
  std::vector<FiniteSemigroup>  components;          // each a rectangular band
};

//! Decomposes a band as a semilattice of rectangular bands: the structure
//! semilattice is the quotient by D, whose classes are the components.
//! The containment law (component of xy) = (product of components) is
//! verified for every pair.
inline BandComponents band_components(FiniteSemigroup const& S) {
  if (!classify(S).is_band) {
    throw NotABand();
  }
  GreenData           g = green(S);
  CongruencePartition d = CongruencePartition::from_labels(g.d_of);

  BandComponents out{quotient(S, d), d.class_of, d.classes(), {}};
  if (!classify(out.semilattice).is_semilattice) {
    throw SublatError("internal error: band / D is not a semilattice");
  }
  for (auto const& cls : out.component_elements) {
    FiniteSemigroup comp = subsemigroup(S, ElemSet::of(cls.begin(), cls.end()));
    if (!classify(comp).is_rectangular_band) {
      throw SublatError("internal error: a D-class of a band is not a rectangular band");
    }
    out.components.push_back(std::move(comp));
  }
  for (int x = 0; x < S.order(); ++x) {
    for (int y = 0; y < S.order(); ++y) {
      int lhs = out.component_of[static_cast<std::size_t>(S.product(x, y))];
      int rhs = out.semilattice.product(out.component_of[static_cast<std::size_t>(x)],
                                        out.component_of[static_cast<std::size_t>(y)]);
      if (lhs != rhs) {
        throw SublatError("internal error: component containment law failed");
      }
    }
  }
  return out;
}

struct MonogenicShadowReport {
  std::vector<int>   generated;             // global ids of <a, b>, ascending
  std::array<int, 4> quad;                  // a, b, ab, ba as global ids
  int                quad_size = 0;         // distinct members of the quad
  bool               quad_is_dclass = false;
  bool               complement_is_ideal = false;

  bool passed() const { return quad_is_dclass && complement_is_ideal; }
};

//! Inside T = <a, b> for a nongroup element a of an orthodox semigroup and
//! b inverse to a: checks that {a, b, ab, ba} is a D-class of T and that
//! its complement in T is an ideal of T.
inline MonogenicShadowReport monogenic_shadow_check(FiniteSemigroup const& S, int a, int b) {
  if (!classify(S).is_orthodox) {
    throw NotOrthodox();
  }
  if (!inverses(S, a).test(b)) {
    throw NotAnInverse(a, b);
  }
  {
    GreenData g = green(S);
    if (is_group_element(S, g, a)) {
      throw NotNongroup(a);
    }
  }

  MonogenicShadowReport rep;
  rep.quad = {a, b, S.product(a, b), S.product(b, a)};

  ElemSet          tmask = generate(S, ElemSet::of({a, b}));
  std::vector<int> tglobal;
  FiniteSemigroup  T = subsemigroup(S, tmask, &tglobal);
  rep.generated = tglobal;

  auto local_of = [&](int gid) {
    return static_cast<int>(std::lower_bound(tglobal.begin(), tglobal.end(), gid)
                            - tglobal.begin());
  };
  ElemSet quad_local;
  for (int gid : rep.quad) {
    quad_local.set(local_of(gid));
  }
  rep.quad_size = quad_local.count();

  GreenData tg = green(T);
  ElemSet   dclass;
  int       da = tg.d_of[static_cast<std::size_t>(local_of(a))];
  for (int x = 0; x < T.order(); ++x) {
    if (tg.d_of[static_cast<std::size_t>(x)] == da) {
      dclass.set(x);
    }
  }
  rep.quad_is_dclass = dclass == quad_local;

  ElemSet comp = ElemSet::full(T.order()) - quad_local;
  rep.complement_is_ideal = true;
  comp.for_each([&](int c) {
    for (int s = 0; s < T.order(); ++s) {
      if (!comp.test(T.product(s, c)) || !comp.test(T.product(c, s))) {
        rep.complement_is_ideal = false;
        return;
      }
    }
  });
  return rep;
}

}  // namespace sublat

#endif  // SUBLAT_STRUCTURE_HPP_
