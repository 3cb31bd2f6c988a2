#ifndef SUBLAT_SUITES_HPP_
#define SUBLAT_SUITES_HPP_

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bicyclic.hpp"
#include "classify.hpp"
#include "congruence.hpp"
#include "corpus.hpp"
#include "enumerate.hpp"
#include "exceptions.hpp"
#include "green.hpp"
#include "lattice-iso.hpp"
#include "monogenic.hpp"
#include "rho.hpp"
#include "semigroup.hpp"
#include "structure.hpp"
#include "sublattice.hpp"

namespace sublat {

enum class CheckStatus { pass, fail, skipped };

inline char const* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    default: return "skipped";
  }
}

struct SuiteCheck {
  std::string id;
  CheckStatus status;
  std::string witness;  // failure witness, measurement, or skip reason
};

struct SuiteReport {
  std::string             name;
  std::vector<SuiteCheck> checks;
  double                  seconds = 0.0;

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](SuiteCheck const& c) {
      return c.status == CheckStatus::fail;
    });
  }
};

namespace detail {

inline void check(std::vector<SuiteCheck>& out, std::string id, bool ok,
                  std::string witness) {
  out.push_back({std::move(id), ok ? CheckStatus::pass : CheckStatus::fail,
                 std::move(witness)});
}

//! Pair arithmetic vs the presentation <a,b | aba=a, bab=b, a2b=a, ab2=b>
//! on every word of length at most 8: all 3^8 - 1 = 6560 nonempty padded
//! strings over {a, b, blank} are reduced both ways.
inline std::vector<SuiteCheck> suite_bicyclic_presentation(int) {
  std::vector<SuiteCheck> out;
  int words = 0, mismatches = 0;
  for (int code = 1; code < 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3; ++code) {
    std::string word;
    int         c = code;
    for (int i = 0; i < 8; ++i) {
      int digit = c % 3;
      c /= 3;
      if (digit == 1) {
        word += 'a';
      } else if (digit == 2) {
        word += 'b';
      }
    }
    if (word.empty()) {
      continue;
    }
    ++words;
    BicyclicElt direct  = bicyclic_eval_word(word);
    BicyclicElt reduced = bicyclic_parse_normal_form(bicyclic_normal_form(word));
    if (!(direct == reduced)) {
      ++mismatches;
    }
  }
  check(out, "word-agreement", words == 6560 && mismatches == 0,
        std::to_string(words) + " words, " + std::to_string(mismatches)
            + " mismatches");

  bool relations = bicyclic_eval_word("aba") == bicyclic_eval_word("a")
                   && bicyclic_eval_word("bab") == bicyclic_eval_word("b")
                   && bicyclic_eval_word("aab") == bicyclic_eval_word("a")
                   && bicyclic_eval_word("abb") == bicyclic_eval_word("b");
  check(out, "defining-relations", relations, "aba=a bab=b a2b=a ab2=b");

  int roundtrips = 0, bad = 0;
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      BicyclicElt u{m, n};
      ++roundtrips;
      if (!(bicyclic_eval_word(bicyclic_word_of(u)) == u)) {
        ++bad;
      }
    }
  }
  check(out, "normal-form-roundtrip", bad == 0,
        std::to_string(roundtrips) + " elements, " + std::to_string(bad) + " bad");
  return out;
}

//! Weight-class sizes (m+1)^2 with m+1 idempotents for m = 1..6, and the
//! Rees quotient orders |M_k| = 1 + sum of (m+1)^2 for k = 1..6.
inline std::vector<SuiteCheck> suite_weight_census(int) {
  std::vector<SuiteCheck> out;
  bool        sizes_ok = true, idem_ok = true;
  std::string sizes, idems;
  for (std::int64_t m = 1; m <= 6; ++m) {
    auto         level = elements_of_weight(m);
    std::int64_t idem  = std::count_if(level.begin(), level.end(),
                                       [](C2Elt const& u) { return u.is_idempotent(); });
    sizes_ok = sizes_ok && static_cast<std::int64_t>(level.size()) == (m + 1) * (m + 1);
    idem_ok  = idem_ok && idem == m + 1;
    sizes += (m > 1 ? " " : "") + std::to_string(level.size());
    idems += (m > 1 ? " " : "") + std::to_string(idem);
  }
  check(out, "weight-class-sizes", sizes_ok, "m=1..6: " + sizes);
  check(out, "idempotent-counts", idem_ok, "m=1..6: " + idems);

  bool        orders_ok = true;
  std::string orders;
  for (std::int64_t k = 1; k <= 6; ++k) {
    std::int64_t direct  = mk_model(k).sg.order();
    std::int64_t formula = mk_order(k);
    std::int64_t summed  = 1;
    for (std::int64_t m = 1; m < k; ++m) {
      summed += (m + 1) * (m + 1);
    }
    orders_ok = orders_ok && direct == formula && direct == summed;
    orders += (k > 1 ? " " : "") + std::to_string(direct);
  }
  check(out, "mk-orders", orders_ok, "k=1..6: " + orders);
  return out;
}

//! The canonical-word conversion against evaluating x^-p x^q x^-r by pair
//! arithmetic, over every triple with q <= 8, plus both roundtrips.
inline std::vector<SuiteCheck> suite_c2_c3_bijection(int) {
  std::vector<SuiteCheck> out;
  int triples = 0, bad_eval = 0, bad_back = 0;
  for (std::int64_t q = 1; q <= 8; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      for (std::int64_t r = 0; r <= q; ++r) {
        C3Word w(p, q, r);
        ++triples;
        C2Elt oracle = word_eval(w.letters());
        if (!(c3_to_c2(w) == oracle)) {
          ++bad_eval;
        }
        if (!(c2_to_c3(c3_to_c2(w)) == w)) {
          ++bad_back;
        }
      }
    }
  }
  check(out, "word-eval-agreement", triples == 284 && bad_eval == 0,
        std::to_string(triples) + " triples, " + std::to_string(bad_eval)
            + " mismatches");
  check(out, "c3-roundtrip", bad_back == 0,
        std::to_string(triples) + " triples, " + std::to_string(bad_back) + " bad");

  int elems = 0, bad_fwd = 0;
  for (C2Elt const& u : elements_of_weight_at_most(8)) {
    ++elems;
    if (!(c3_to_c2(c2_to_c3(u)) == u)) {
      ++bad_fwd;
    }
  }
  check(out, "c2-roundtrip", bad_fwd == 0,
        std::to_string(elems) + " elements, " + std::to_string(bad_fwd) + " bad");
  return out;
}

//! For each flavor and k = 1..3: bounded compatibility of the relation,
//! the declared (l, r) values, and element-wise agreement of the quotient
//! arithmetic with the ideal-extension reconstruction.
inline std::vector<SuiteCheck> suite_rho_families(int) {
  std::vector<SuiteCheck> out;
  auto elems6 = elements_of_weight_at_most(6);
  auto elems8 = elements_of_weight_at_most(8);
  for (RhoFlavor flavor :
       {RhoFlavor::omega, RhoFlavor::inf_plus, RhoFlavor::inf_minus}) {
    for (std::int64_t k = 1; k <= 3; ++k) {
      RhoType     t{k, flavor};
      std::string tag = std::string(to_string(flavor)) + "-k" + std::to_string(k);

      int  rel_pairs = 0, incompat = 0;
      for (std::size_t i = 0; i < elems6.size(); ++i) {
        for (std::size_t j = i + 1; j < elems6.size(); ++j) {
          if (!rho_related(t, elems6[i], elems6[j])) {
            continue;
          }
          ++rel_pairs;
          for (C2Elt const& w : elems6) {
            if (!rho_related(t, c2_mul(elems6[i], w), c2_mul(elems6[j], w))
                || !rho_related(t, c2_mul(w, elems6[i]), c2_mul(w, elems6[j]))) {
              ++incompat;
            }
          }
        }
      }
      check(out, "compat-" + tag, incompat == 0,
            std::to_string(rel_pairs) + " related pairs, "
                + std::to_string(incompat) + " incompatibilities");

      LrValues lr = lr_values(t);
      bool     lr_ok = false;
      switch (flavor) {
        case RhoFlavor::omega:
          lr_ok = lr.l.value == k && lr.r.value == k;
          break;
        case RhoFlavor::inf_plus:
          lr_ok = lr.l.infinite_at_bound() && lr.r.value == k;
          break;
        default: lr_ok = lr.l.value == k && lr.r.infinite_at_bound(); break;
      }
      check(out, "lr-" + tag, lr_ok,
            "l=" + lr.l.display() + " r=" + lr.r.display());

      RhoQuotient        q(t);
      ExtensionQuotient  ext(t);
      int                pairs = 0, disagreements = 0;
      for (C2Elt const& u : elems8) {
        for (C2Elt const& v : elems8) {
          ++pairs;
          QuotientElt via_quot = q.multiply(q.class_of(u), q.class_of(v));
          QuotientElt via_ext  = ext.multiply(ext.embed(u), ext.embed(v));
          if (!(via_quot == via_ext)) {
            ++disagreements;
          }
        }
      }
      check(out, "reconstruction-" + tag, disagreements == 0,
            std::to_string(pairs) + " products, " + std::to_string(disagreements)
                + " disagreements");
    }
  }
  return out;
}

//! The maximal inverse-image congruence over every orthodox semigroup of
//! order <= 5: congruence, inverse quotient, least such, trivial meet
//! with H, and idempotent classes equal to inverse sets.
inline std::vector<SuiteCheck> suite_gamma_5(int) {
  std::vector<SuiteCheck> out;
  int  orthodox = 0;
  int  bad_cong = 0, bad_inverse = 0, bad_least = 0, bad_h = 0, bad_vsets = 0;
  for (int n = 1; n <= 5; ++n) {
    for (FiniteSemigroup const& S : corpus(n, EnumMode::iso)) {
      if (!classify(S).is_orthodox) {
        continue;
      }
      ++orthodox;
      CongruencePartition g = gamma(S);
      if (!is_congruence(S, g)) {
        ++bad_cong;
      }
      if (!classify(quotient(S, g)).is_inverse) {
        ++bad_inverse;
      }
      for (CongruencePartition const& rho : congruences(S)) {
        if (classify(quotient(S, rho)).is_inverse && !g.refines(rho)) {
          ++bad_least;
        }
      }
      GreenData gr = green(S);
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          if (g.related(x, y)
              && gr.h_of[static_cast<std::size_t>(x)]
                     == gr.h_of[static_cast<std::size_t>(y)]) {
            ++bad_h;
          }
        }
      }
      for (int e = 0; e < n; ++e) {
        if (!S.is_idempotent(e)) {
          continue;
        }
        ElemSet cls;
        for (int x = 0; x < n; ++x) {
          if (g.related(x, e)) {
            cls.set(x);
          }
        }
        if (!(cls == inverses(S, e))) {
          ++bad_vsets;
        }
      }
    }
  }
  std::string base = std::to_string(orthodox) + " orthodox semigroups, ";
  check(out, "gamma-is-congruence", orthodox > 0 && bad_cong == 0,
        base + std::to_string(bad_cong) + " failures");
  check(out, "quotient-is-inverse", bad_inverse == 0,
        base + std::to_string(bad_inverse) + " failures");
  check(out, "gamma-is-least", bad_least == 0,
        base + std::to_string(bad_least) + " failures");
  check(out, "gamma-meet-h-trivial", bad_h == 0,
        base + std::to_string(bad_h) + " failures");
  check(out, "idempotent-classes-are-inverse-sets", bad_vsets == 0,
        base + std::to_string(bad_vsets) + " failures");
  return out;
}

//! Lattice-closedness of the band class over all semigroups of order
//! <= 4 up to isomorphism or antiisomorphism.
inline std::vector<SuiteCheck> suite_band_lattice_closed_4(int threads) {
  std::vector<SuiteCheck>      out;
  std::vector<FiniteSemigroup> all;
  for (int n = 1; n <= 4; ++n) {
    auto const& part = corpus(n, EnumMode::iso_or_anti);
    all.insert(all.end(), part.begin(), part.end());
  }
  BandClosureReport rep = band_closure_check(all, threads);
  check(out, "corpus-size", rep.corpus_size == 149,
        std::to_string(rep.corpus_size) + " semigroups of order <= 4");
  check(out, "iso-pairs-found", !rep.iso_pairs.empty(),
        std::to_string(rep.iso_pairs.size()) + " lattice-isomorphic pairs");
  check(out, "no-violations", rep.passed(),
        std::to_string(rep.violations.size()) + " band/non-band pairs");
  return out;
}

//! {a, b, ab, ba} is a D-class of <a, b> with ideal complement, for every
//! nongroup element a and inverse b across orthodox order <= 5.
inline std::vector<SuiteCheck> suite_monogenic_shadow_5(int) {
  std::vector<SuiteCheck> out;
  int instances = 0, failures = 0;
  for (int n = 1; n <= 5; ++n) {
    for (FiniteSemigroup const& S : corpus(n, EnumMode::iso)) {
      if (!classify(S).is_orthodox) {
        continue;
      }
      GreenData g = green(S);
      for (int a = 0; a < n; ++a) {
        if (is_group_element(S, g, a)) {
          continue;
        }
        for (int b : inverses(S, a).to_vector()) {
          ++instances;
          if (!monogenic_shadow_check(S, a, b).passed()) {
            ++failures;
          }
        }
      }
    }
  }
  check(out, "instances-exist", instances > 0,
        std::to_string(instances) + " (S, a, b) instances");
  check(out, "quad-dclass-and-ideal", failures == 0,
        std::to_string(instances) + " instances, " + std::to_string(failures)
            + " failures");
  return out;
}

namespace kd {

//! Re-verifies a decomposition independently: the witness must be a
//! bijective homomorphism from the kernel onto group x band.
inline bool witness_ok(KernelDecomposition const& kd) {
  int nk = kd.kernel.order();
  if (kd.product.order() != nk
      || static_cast<int>(kd.witness.size()) != nk) {
    return false;
  }
  std::vector<char> hit(static_cast<std::size_t>(nk), 0);
  for (int v : kd.witness) {
    if (v < 0 || v >= nk || hit[static_cast<std::size_t>(v)]) {
      return false;
    }
    hit[static_cast<std::size_t>(v)] = 1;
  }
  for (int x = 0; x < nk; ++x) {
    for (int y = 0; y < nk; ++y) {
      if (kd.witness[static_cast<std::size_t>(kd.kernel.product(x, y))]
          != kd.product.product(kd.witness[static_cast<std::size_t>(x)],
                                kd.witness[static_cast<std::size_t>(y)])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace kd

//! Kernel = (group) x (rectangular band) with a verified witness, both on
//! constructed group x band instances and across the orthodox corpus, and
//! the gamma quotient of the kernel matches the group factor.
inline std::vector<SuiteCheck> suite_kernel_decomposition(int) {
  std::vector<SuiteCheck> out;

  std::vector<FiniteSemigroup> groups;
  for (int n = 1; n <= 4; ++n) {
    groups.push_back(FiniteSemigroup::cyclic_group(n));
  }
  groups.push_back(FiniteSemigroup::direct_product(FiniteSemigroup::cyclic_group(2),
                                                   FiniteSemigroup::cyclic_group(2)));

  int built = 0, bad_built = 0, bad_factors = 0;
  for (FiniteSemigroup const& G : groups) {
    for (int p = 1; p <= 3; ++p) {
      for (int q = 1; q <= 3; ++q) {
        FiniteSemigroup S = FiniteSemigroup::direct_product(
            G, FiniteSemigroup::rectangular_band(p, q));
        ++built;
        KernelDecomposition d = kernel_decomposition(S);
        if (static_cast<int>(d.kernel_elements.size()) != S.order()
            || !kd::witness_ok(d)) {
          ++bad_built;
        }
        if (iso_test(d.group, G) != IsoResult::isomorphic
            || iso_test(d.band, FiniteSemigroup::rectangular_band(p, q))
                   != IsoResult::isomorphic) {
          ++bad_factors;
        }
        if (iso_test(quotient(d.kernel, gamma(d.kernel)), d.group)
            != IsoResult::isomorphic) {
          ++bad_built;
        }
      }
    }
  }
  check(out, "constructed-instances", built == 45 && bad_built == 0,
        std::to_string(built) + " instances, " + std::to_string(bad_built)
            + " failures");
  check(out, "constructed-factors", bad_factors == 0,
        std::to_string(built) + " instances, " + std::to_string(bad_factors)
            + " factor mismatches");

  int corpus_count = 0, corpus_bad = 0, corpus_skipped = 0;
  for (int n = 1; n <= 5; ++n) {
    for (FiniteSemigroup const& S : corpus(n, EnumMode::iso)) {
      if (!classify(S).is_orthodox) {
        continue;
      }
      try {
        KernelDecomposition d = kernel_decomposition(S);
        ++corpus_count;
        if (!kd::witness_ok(d)
            || iso_test(quotient(d.kernel, gamma(d.kernel)), d.group)
                   != IsoResult::isomorphic) {
          ++corpus_bad;
        }
      } catch (KernelNotCompletelySimple const&) {
        ++corpus_skipped;
      }
    }
  }
  check(out, "corpus-instances", corpus_count > 0 && corpus_bad == 0,
        std::to_string(corpus_count) + " orthodox kernels, "
            + std::to_string(corpus_bad) + " failures, "
            + std::to_string(corpus_skipped) + " skipped");
  return out;
}

//! First 12 powers of every nonidempotent of weight <= 4 are pairwise
//! distinct and non-idempotent, in the free model and in each quotient
//! with k <= 3.
inline std::vector<SuiteCheck> suite_power_evidence(int) {
  std::vector<SuiteCheck> out;
  auto elems4 = elements_of_weight_at_most(4);

  int free_checked = 0, free_bad = 0;
  for (C2Elt const& u : elems4) {
    if (u.is_idempotent()) {
      continue;
    }
    ++free_checked;
    if (!order_evidence(u, 12, c2_mul).passed()) {
      ++free_bad;
    }
  }
  check(out, "free-powers", free_checked == 40 && free_bad == 0,
        std::to_string(free_checked) + " nonidempotents, "
            + std::to_string(free_bad) + " failures");

  int quot_checked = 0, quot_bad = 0, quotients = 0;
  for (RhoFlavor flavor :
       {RhoFlavor::omega, RhoFlavor::inf_plus, RhoFlavor::inf_minus}) {
    for (std::int64_t k = 1; k <= 3; ++k) {
      RhoQuotient q(RhoType{k, flavor});
      ++quotients;
      std::vector<QuotientElt> classes;
      for (C2Elt const& u : elems4) {
        QuotientElt cls = q.class_of(u);
        bool        seen = false;
        for (QuotientElt const& c : classes) {
          if (c == cls) {
            seen = true;
            break;
          }
        }
        if (!seen) {
          classes.push_back(cls);
        }
      }
      for (QuotientElt const& cls : classes) {
        if (q.is_idempotent(cls)) {
          continue;
        }
        ++quot_checked;
        auto ev = order_evidence(
            cls, 12, [&](QuotientElt const& a, QuotientElt const& b) {
              return q.multiply(a, b);
            });
        if (!ev.passed()) {
          ++quot_bad;
        }
      }
    }
  }
  check(out, "quotient-powers", quotients == 9 && quot_checked > 0 && quot_bad == 0,
        std::to_string(quot_checked) + " classes over " + std::to_string(quotients)
            + " quotients, " + std::to_string(quot_bad) + " failures");
  return out;
}

namespace oracle {

//! Independent class counter: materializes every associative table and
//! groups by trying all permutations pairwise. No sharing with the pruned
//! enumerator beyond the meaning of isomorphism.
inline std::vector<std::vector<int>> all_assoc_tables(int n) {
  std::vector<std::vector<int>> found;
  std::vector<int>              t(static_cast<std::size_t>(n) * n, 0);
  std::size_t                   cells = t.size();
  auto assoc = [&]() {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          int ab = t[static_cast<std::size_t>(a) * n + b];
          int bc = t[static_cast<std::size_t>(b) * n + c];
          if (t[static_cast<std::size_t>(ab) * n + c]
              != t[static_cast<std::size_t>(a) * n + bc]) {
            return false;
          }
        }
      }
    }
    return true;
  };
  for (;;) {
    if (assoc()) {
      found.push_back(t);
    }
    std::size_t i = 0;
    while (i < cells && t[i] == n - 1) {
      t[i++] = 0;
    }
    if (i == cells) {
      break;
    }
    ++t[i];
  }
  return found;
}

inline std::vector<int> relabel(std::vector<int> const& t, int n,
                                std::vector<int> const& p) {
  // p maps old id -> new id
  std::vector<int> out(t.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(p[static_cast<std::size_t>(i)]) * n
          + p[static_cast<std::size_t>(j)]] =
          p[static_cast<std::size_t>(t[static_cast<std::size_t>(i) * n + j])];
    }
  }
  return out;
}

inline std::vector<int> transpose(std::vector<int> const& t, int n) {
  std::vector<int> out(t.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(i) * n + j] = t[static_cast<std::size_t>(j) * n + i];
    }
  }
  return out;
}

inline bool equivalent(std::vector<int> const& s, std::vector<int> const& t, int n,
                       bool allow_anti) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> td = transpose(t, n);
  do {
    if (relabel(t, n, perm) == s) {
      return true;
    }
    if (allow_anti && relabel(td, n, perm) == s) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline int class_count(int n, bool allow_anti) {
  std::vector<std::vector<int>> reps;
  for (std::vector<int> const& t : all_assoc_tables(n)) {
    bool known = false;
    for (std::vector<int> const& r : reps) {
      if (equivalent(r, t, n, allow_anti)) {
        known = true;
        break;
      }
    }
    if (!known) {
      reps.push_back(t);
    }
  }
  return static_cast<int>(reps.size());
}

}  // namespace oracle

//! Enumeration counts for n = 2, 3 against the generate-everything
//! oracle, plus revalidation of the emitted representatives.
inline std::vector<SuiteCheck> suite_enumeration_sanity(int) {
  std::vector<SuiteCheck> out;
  for (int n : {2, 3}) {
    int pruned_iso  = static_cast<int>(corpus(n, EnumMode::iso).size());
    int pruned_anti = static_cast<int>(corpus(n, EnumMode::iso_or_anti).size());
    int oracle_iso  = oracle::class_count(n, false);
    int oracle_anti = oracle::class_count(n, true);
    check(out, "oracle-n" + std::to_string(n),
          pruned_iso == oracle_iso && pruned_anti == oracle_anti,
          "iso " + std::to_string(pruned_iso) + "/" + std::to_string(oracle_iso)
              + ", iso_or_anti " + std::to_string(pruned_anti) + "/"
              + std::to_string(oracle_anti));
  }
  int validated = 0, invalid = 0;
  for (int n = 1; n <= 4; ++n) {
    for (EnumMode mode : {EnumMode::iso, EnumMode::iso_or_anti}) {
      for (FiniteSemigroup const& S : corpus(n, mode)) {
        ++validated;
        try {
          FiniteSemigroup copy(S.order(), S.flat_table());
        } catch (SublatError const&) {
          ++invalid;
        }
      }
    }
  }
  check(out, "representatives-validate", invalid == 0,
        std::to_string(validated) + " tables revalidated, " + std::to_string(invalid)
            + " invalid");
  return out;
}

struct SuiteEntry {
  char const* name;
  std::vector<SuiteCheck> (*run)(int threads);
};

inline constexpr std::array<SuiteEntry, 10> kSuites{{
    {"bicyclic-presentation", &suite_bicyclic_presentation},
    {"weight-census", &suite_weight_census},
    {"c2-c3-bijection", &suite_c2_c3_bijection},
    {"rho-families", &suite_rho_families},
    {"gamma-5", &suite_gamma_5},
    {"band-lattice-closed-4", &suite_band_lattice_closed_4},
    {"monogenic-shadow-5", &suite_monogenic_shadow_5},
    {"kernel-decomposition", &suite_kernel_decomposition},
    {"power-evidence", &suite_power_evidence},
    {"enumeration-sanity", &suite_enumeration_sanity},
}};

}  // namespace detail

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  names.reserve(detail::kSuites.size());
  for (auto const& e : detail::kSuites) {
    names.emplace_back(e.name);
  }
  return names;
}

inline SuiteReport run_suite(std::string const& name, int threads = 1) {
  for (auto const& entry : detail::kSuites) {
    if (name == entry.name) {
      SuiteReport rep;
      rep.name   = name;
      auto start = std::chrono::steady_clock::now();
      rep.checks = entry.run(threads);
      rep.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
      return rep;
    }
  }
  throw UnknownSuite(name);
}

}  // namespace sublat

#endif  // SUBLAT_SUITES_HPP_
