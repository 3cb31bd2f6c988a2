#ifndef SUBLAT_ENUMERATE_HPP_
#define SUBLAT_ENUMERATE_HPP_

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "exceptions.hpp"
#include "semigroup.hpp"

namespace sublat {

namespace detail {

//! Lexicographically least row-major table over all relabelings of t.
//! Exhaustive permutation scan with early-exit comparison; fine for the
//! orders this library enumerates (n <= 6).
inline std::vector<int> min_relabeling(std::vector<int> const& t, int n) {
  std::vector<int> best = t;
  if (n <= 1) {
    return best;
  }
  std::vector<int> p(static_cast<std::size_t>(n));       // new label -> old id
  std::vector<int> sigma(static_cast<std::size_t>(n));   // old id -> new label
  std::iota(p.begin(), p.end(), 0);
  auto at = [&](int a, int b) {
    return t[static_cast<std::size_t>(a) * n + b];
  };
  while (std::next_permutation(p.begin(), p.end())) {
    for (int i = 0; i < n; ++i) {
      sigma[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
    }
    int cmp = 0;  // -1 candidate smaller, +1 larger
    for (int i = 0; i < n && cmp == 0; ++i) {
      for (int j = 0; j < n; ++j) {
        int v = sigma[static_cast<std::size_t>(
            at(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]))];
        int b = best[static_cast<std::size_t>(i) * n + j];
        if (v != b) {
          cmp = v < b ? -1 : 1;
          break;
        }
      }
    }
    if (cmp < 0) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          best[static_cast<std::size_t>(i) * n + j] = sigma[static_cast<std::size_t>(
              at(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]))];
        }
      }
    }
  }
  return best;
}

inline std::vector<int> transpose_table(std::vector<int> const& t, int n) {
  std::vector<int> d(t.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      d[static_cast<std::size_t>(i) * n + j] = t[static_cast<std::size_t>(j) * n + i];
    }
  }
  return d;
}

}  // namespace detail

//! A multiplication table in canonical form: the least table, row-major
//! lexicographically, among all relabelings. Isomorphic semigroups share
//! one canonical table; canonicalizing is idempotent.
struct CanonicalTable {
  int              order = 0;
  std::vector<int> table;
  bool             self_dual = false;

  bool operator==(CanonicalTable const& o) const {
    return order == o.order && table == o.table;
  }
  bool operator<(CanonicalTable const& o) const {
    return order != o.order ? order < o.order : table < o.table;
  }
};

inline CanonicalTable canonical_form(FiniteSemigroup const& S) {
  int  n = S.order();
  auto c = detail::min_relabeling(S.flat_table(), n);
  auto d = detail::min_relabeling(detail::transpose_table(S.flat_table(), n), n);
  return CanonicalTable{n, c, c == d};
}

enum class IsoResult { isomorphic, antiisomorphic_only, neither };

inline char const* to_string(IsoResult r) {
  switch (r) {
    case IsoResult::isomorphic: return "isomorphic";
    case IsoResult::antiisomorphic_only: return "antiisomorphic-only";
    default: return "neither";
  }
}

//! Distinguishes S ~ T, S ~ dual of T only, or neither, by comparing
//! canonical tables.
inline IsoResult iso_test(FiniteSemigroup const& S, FiniteSemigroup const& T) {
  if (S.order() != T.order()) {
    return IsoResult::neither;
  }
  int  n  = S.order();
  auto cs = detail::min_relabeling(S.flat_table(), n);
  if (cs == detail::min_relabeling(T.flat_table(), n)) {
    return IsoResult::isomorphic;
  }
  if (cs == detail::min_relabeling(detail::transpose_table(T.flat_table(), n), n)) {
    return IsoResult::antiisomorphic_only;
  }
  return IsoResult::neither;
}

enum class EnumMode { iso, iso_or_anti };

inline constexpr int kEnumDefaultCeiling = 5;

namespace detail {

//! Associativity of every triple all of whose lookups became defined when
//! entry (i, j) was set. Four roles the new entry can play; each scan only
//! touches triples that are fully determined.
inline bool assoc_compatible(std::vector<int> const& t, int n, int i, int j) {
  auto at = [&](int a, int b) {
    return t[static_cast<std::size_t>(a) * n + b];
  };
  int v = at(i, j);
  // (i, j, c): new entry is the inner left product
  for (int c = 0; c < n; ++c) {
    int jc = at(j, c);
    if (jc < 0) {
      continue;
    }
    int l = at(v, c);
    int r = at(i, jc);
    if (l >= 0 && r >= 0 && l != r) {
      return false;
    }
  }
  // (a, i, j): new entry is the inner right product
  for (int a = 0; a < n; ++a) {
    int ai = at(a, i);
    if (ai < 0) {
      continue;
    }
    int l = at(ai, j);
    int r = at(a, v);
    if (l >= 0 && r >= 0 && l != r) {
      return false;
    }
  }
  // (a, b, j) with ab = i: new entry is the outer left lookup
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (at(a, b) != i) {
        continue;
      }
      int bj = at(b, j);
      if (bj < 0) {
        continue;
      }
      int r = at(a, bj);
      if (r >= 0 && r != v) {
        return false;
      }
    }
  }
  // (i, b, c) with bc = j: new entry is the outer right lookup
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      if (at(b, c) != j) {
        continue;
      }
      int ib = at(i, b);
      if (ib < 0) {
        continue;
      }
      int l = at(ib, c);
      if (l >= 0 && l != v) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

//! Streams one representative per isomorphism class (or per class under
//! isomorphism-or-antiisomorphism) of the semigroups of order n, in
//! lexicographic table order. The representative is its own class key, so
//! a single canonicality test replaces pairwise comparisons. The callback
//! may return false to stop early. Orders above 5 explode combinatorially;
//! n = 6 runs for hours and must be opted into.
inline void enumerate_semigroups(int n, EnumMode mode,
                                 std::function<bool(FiniteSemigroup const&)> const& emit,
                                 bool allow_order_6 = false) {
  if (n <= 0) {
    throw SizeZero();
  }
  int ceiling = allow_order_6 ? 6 : kEnumDefaultCeiling;
  if (n > ceiling) {
    throw TooLarge("enumeration limited to order " + std::to_string(ceiling)
                   + ", got " + std::to_string(n));
  }

  std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
  bool             stop = false;

  auto is_class_key = [&]() {
    auto c = detail::min_relabeling(t, n);
    if (mode == EnumMode::iso_or_anti) {
      auto cd = detail::min_relabeling(detail::transpose_table(t, n), n);
      if (cd < c) {
        c = std::move(cd);
      }
    }
    return c == t;
  };

  auto rec = [&](auto&& self, int pos) -> void {
    if (stop) {
      return;
    }
    if (pos == n * n) {
      if (is_class_key() && !emit(FiniteSemigroup(n, t))) {
        stop = true;
      }
      return;
    }
    int i = pos / n;
    int j = pos % n;
    for (int v = 0; v < n && !stop; ++v) {
      t[static_cast<std::size_t>(pos)] = v;
      if (detail::assoc_compatible(t, n, i, j)) {
        self(self, pos + 1);
      }
    }
    t[static_cast<std::size_t>(pos)] = -1;
  };
  rec(rec, 0);
}

inline std::vector<FiniteSemigroup> all_semigroups(int n, EnumMode mode,
                                                   bool allow_order_6 = false) {
  std::vector<FiniteSemigroup> out;
  enumerate_semigroups(n, mode, [&](FiniteSemigroup const& S) {
    out.push_back(S);
    return true;
  }, allow_order_6);
  return out;
}

}  // namespace sublat

#endif  // SUBLAT_ENUMERATE_HPP_
