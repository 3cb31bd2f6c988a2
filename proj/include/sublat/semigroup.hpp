#ifndef SUBLAT_SEMIGROUP_HPP_
#define SUBLAT_SEMIGROUP_HPP_

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "elem-set.hpp"
#include "exceptions.hpp"

namespace sublat {

//! A finite semigroup given by its multiplication table over element ids
//! 0..order-1, with the row index acting as the left factor. The table is
//! validated on construction (entry range, then associativity over all
//! triples) and is immutable afterwards, so instances are safe to share
//! between threads.
class FiniteSemigroup {
 public:
  FiniteSemigroup(int                             order,
                  std::vector<std::vector<int>> const& rows,
                  std::vector<std::string>        names = {})
      : FiniteSemigroup(order, flatten(order, rows), std::move(names)) {}

  FiniteSemigroup(int order, std::vector<int> flat, std::vector<std::string> names = {})
      : order_(order), table_(std::move(flat)), names_(std::move(names)) {
    if (order_ <= 0) {
      throw SizeZero();
    }
    if (table_.size() != static_cast<std::size_t>(order_) * order_) {
      throw InvalidEntry("table has " + std::to_string(table_.size())
                         + " entries, expected " + std::to_string(order_ * order_));
    }
    for (int i = 0; i < order_; ++i) {
      for (int j = 0; j < order_; ++j) {
        int v = table_[static_cast<std::size_t>(i) * order_ + j];
        if (v < 0 || v >= order_) {
          throw InvalidEntry(i, j, v);
        }
      }
    }
    if (!names_.empty() && names_.size() != static_cast<std::size_t>(order_)) {
      throw InvalidEntry("names list has " + std::to_string(names_.size())
                         + " entries, expected " + std::to_string(order_));
    }
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b) {
        int ab = product(a, b);
        for (int c = 0; c < order_; ++c) {
          if (product(ab, c) != product(a, product(b, c))) {
            throw NotAssociative(a, b, c);
          }
        }
      }
    }
  }

  int order() const noexcept { return order_; }

  int product(int x, int y) const noexcept {
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }
  int operator()(int x, int y) const noexcept { return product(x, y); }

  std::vector<int> const& flat_table() const noexcept { return table_; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(order_);
    for (int i = 0; i < order_; ++i) {
      out[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i) * order_,
                    table_.begin() + static_cast<std::ptrdiff_t>(i + 1) * order_);
    }
    return out;
  }

  bool has_names() const noexcept { return !names_.empty(); }

  std::string name(int i) const {
    return names_.empty() ? std::to_string(i) : names_[static_cast<std::size_t>(i)];
  }

  std::vector<std::string> const& names() const noexcept { return names_; }

  bool is_idempotent(int x) const noexcept { return product(x, x) == x; }

  ElemSet idempotents() const {
    ElemSet e;
    for (int x = 0; x < order_; ++x) {
      if (is_idempotent(x)) {
        e.set(x);
      }
    }
    return e;
  }

  ElemSet universe() const { return ElemSet::full(order_); }

  //! The dual semigroup (transposed table).
  FiniteSemigroup dual() const {
    std::vector<int> t(table_.size());
    for (int i = 0; i < order_; ++i) {
      for (int j = 0; j < order_; ++j) {
        t[static_cast<std::size_t>(i) * order_ + j] = product(j, i);
      }
    }
    return FiniteSemigroup(order_, std::move(t), names_);
  }

  // Named constructions. Element ids follow the documented labeling:
  // coordinates enumerate lexicographically, chains bottom-first, cyclic
  // groups by exponent of the generator, null semigroups with 0 as the zero.

  static FiniteSemigroup left_zero(int n) {
    require_positive(n);
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        t[static_cast<std::size_t>(i) * n + j] = i;
      }
    }
    return FiniteSemigroup(n, std::move(t));
  }

  static FiniteSemigroup right_zero(int n) {
    require_positive(n);
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        t[static_cast<std::size_t>(i) * n + j] = j;
      }
    }
    return FiniteSemigroup(n, std::move(t));
  }

  static FiniteSemigroup chain_semilattice(int n) {
    require_positive(n);
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        t[static_cast<std::size_t>(i) * n + j] = i < j ? i : j;
      }
    }
    return FiniteSemigroup(n, std::move(t));
  }

  //! I x Lambda with (i,l)(j,m) = (i,m); id of (i,l) is i*q + l.
  static FiniteSemigroup rectangular_band(int p, int q) {
    require_positive(p);
    require_positive(q);
    int              n = p * q;
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < p; ++i) {
      for (int l = 0; l < q; ++l) {
        names.push_back("(" + std::to_string(i) + "," + std::to_string(l) + ")");
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int i = a / q, m = b % q;
        t[static_cast<std::size_t>(a) * n + b] = i * q + m;
      }
    }
    return FiniteSemigroup(n, std::move(t), std::move(names));
  }

  static FiniteSemigroup cyclic_group(int n) {
    require_positive(n);
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        t[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
      }
    }
    return FiniteSemigroup(n, std::move(t));
  }

  //! All products equal element 0.
  static FiniteSemigroup null_semigroup(int n) {
    require_positive(n);
    std::vector<int> t(static_cast<std::size_t>(n) * n, 0);
    return FiniteSemigroup(n, std::move(t));
  }

  //! Componentwise product; id of (a,b) is a*B.order() + b.
  static FiniteSemigroup direct_product(FiniteSemigroup const& A,
                                        FiniteSemigroup const& B) {
    int              nb = B.order();
    int              n  = A.order() * nb;
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int a = A.product(x / nb, y / nb);
        int b = B.product(x % nb, y % nb);
        t[static_cast<std::size_t>(x) * n + y] = a * nb + b;
      }
    }
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < A.order(); ++a) {
      for (int b = 0; b < nb; ++b) {
        names.push_back("(" + A.name(a) + "," + B.name(b) + ")");
      }
    }
    return FiniteSemigroup(n, std::move(t), std::move(names));
  }

 private:
  static void require_positive(int n) {
    if (n <= 0) {
      throw SizeZero();
    }
  }

  static std::vector<int> flatten(int order, std::vector<std::vector<int>> const& rows) {
    if (order <= 0) {
      throw SizeZero();
    }
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(order) * order);
    if (rows.size() != static_cast<std::size_t>(order)) {
      throw InvalidEntry("table has " + std::to_string(rows.size())
                         + " rows, expected " + std::to_string(order));
    }
    for (auto const& row : rows) {
      if (row.size() != static_cast<std::size_t>(order)) {
        throw InvalidEntry("table row has " + std::to_string(row.size())
                           + " entries, expected " + std::to_string(order));
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
  }

  int                      order_;
  std::vector<int>         table_;
  std::vector<std::string> names_;
};

inline void require_mask_capacity(FiniteSemigroup const& S) {
  if (S.order() > ElemSet::capacity) {
    throw TooLarge("order " + std::to_string(S.order())
                   + " exceeds the bitmask capacity of "
                   + std::to_string(ElemSet::capacity));
  }
}

//! <X>: the least subset containing X and closed under the product.
//! Returns the empty set for empty X.
inline ElemSet generate(FiniteSemigroup const& S, ElemSet X) {
  require_mask_capacity(S);
  ElemSet          closed = X;
  std::vector<int> work   = X.to_vector();
  std::vector<int> members = work;
  while (!work.empty()) {
    int z = work.back();
    work.pop_back();
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
      int e = members[idx];
      for (int v : {S.product(z, e), S.product(e, z)}) {
        if (!closed.test(v)) {
          closed.set(v);
          members.push_back(v);
          work.push_back(v);
        }
      }
    }
    int zz = S.product(z, z);
    if (!closed.test(zz)) {
      closed.set(zz);
      members.push_back(zz);
      work.push_back(zz);
    }
  }
  return closed;
}

inline ElemSet generate(FiniteSemigroup const& S, std::initializer_list<int> gens) {
  return generate(S, ElemSet::of(gens));
}

//! The subsemigroup on U as a standalone semigroup. Local ids are the
//! elements of U in ascending order; the mapping local -> global is written
//! to *global_of_local when given. U must be closed under the product.
inline FiniteSemigroup subsemigroup(FiniteSemigroup const& S,
                                    ElemSet                U,
                                    std::vector<int>*      global_of_local = nullptr) {
  std::vector<int> elems = U.to_vector();
  if (elems.empty()) {
    throw SizeZero("the empty set does not carry a multiplication table");
  }
  std::vector<int> local(static_cast<std::size_t>(S.order()), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    local[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);
  }
  int              n = static_cast<int>(elems.size());
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int p = S.product(elems[static_cast<std::size_t>(i)],
                        elems[static_cast<std::size_t>(j)]);
      if (!U.test(p)) {
        throw InvalidEntry("subset is not closed under the product");
      }
      t[static_cast<std::size_t>(i) * n + j] = local[static_cast<std::size_t>(p)];
    }
  }
  std::vector<std::string> names;
  if (S.has_names()) {
    names.reserve(elems.size());
    for (int e : elems) {
      names.push_back(S.name(e));
    }
  }
  if (global_of_local != nullptr) {
    *global_of_local = std::move(elems);
  }
  return FiniteSemigroup(n, std::move(t), std::move(names));
}

//! Constructor spec, mirroring the named constructions above. The CLI's
//! inline `name:args` strings parse into this.
struct SemigroupSpec {
  enum class Kind {
    left_zero,
    right_zero,
    chain_semilattice,
    rectangular_band,
    cyclic_group,
    null_semigroup,
    direct_product,
  };
  Kind                       kind;
  std::vector<int>           args;
  std::vector<SemigroupSpec> parts;  // direct_product only
};

inline FiniteSemigroup construct(SemigroupSpec const& spec) {
  using K = SemigroupSpec::Kind;
  auto arg = [&](std::size_t i) -> int {
    if (i >= spec.args.size()) {
      throw InvalidEntry("constructor is missing an argument");
    }
    return spec.args[i];
  };
  switch (spec.kind) {
    case K::left_zero: return FiniteSemigroup::left_zero(arg(0));
    case K::right_zero: return FiniteSemigroup::right_zero(arg(0));
    case K::chain_semilattice: return FiniteSemigroup::chain_semilattice(arg(0));
    case K::rectangular_band: return FiniteSemigroup::rectangular_band(arg(0), arg(1));
    case K::cyclic_group: return FiniteSemigroup::cyclic_group(arg(0));
    case K::null_semigroup: return FiniteSemigroup::null_semigroup(arg(0));
    case K::direct_product: {
      if (spec.parts.size() != 2) {
        throw InvalidEntry("direct_product takes exactly two factor specs");
      }
      return FiniteSemigroup::direct_product(construct(spec.parts[0]),
                                             construct(spec.parts[1]));
    }
  }
  throw InvalidEntry("unknown constructor kind");
}

}  // namespace sublat

#endif  // SUBLAT_SEMIGROUP_HPP_
