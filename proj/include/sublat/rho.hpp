#ifndef SUBLAT_RHO_HPP_
#define SUBLAT_RHO_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bicyclic.hpp"
#include "exceptions.hpp"
#include "extension.hpp"
#include "green.hpp"
#include "monogenic.hpp"
#include "semigroup.hpp"

namespace sublat {

enum class RhoFlavor { omega, inf_plus, inf_minus };

inline char const* to_string(RhoFlavor f) {
  switch (f) {
    case RhoFlavor::omega: return "omega";
    case RhoFlavor::inf_plus: return "inf+";
    default: return "inf-";
  }
}

inline std::optional<RhoFlavor> parse_rho_flavor(std::string const& s) {
  if (s == "omega" || s == "w") return RhoFlavor::omega;
  if (s == "inf+" || s == "inf_plus") return RhoFlavor::inf_plus;
  if (s == "inf-" || s == "inf_minus") return RhoFlavor::inf_minus;
  return std::nullopt;
}

//! Tag of one congruence family on the free monogenic inverse semigroup:
//! (k, omega), (k, inf+) or (k, inf-), k >= 1.
struct RhoType {
  std::int64_t k;
  RhoFlavor    flavor;

  RhoType(std::int64_t k, RhoFlavor flavor) : k(k), flavor(flavor) {
    if (k < 1) {
      throw InvalidEntry("congruence parameter k must be >= 1, got " + std::to_string(k));
    }
  }

  std::string display() const {
    return "(" + std::to_string(k) + "," + std::string(to_string(flavor)) + ")";
  }
};

//! Literal evaluation of the displayed definitions: u and u' are related
//! iff u = u', or both weights reach k and the flavor's key agrees
//! (m - n for omega, the pair (m, n) for inf+, the pair (p, q) for inf-).
inline bool rho_related(RhoType t, C2Elt u, C2Elt v) {
  if (u == v) {
    return true;
  }
  if (u.weight() < t.k || v.weight() < t.k) {
    return false;
  }
  switch (t.flavor) {
    case RhoFlavor::omega: return u.m() - u.n() == v.m() - v.n();
    case RhoFlavor::inf_plus: return u.left() == v.left();
    default: return u.right() == v.right();
  }
}

//! A rho-class under its canonical key. Fin holds a whole class that is a
//! singleton (weight below k); the other alternatives key the infinite
//! classes: an integer m - n for omega, a bicyclic pair for inf+/inf-.
struct QuotientElt {
  std::variant<C2Elt, std::int64_t, BicyclicElt> v;

  static QuotientElt make_fin(C2Elt u) {
    return QuotientElt{decltype(v)(std::in_place_index<0>, u)};
  }
  static QuotientElt make_omega(std::int64_t d) {
    return QuotientElt{decltype(v)(std::in_place_index<1>, d)};
  }
  static QuotientElt make_inf(BicyclicElt key) {
    return QuotientElt{decltype(v)(std::in_place_index<2>, key)};
  }

  bool is_fin() const noexcept { return v.index() == 0; }
  C2Elt const& fin() const { return std::get<0>(v); }
  std::int64_t omega_key() const { return std::get<1>(v); }
  BicyclicElt  inf_key() const { return std::get<2>(v); }

  bool operator==(QuotientElt const& o) const { return v == o.v; }
  bool operator!=(QuotientElt const& o) const { return !(v == o.v); }
};

//! The quotient of the free monogenic inverse semigroup by one rho family,
//! in canonical-key form. Multiplication works key-wise: both bicyclic
//! components of a product depend only on the matching components of the
//! factors, and m - n is additive, so no class representatives are needed.
class RhoQuotient {
 public:
  explicit RhoQuotient(RhoType t) : type_(t) {}

  RhoType type() const { return type_; }

  QuotientElt class_of(C2Elt u) const {
    if (u.weight() < type_.k) {
      return QuotientElt::make_fin(u);
    }
    switch (type_.flavor) {
      case RhoFlavor::omega: return QuotientElt::make_omega(u.m() - u.n());
      case RhoFlavor::inf_plus: return QuotientElt::make_inf(u.left());
      default: return QuotientElt::make_inf(u.right());
    }
  }

  bool same_class(C2Elt u, C2Elt v) const { return class_of(u) == class_of(v); }

  QuotientElt multiply(QuotientElt const& a, QuotientElt const& b) const {
    if (a.is_fin() && b.is_fin()) {
      return class_of(c2_mul(a.fin(), b.fin()));
    }
    // at least one factor sits in the ideal, so the product does too
    switch (type_.flavor) {
      case RhoFlavor::omega:
        return QuotientElt::make_omega(omega_of(a) + omega_of(b));
      case RhoFlavor::inf_plus:
        return QuotientElt::make_inf(bicyclic_mul(left_of(a), left_of(b)));
      default:
        return QuotientElt::make_inf(bicyclic_mul(right_of(a), right_of(b)));
    }
  }

  bool is_idempotent(QuotientElt const& a) const { return multiply(a, a) == a; }

  std::string display(QuotientElt const& a) const {
    if (a.is_fin()) {
      return to_string(a.fin());
    }
    if (type_.flavor == RhoFlavor::omega) {
      std::int64_t d = a.omega_key();
      return "[z" + std::string(d >= 0 ? "+" : "") + std::to_string(d) + "]";
    }
    return "[" + to_string(a.inf_key()) + "]";
  }

 private:
  std::int64_t omega_of(QuotientElt const& e) const {
    return e.is_fin() ? e.fin().m() - e.fin().n() : e.omega_key();
  }
  BicyclicElt left_of(QuotientElt const& e) const {
    return e.is_fin() ? e.fin().left() : e.inf_key();
  }
  BicyclicElt right_of(QuotientElt const& e) const {
    return e.is_fin() ? e.fin().right() : e.inf_key();
  }

  RhoType type_;
};

//! The Rees quotient M_k = C2 / I_k as a finite table: element 0 is the
//! collapsed ideal, the rest are the elements of weight below k in
//! coordinate order.
struct MkModel {
  FiniteSemigroup    sg;
  std::vector<C2Elt> elements;  // elements[i] has id i + 1
};

inline MkModel mk_model(std::int64_t k) {
  if (k < 1) {
    throw InvalidEntry("Rees quotient parameter must be >= 1, got " + std::to_string(k));
  }
  std::vector<C2Elt> elems = elements_of_weight_at_most(k - 1);
  int                n     = static_cast<int>(elems.size()) + 1;

  auto id_of = [&](C2Elt const& u) {
    if (u.weight() >= k) {
      return 0;
    }
    auto it = std::lower_bound(elems.begin(), elems.end(), u,
                               [](C2Elt const& a, C2Elt const& b) {
                                 if (a.weight() != b.weight()) {
                                   return a.weight() < b.weight();
                                 }
                                 return a < b;
                               });
    return static_cast<int>(it - elems.begin()) + 1;
  };

  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] =
          id_of(c2_mul(elems[static_cast<std::size_t>(i - 1)],
                       elems[static_cast<std::size_t>(j - 1)]));
    }
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  names.push_back("0");
  for (C2Elt const& u : elems) {
    names.push_back(to_string(u));
  }
  return MkModel{FiniteSemigroup(n, std::move(table), std::move(names)), std::move(elems)};
}

inline FiniteSemigroup rees_quotient_Mk(std::int64_t k) { return mk_model(k).sg; }

inline std::int64_t mk_order(std::int64_t k) {
  std::int64_t total = 1;
  for (std::int64_t m = 1; m < k; ++m) {
    total += (m + 1) * (m + 1);
  }
  return total;
}

//! One of l(rho) or r(rho): the least witness n found below the search
//! bound, or "infinite at bound" when none is.
struct LrBound {
  std::optional<std::int64_t> value;
  std::int64_t                bound;

  bool infinite_at_bound() const { return !value.has_value(); }
  std::string display() const {
    return value ? std::to_string(*value)
                 : "inf(searched n<=" + std::to_string(bound) + ")";
  }
};

struct LrValues {
  LrBound l, r;
};

//! l(rho): least n with ((n,n),(0,0)) related to ((n+1,n+1),(0,0));
//! r(rho) uses the mirrored witnesses ((0,0),(n,n)). The definition
//! quantifies over all n, so the search stops at a bound (default 3k) and
//! reports infinity as bounded evidence only. The outcome is checked
//! against the values the family's type declares.
inline LrValues lr_values(RhoType t, std::int64_t bound = 0) {
  if (bound <= 0) {
    bound = 3 * t.k;
  }
  LrValues out{{std::nullopt, bound}, {std::nullopt, bound}};
  for (std::int64_t n = 1; n <= bound && !out.l.value; ++n) {
    if (rho_related(t, C2Elt(n, n, 0, 0), C2Elt(n + 1, n + 1, 0, 0))) {
      out.l.value = n;
    }
  }
  for (std::int64_t n = 1; n <= bound && !out.r.value; ++n) {
    if (rho_related(t, C2Elt(0, 0, n, n), C2Elt(0, 0, n + 1, n + 1))) {
      out.r.value = n;
    }
  }
  bool ok = false;
  switch (t.flavor) {
    case RhoFlavor::omega:
      ok = out.l.value == t.k && out.r.value == t.k;
      break;
    case RhoFlavor::inf_plus:
      ok = !out.l.value && out.r.value == t.k;
      break;
    default:
      ok = out.l.value == t.k && !out.r.value;
      break;
  }
  if (!ok) {
    throw SublatError("internal error: l/r values disagree with the declared type "
                      + t.display());
  }
  return out;
}

//! The quotient rebuilt the other way, as a retract ideal extension by
//! M_k: of the bicyclic semigroup via u -> (m,n) (inf+) or u -> (p,q)
//! (inf-), and of the additive integers via u -> m-n (omega). Products of
//! nonzero M_k elements route through the finite Rees table, unlike
//! RhoQuotient::multiply, which makes element-wise agreement of the two a
//! real cross-check.
class ExtensionQuotient {
 public:
  explicit ExtensionQuotient(RhoType t) : type_(t), mk_(mk_model(t.k)) {
    int n = mk_.sg.order();
    if (t.flavor == RhoFlavor::omega) {
      std::vector<std::optional<std::int64_t>> phi(static_cast<std::size_t>(n));
      for (int i = 1; i < n; ++i) {
        C2Elt const& u = mk_.elements[static_cast<std::size_t>(i - 1)];
        phi[static_cast<std::size_t>(i)] = u.m() - u.n();
      }
      int_ext_.emplace(mk_.sg, 0, std::move(phi),
                       [](std::int64_t const& a, std::int64_t const& b) { return a + b; });
    } else {
      bool plus = t.flavor == RhoFlavor::inf_plus;
      std::vector<std::optional<BicyclicElt>> phi(static_cast<std::size_t>(n));
      for (int i = 1; i < n; ++i) {
        C2Elt const& u = mk_.elements[static_cast<std::size_t>(i - 1)];
        phi[static_cast<std::size_t>(i)] = plus ? u.left() : u.right();
      }
      bi_ext_.emplace(mk_.sg, 0, std::move(phi),
                      [](BicyclicElt const& a, BicyclicElt const& b) {
                        return bicyclic_mul(a, b);
                      });
    }
  }

  RhoType type() const { return type_; }
  MkModel const& mk() const { return mk_; }

  //! Embeds a free-semigroup element: ideal members map to the T side.
  QuotientElt embed(C2Elt u) const {
    if (u.weight() < type_.k) {
      return QuotientElt::make_fin(u);
    }
    if (type_.flavor == RhoFlavor::omega) {
      return QuotientElt::make_omega(u.m() - u.n());
    }
    return QuotientElt::make_inf(type_.flavor == RhoFlavor::inf_plus ? u.left()
                                                                     : u.right());
  }

  QuotientElt multiply(QuotientElt const& a, QuotientElt const& b) const {
    if (type_.flavor == RhoFlavor::omega) {
      return from_int(int_ext_->mul(to_int(a), to_int(b)));
    }
    return from_bi(bi_ext_->mul(to_bi(a), to_bi(b)));
  }

 private:
  using IntExt = RetractExtension<std::int64_t>;
  using BiExt  = RetractExtension<BicyclicElt>;

  int mk_id(C2Elt const& u) const {
    auto const& es = mk_.elements;
    auto it = std::find(es.begin(), es.end(), u);
    if (it == es.end()) {
      throw InvalidEntry("element " + to_string(u) + " is not in the finite part");
    }
    return static_cast<int>(it - es.begin()) + 1;
  }

  IntExt::Elt to_int(QuotientElt const& e) const {
    if (e.is_fin()) {
      return IntExt::Elt(std::in_place_index<1>, mk_id(e.fin()));
    }
    return IntExt::Elt(std::in_place_index<0>, e.omega_key());
  }
  QuotientElt from_int(IntExt::Elt const& e) const {
    if (e.index() == 0) {
      return QuotientElt::make_omega(std::get<0>(e));
    }
    return QuotientElt::make_fin(mk_.elements[static_cast<std::size_t>(std::get<1>(e) - 1)]);
  }
  BiExt::Elt to_bi(QuotientElt const& e) const {
    if (e.is_fin()) {
      return BiExt::Elt(std::in_place_index<1>, mk_id(e.fin()));
    }
    return BiExt::Elt(std::in_place_index<0>, e.inf_key());
  }
  QuotientElt from_bi(BiExt::Elt const& e) const {
    if (e.index() == 0) {
      return QuotientElt::make_inf(std::get<0>(e));
    }
    return QuotientElt::make_fin(mk_.elements[static_cast<std::size_t>(std::get<1>(e) - 1)]);
  }

  RhoType               type_;
  MkModel               mk_;
  std::optional<IntExt> int_ext_;
  std::optional<BiExt>  bi_ext_;
};

//! Structure report for the free semigroup or one of its rho quotients:
//! what the minimal ideal is and how the finite D-classes chain above it.
struct MonogenicStructure {
  bool                        free = false;
  std::optional<RhoType>      type;
  std::string                 kernel_kind;   // "none", "bicyclic", "integer-group"
  std::vector<std::int64_t>   dclass_sizes;  // (m+1)^2 along the chain
  std::int64_t                chain_length = 0;
};

//! For quotients, the D-chain and kernel kind are cross-checked against
//! the finite Rees table (D-classes of M_k are the weight levels plus the
//! zero) and against key arithmetic in the quotient.
inline MonogenicStructure classify_monogenic(std::optional<RhoType> t,
                                             std::int64_t horizon = 6) {
  MonogenicStructure out;
  out.free = !t.has_value();
  out.type = t;

  std::int64_t levels = out.free ? horizon : t->k - 1;
  for (std::int64_t m = 1; m <= levels; ++m) {
    auto level = elements_of_weight(m);
    if (static_cast<std::int64_t>(level.size()) != (m + 1) * (m + 1)) {
      throw SublatError("internal error: weight census failed at m = " + std::to_string(m));
    }
    out.dclass_sizes.push_back((m + 1) * (m + 1));
  }
  out.chain_length = out.free ? horizon : t->k;

  if (out.free) {
    out.kernel_kind = "none";
    return out;
  }

  // D-classes of the Rees quotient: one per weight level, plus the zero.
  MkModel   mk = mk_model(t->k);
  GreenData g  = green(mk.sg);
  std::vector<std::int64_t> sizes;
  for (auto const& cls : g.D) {
    sizes.push_back(static_cast<std::int64_t>(cls.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  std::vector<std::int64_t> expected{1};
  for (std::int64_t m = 1; m < t->k; ++m) {
    expected.push_back((m + 1) * (m + 1));
  }
  std::sort(expected.begin(), expected.end());
  if (sizes != expected) {
    throw SublatError("internal error: Rees-quotient D-classes are not the weight levels");
  }

  RhoQuotient q(*t);
  if (t->flavor == RhoFlavor::omega) {
    out.kernel_kind = "integer-group";
    // keys add and invert; the kernel behaves as the integers
    for (std::int64_t d = -horizon; d <= horizon; ++d) {
      QuotientElt e    = QuotientElt::make_omega(d);
      QuotientElt inv  = QuotientElt::make_omega(-d);
      QuotientElt zero = QuotientElt::make_omega(0);
      if (!(q.multiply(e, inv) == zero)) {
        throw SublatError("internal error: omega kernel is not a group on keys");
      }
    }
  } else {
    out.kernel_kind = "bicyclic";
    for (std::int64_t m = 0; m <= horizon; ++m) {
      for (std::int64_t n = 0; n <= horizon; ++n) {
        for (std::int64_t p = 0; p <= 2; ++p) {
          for (std::int64_t s = 0; s <= 2; ++s) {
            QuotientElt a  = QuotientElt::make_inf(BicyclicElt{m, n});
            QuotientElt b  = QuotientElt::make_inf(BicyclicElt{p, s});
            QuotientElt ab = QuotientElt::make_inf(
                bicyclic_mul(BicyclicElt{m, n}, BicyclicElt{p, s}));
            if (!(q.multiply(a, b) == ab)) {
              throw SublatError("internal error: inf kernel keys do not multiply bicyclically");
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace sublat

#endif  // SUBLAT_RHO_HPP_
