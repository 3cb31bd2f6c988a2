#ifndef SUBLAT_EXTENSION_HPP_
#define SUBLAT_EXTENSION_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "exceptions.hpp"
#include "semigroup.hpp"

namespace sublat {

//! Retract ideal extension of a semigroup T by a finite semigroup Q with
//! zero, determined by a partial homomorphism phi on the nonzero part Q*.
//! Elements are either T values or nonzero Q ids; the product falls back
//! to phi whenever a Q-side product hits zero:
//!   a o b = a (b phi)          for a in T,  b in Q*
//!   a o b = (a phi) b          for a in Q*, b in T
//!   a o b = (a phi)(b phi)     for a, b in Q* with ab = 0
//! and is the Q product when ab != 0, the T product on T.
template <typename TElt>
class RetractExtension {
 public:
  using Elt  = std::variant<TElt, int>;  // int: a nonzero Q id
  using TMul = std::function<TElt(TElt const&, TElt const&)>;

  RetractExtension(FiniteSemigroup Q, int zero, std::vector<std::optional<TElt>> phi,
                   TMul tmul)
      : q_(std::move(Q)), zero_(zero), phi_(std::move(phi)), tmul_(std::move(tmul)) {
    if (zero_ < 0 || zero_ >= q_.order()) {
      throw InvalidEntry("designated zero " + std::to_string(zero_)
                         + " is not an element of Q");
    }
    for (int x = 0; x < q_.order(); ++x) {
      if (q_.product(zero_, x) != zero_ || q_.product(x, zero_) != zero_) {
        throw InvalidEntry("designated element " + std::to_string(zero_)
                           + " is not a zero of Q");
      }
    }
    if (static_cast<int>(phi_.size()) != q_.order()) {
      throw InvalidEntry("phi must assign a value per Q element (zero entry ignored)");
    }
    for (int x = 0; x < q_.order(); ++x) {
      if (x != zero_ && !phi_[static_cast<std::size_t>(x)].has_value()) {
        throw InvalidEntry("phi is undefined on nonzero element " + std::to_string(x));
      }
    }
    for (int a = 0; a < q_.order(); ++a) {
      for (int b = 0; b < q_.order(); ++b) {
        if (a == zero_ || b == zero_) {
          continue;
        }
        int ab = q_.product(a, b);
        if (ab != zero_ && !(tmul_(phi_at(a), phi_at(b)) == phi_at(ab))) {
          throw NotPartialHom(a, b);
        }
      }
    }
  }

  FiniteSemigroup const& q() const { return q_; }
  int zero() const { return zero_; }
  TElt const& phi_at(int qid) const { return *phi_[static_cast<std::size_t>(qid)]; }

  // TElt may itself be int, so the variant is accessed by index only.
  Elt mul(Elt const& a, Elt const& b) const {
    if (a.index() == 0 && b.index() == 0) {
      return Elt(std::in_place_index<0>, tmul_(std::get<0>(a), std::get<0>(b)));
    }
    if (a.index() == 0) {
      return Elt(std::in_place_index<0>, tmul_(std::get<0>(a), phi_at(std::get<1>(b))));
    }
    if (b.index() == 0) {
      return Elt(std::in_place_index<0>, tmul_(phi_at(std::get<1>(a)), std::get<0>(b)));
    }
    int qa = std::get<1>(a);
    int qb = std::get<1>(b);
    int ab = q_.product(qa, qb);
    if (ab == zero_) {
      return Elt(std::in_place_index<0>, tmul_(phi_at(qa), phi_at(qb)));
    }
    return Elt(std::in_place_index<1>, ab);
  }

  //! Checks (a o b) o c = a o (b o c) over every triple from the sample.
  //! The finite materialization checks all triples instead; this is the
  //! bounded substitute when T is infinite.
  bool verify_associativity(std::vector<Elt> const& sample) const {
    for (Elt const& a : sample) {
      for (Elt const& b : sample) {
        for (Elt const& c : sample) {
          if (!(mul(mul(a, b), c) == mul(a, mul(b, c)))) {
            return false;
          }
        }
      }
    }
    return true;
  }

 private:
  FiniteSemigroup                  q_;
  int                              zero_;
  std::vector<std::optional<TElt>> phi_;
  TMul                             tmul_;
};

struct IdealExtensionResult {
  FiniteSemigroup  sg;     // ids 0..|T|-1 are T, the rest are Q* ascending
  std::vector<int> q_ids;  // global id of each nonzero Q element, by Q id order
};

//! Materialized extension of finite T by finite Q; associativity is
//! checked exhaustively by the FiniteSemigroup constructor.
inline IdealExtensionResult ideal_extension(FiniteSemigroup const& T,
                                            FiniteSemigroup const& Q, int zero,
                                            std::vector<int> const& phi) {
  std::vector<std::optional<int>> lifted(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (static_cast<int>(i) != zero) {
      if (phi[i] < 0 || phi[i] >= T.order()) {
        throw InvalidEntry("phi value " + std::to_string(phi[i])
                           + " is not an element of T");
      }
      lifted[i] = phi[i];
    }
  }
  RetractExtension<int> ext(Q, zero,
                            std::move(lifted),
                            [&T](int const& a, int const& b) { return T.product(a, b); });

  int              nt = T.order();
  int              total = nt + Q.order() - 1;
  std::vector<int> q_ids;
  std::vector<int> global_of_q(static_cast<std::size_t>(Q.order()), -1);
  for (int x = 0; x < Q.order(); ++x) {
    if (x != zero) {
      global_of_q[static_cast<std::size_t>(x)] = nt + static_cast<int>(q_ids.size());
      q_ids.push_back(nt + static_cast<int>(q_ids.size()));
    }
  }
  auto as_elt = [&](int gid) -> RetractExtension<int>::Elt {
    if (gid < nt) {
      return RetractExtension<int>::Elt(std::in_place_index<0>, gid);
    }
    for (int x = 0; x < Q.order(); ++x) {
      if (global_of_q[static_cast<std::size_t>(x)] == gid) {
        return RetractExtension<int>::Elt(std::in_place_index<1>, x);
      }
    }
    throw InvalidEntry("id out of range");
  };
  auto as_gid = [&](RetractExtension<int>::Elt const& e) {
    if (e.index() == 1) {
      return global_of_q[static_cast<std::size_t>(std::get<1>(e))];
    }
    return std::get<0>(e);
  };

  std::vector<int> table(static_cast<std::size_t>(total) * total);
  for (int i = 0; i < total; ++i) {
    for (int j = 0; j < total; ++j) {
      table[static_cast<std::size_t>(i) * total + j] = as_gid(ext.mul(as_elt(i), as_elt(j)));
    }
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(total));
  for (int i = 0; i < nt; ++i) {
    names.push_back(T.name(i));
  }
  for (int x = 0; x < Q.order(); ++x) {
    if (x != zero) {
      names.push_back(Q.name(x));
    }
  }
  return IdealExtensionResult{FiniteSemigroup(total, std::move(table), std::move(names)),
                              std::move(q_ids)};
}

}  // namespace sublat

#endif  // SUBLAT_EXTENSION_HPP_
