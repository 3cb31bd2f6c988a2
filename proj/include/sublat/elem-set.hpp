#ifndef SUBLAT_ELEM_SET_HPP_
#define SUBLAT_ELEM_SET_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sublat {

//! Subset of element ids 0..127 as a two-word bitmask. Subsets are the
//! working currency of the lattice machinery, so everything here is O(1).
class ElemSet {
 public:
  static constexpr int capacity = 128;

  constexpr ElemSet() = default;

  static ElemSet full(int n) {
    ElemSet s;
    for (int i = 0; i < n; ++i) {
      s.set(i);
    }
    return s;
  }

  static ElemSet single(int i) {
    ElemSet s;
    s.set(i);
    return s;
  }

  template <typename It>
  static ElemSet of(It first, It last) {
    ElemSet s;
    for (; first != last; ++first) {
      s.set(static_cast<int>(*first));
    }
    return s;
  }

  static ElemSet of(std::initializer_list<int> ids) {
    return of(ids.begin(), ids.end());
  }

  constexpr bool test(int i) const noexcept {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  constexpr void set(int i) noexcept { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  constexpr void reset(int i) noexcept {
    w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  constexpr int count() const noexcept {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }
  constexpr bool empty() const noexcept { return w_[0] == 0 && w_[1] == 0; }

  constexpr ElemSet operator|(ElemSet o) const noexcept {
    o.w_[0] |= w_[0];
    o.w_[1] |= w_[1];
    return o;
  }
  constexpr ElemSet operator&(ElemSet o) const noexcept {
    o.w_[0] &= w_[0];
    o.w_[1] &= w_[1];
    return o;
  }
  constexpr ElemSet operator-(ElemSet o) const noexcept {
    ElemSet r = *this;
    r.w_[0] &= ~o.w_[0];
    r.w_[1] &= ~o.w_[1];
    return r;
  }
  constexpr ElemSet& operator|=(ElemSet o) noexcept {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  constexpr ElemSet& operator&=(ElemSet o) noexcept {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }

  constexpr bool operator==(ElemSet const&) const noexcept = default;

  // Orders by cardinality first, then by word value; gives a deterministic
  // listing order for lattice nodes.
  constexpr bool operator<(ElemSet const& o) const noexcept {
    if (count() != o.count()) {
      return count() < o.count();
    }
    if (w_[1] != o.w_[1]) {
      return w_[1] < o.w_[1];
    }
    return w_[0] < o.w_[0];
  }

  constexpr bool is_subset_of(ElemSet const& o) const noexcept {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  template <typename F>
  void for_each(F f) const {
    for (int word = 0; word < 2; ++word) {
      std::uint64_t bits = w_[word];
      while (bits != 0) {
        int i = std::countr_zero(bits);
        f(word * 64 + i);
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  int min() const noexcept {
    if (w_[0] != 0) {
      return std::countr_zero(w_[0]);
    }
    if (w_[1] != 0) {
      return 64 + std::countr_zero(w_[1]);
    }
    return -1;
  }

  constexpr std::uint64_t word(int i) const noexcept { return w_[i]; }

  std::size_t hash() const noexcept {
    // splitmix-style mix of the two words
    std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ULL;
    h ^= (w_[1] + 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, 2> w_{};
};

struct ElemSetHash {
  std::size_t operator()(ElemSet const& s) const noexcept { return s.hash(); }
};

}  // namespace sublat

#endif  // SUBLAT_ELEM_SET_HPP_
