#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "posat/core.hpp"

namespace posat {

// A finite strict partial order on elements 0..size-1, stored as per-element
// bitmasks of the full comparability relation (not just covers).  The empty
// poset (size 0) is representable only so that linear_sum can honor the
// empty-operand rule; every predicate rejects it.
class poset {
 public:
  poset() = default;

  static poset point() { return antichain(1); }

  static poset antichain(int k) {
    check_arity(k);
    poset p;
    p.size_ = k;
    p.validate();
    return p;
  }

  static poset chain(int k) {
    check_arity(k);
    poset p;
    p.size_ = k;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) p.above_[a] |= rel_bit(b);
    p.rebuild_below();
    p.validate();
    return p;
  }

  // Strict relation pairs (a below b); closure is computed, so any
  // generating set of pairs is accepted. Cycles fail validation.
  static poset from_relations(int size,
                              const std::vector<std::pair<int, int>>& below) {
    if (size < 0 || size > max_poset_size)
      throw std::invalid_argument("poset size out of range 0..12: " +
                                  std::to_string(size));
    poset p;
    p.size_ = size;
    for (auto [a, b] : below) {
      if (a < 0 || a >= size || b < 0 || b >= size)
        throw std::invalid_argument("relation index out of range");
      if (a == b) throw std::invalid_argument("reflexive relation given");
      p.above_[a] |= rel_bit(b);
    }
    p.transitive_close();
    p.rebuild_below();
    p.validate();
    return p;
  }

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool less(int a, int b) const {
    check_index(a);
    check_index(b);
    return (above_[a] >> b) & 1u;
  }

  bool comparable_elems(int a, int b) const { return less(a, b) || less(b, a); }

  // Mask of elements strictly above / below a.
  std::uint16_t above_mask(int a) const {
    check_index(a);
    return above_[a];
  }
  std::uint16_t below_mask(int a) const {
    check_index(a);
    return below_[a];
  }

  int strict_pair_count() const {
    int c = 0;
    for (int a = 0; a < size_; ++a) c += std::popcount(above_[a]);
    return c;
  }

  // Longest chain strictly below / above each element.
  std::vector<int> heights_below() const { return heights(below_, above_); }
  std::vector<int> heights_above() const { return heights(above_, below_); }

  int height() const {  // number of elements in a longest chain
    if (size_ == 0) return 0;
    auto h = heights_below();
    return 1 + *std::max_element(h.begin(), h.end());
  }

  int width() const {  // largest antichain, brute force (size <= 12)
    int best = 0;
    for (std::uint16_t s = 0; s < (1u << size_); ++s) {
      bool anti = true;
      for (int a = 0; a < size_ && anti; ++a) {
        if (!((s >> a) & 1u)) continue;
        if ((above_[a] | below_[a]) & s) anti = false;
      }
      if (anti) best = std::max(best, std::popcount(s));
    }
    return best;
  }

  bool operator==(const poset& o) const {
    if (size_ != o.size_) return false;
    for (int a = 0; a < size_; ++a)
      if (above_[a] != o.above_[a]) return false;
    return true;
  }

  friend poset linear_sum(const poset& top, const poset& bottom);

 private:
  static std::uint16_t rel_bit(int b) {
    return static_cast<std::uint16_t>(1u << b);
  }

  static void check_arity(int k) {
    if (k < 1) throw std::invalid_argument("atom arity must be >= 1");
    if (k > max_poset_size)
      throw std::invalid_argument("poset size over the cap of 12");
  }

  void check_index(int a) const {
    if (a < 0 || a >= size_)
      throw std::out_of_range("poset element index out of range");
  }

  void transitive_close() {
    for (int mid = 0; mid < size_; ++mid)
      for (int a = 0; a < size_; ++a)
        if ((above_[a] >> mid) & 1u) above_[a] |= above_[mid];
  }

  void rebuild_below() {
    below_.fill(0);
    for (int a = 0; a < size_; ++a)
      for (int b = 0; b < size_; ++b)
        if ((above_[a] >> b) & 1u) below_[b] |= rel_bit(a);
  }

  // Irreflexive, antisymmetric, transitive; run by every constructor.
  void validate() const {
    for (int a = 0; a < size_; ++a) {
      if ((above_[a] >> a) & 1u)
        throw std::invalid_argument("poset relation is not irreflexive");
      for (int b = 0; b < size_; ++b) {
        bool ab = (above_[a] >> b) & 1u;
        bool ba = (above_[b] >> a) & 1u;
        if (ab && ba)
          throw std::invalid_argument("poset relation is not antisymmetric");
        if (ab && (above_[b] & ~above_[a]))
          throw std::invalid_argument("poset relation is not transitive");
      }
    }
  }

  std::vector<int> heights(const std::array<std::uint16_t, max_poset_size>& dn,
                           const std::array<std::uint16_t, max_poset_size>&) const {
    // h[a] = longest chain strictly on the dn side; DP over popcount of dn.
    std::vector<int> idx(size_), h(size_, 0);
    for (int a = 0; a < size_; ++a) idx[a] = a;
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
      return std::popcount(dn[x]) < std::popcount(dn[y]);
    });
    for (int a : idx)
      for (int b = 0; b < size_; ++b)
        if ((dn[a] >> b) & 1u) h[a] = std::max(h[a], h[b] + 1);
    return h;
  }

  int size_ = 0;
  std::array<std::uint16_t, max_poset_size> above_{};  // bit b of above_[a]: a<b
  std::array<std::uint16_t, max_poset_size> below_{};
};

// Every element of top strictly above every element of bottom. Bottom keeps
// indices 0..bottom.size-1, top follows: multipartite layer boundaries stay
// contiguous. An empty operand yields the other operand unchanged.
inline poset linear_sum(const poset& top, const poset& bottom) {
  if (top.empty()) return bottom;
  if (bottom.empty()) return top;
  int b = bottom.size_, t = top.size_;
  if (b + t > max_poset_size)
    throw std::invalid_argument("linear sum exceeds the poset size cap of 12");
  poset p;
  p.size_ = b + t;
  std::uint16_t top_bits = static_cast<std::uint16_t>(full_mask(b + t) & ~full_mask(b));
  for (int a = 0; a < b; ++a)
    p.above_[a] = static_cast<std::uint16_t>(bottom.above_[a] | top_bits);
  for (int a = 0; a < t; ++a)
    p.above_[b + a] = static_cast<std::uint16_t>(top.above_[a] << b);
  p.rebuild_below();
  p.validate();
  return p;
}

// K_{layers...}, bottom layer first; layer i entirely below layer j for i<j.
inline poset make_multipartite(const std::vector<int>& layers) {
  if (layers.empty()) throw std::invalid_argument("empty layer list");
  int total = 0;
  for (int k : layers) {
    if (k < 1) throw std::invalid_argument("zero or negative layer size");
    total += k;
  }
  if (total > max_poset_size)
    throw std::invalid_argument("multipartite poset exceeds the size cap of 12");
  poset p = poset::antichain(layers[0]);
  for (std::size_t i = 1; i < layers.size(); ++i)
    p = linear_sum(poset::antichain(layers[i]), p);
  return p;
}

inline bool has_unique_minimal(const poset& p) {
  if (p.empty()) throw std::invalid_argument("empty poset has no extrema");
  int c = 0;
  for (int a = 0; a < p.size(); ++a)
    if (p.below_mask(a) == 0) ++c;
  return c == 1;
}

inline bool has_unique_maximal(const poset& p) {
  if (p.empty()) throw std::invalid_argument("empty poset has no extrema");
  int c = 0;
  for (int a = 0; a < p.size(); ++a)
    if (p.above_mask(a) == 0) ++c;
  return c == 1;
}

// (P1', P2'): P1 gains a point below unless it already has a unique minimal
// element; P2 gains a point above unless it has a unique maximal element.
// An empty operand lacks a unique extremum and is augmented to a point.
inline std::pair<poset, poset> reduce_endpoints(const poset& p1, const poset& p2) {
  poset r1 = (!p1.empty() && has_unique_minimal(p1))
                 ? p1
                 : linear_sum(p1, poset::point());
  poset r2 = (!p2.empty() && has_unique_maximal(p2))
                 ? p2
                 : linear_sum(poset::point(), p2);
  return {r1, r2};
}

inline bool covers(const poset& p, int x, int y) {
  if (!p.less(x, y)) return false;
  return (p.above_mask(x) & p.below_mask(y)) == 0;
}

// Unique cover twin property: for every cover pair some third element is
// comparable with exactly one of the two.
inline bool has_uctp(const poset& p) {
  if (p.empty()) throw std::invalid_argument("empty poset has no UCTP status");
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (!covers(p, x, y)) continue;
      bool twin = false;
      for (int z = 0; z < p.size() && !twin; ++z) {
        if (z == x || z == y) continue;
        if (p.comparable_elems(z, x) != p.comparable_elems(z, y)) twin = true;
      }
      if (!twin) return false;
    }
  return true;
}

}  // namespace posat
