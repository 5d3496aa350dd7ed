#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace posat {

// Subset of the ground set [n]: bit i-1 set  <=>  element i present.
using set_mask = std::uint32_t;

// Full-power-set scans are 2^n; 2^20 probes is the desk-scale ceiling.
inline constexpr int max_ground = 20;

// Embedding search is exponential in poset size.
inline constexpr int max_poset_size = 12;

inline constexpr set_mask full_mask(int n) {
  return n == 0 ? 0u : (set_mask{1} << n) - 1u;
}

inline constexpr set_mask element_bit(int i) {  // i is 1-based
  return set_mask{1} << (i - 1);
}

inline int set_size(set_mask s) { return std::popcount(s); }

inline bool subset_of(set_mask a, set_mask b) { return (a & ~b) == 0; }

inline bool proper_subset_of(set_mask a, set_mask b) {
  return a != b && subset_of(a, b);
}

inline bool comparable(set_mask a, set_mask b) {
  return subset_of(a, b) || subset_of(b, a);
}

// Raised by the expression parser; offset is the byte position of the fault.
struct expr_parse_error : std::runtime_error {
  std::size_t offset;
  expr_parse_error(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"),
        offset(off) {}
};

// Raised by file-format loaders (family/poset JSON, CSV).
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace posat
