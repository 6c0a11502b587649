#pragma once

#include <bit>
#include <cstdint>

namespace dmm {

// Subset of a ground set with at most 24 elements, one bit per element.
using Mask = std::uint32_t;

inline constexpr Mask bit(int i) { return Mask{1} << i; }
inline constexpr bool has_bit(Mask m, int i) { return (m >> i) & 1u; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

// Calls fn(i) for every set bit of m in ascending order.
template <typename Fn>
void for_each_bit(Mask m, Fn&& fn) {
  while (m) {
    fn(std::countr_zero(m));
    m &= m - 1;
  }
}

// Calls fn(s) for every subset s of m in increasing numeric order.
template <typename Fn>
void for_each_subset(Mask m, Fn&& fn) {
  Mask s = 0;
  while (true) {
    fn(s);
    if (s == m) break;
    s = (s - m) & m;
  }
}

}  // namespace dmm
