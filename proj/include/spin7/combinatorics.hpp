#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace spin7 {

// Index subsets of {0..7} encoded as 8-bit masks, ordered lexicographically
// on the increasing index lists.  All coefficient vectors in the library use
// this ordering.

inline constexpr std::array<int, 9> kBinomial8 = {1, 8, 28, 56, 70, 56, 28, 8, 1};

const std::vector<std::uint32_t>& basis_masks(int grade);

// rank of `mask` within its grade class
int mask_rank(std::uint32_t mask);

// sign of sorting the concatenation (A, B) into increasing order;
// 0 if the supports overlap
inline int merge_sign(std::uint32_t a, std::uint32_t b) {
  if ((a & b) != 0) return 0;
  int inversions = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    inversions += std::popcount(a >> (bit + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

inline std::uint32_t complement_mask(std::uint32_t mask) { return ~mask & 0xffu; }

}  // namespace spin7
