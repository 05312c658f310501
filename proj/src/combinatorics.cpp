#include "spin7/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace spin7 {

namespace {

struct Tables {
  std::array<std::vector<std::uint32_t>, 9> masks;
  std::array<int, 256> rank{};

  Tables() {
    for (std::uint32_t m = 0; m < 256; ++m) masks[std::popcount(m)].push_back(m);
    // masks with the same popcount, sorted numerically, are NOT in lex order
    // of index lists (e.g. {1,8} < {2,3} lexicographically but 0x81 > 0x06);
    // sort by the index tuples instead.
    for (auto& v : masks) {
      std::sort(v.begin(), v.end(), [](std::uint32_t lhs, std::uint32_t rhs) {
        while (lhs != 0 && rhs != 0) {
          const int a = std::countr_zero(lhs), b = std::countr_zero(rhs);
          if (a != b) return a < b;
          lhs &= lhs - 1;
          rhs &= rhs - 1;
        }
        return lhs == 0 && rhs != 0;
      });
    }
    for (int k = 0; k <= 8; ++k)
      for (std::size_t i = 0; i < masks[k].size(); ++i) rank[masks[k][i]] = static_cast<int>(i);
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

const std::vector<std::uint32_t>& basis_masks(int grade) {
  if (grade < 0 || grade > 8) throw std::invalid_argument("grade must be in 0..8");
  return tables().masks[static_cast<std::size_t>(grade)];
}

int mask_rank(std::uint32_t mask) { return tables().rank[mask & 0xffu]; }

}  // namespace spin7
