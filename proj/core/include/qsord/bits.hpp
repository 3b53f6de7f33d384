#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qsord {

using Index = std::size_t;
/// Set of element indices, one bit per element.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

constexpr Mask bit(Index i) { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t n) {
  return n >= kMaxElements ? ~Mask{0} : bit(n) - 1;
}

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool contains(Mask m, Index i) { return (m >> i) & 1U; }

constexpr Index lowest(Mask m) { return static_cast<Index>(std::countr_zero(m)); }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

inline std::vector<Index> indices_of(Mask m) {
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_bit(m, [&](Index i) { out.push_back(i); });
  return out;
}

}  // namespace qsord
