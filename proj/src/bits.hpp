#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sperner {

// Subsets of a ground set {0,...,n-1}, n <= 64, as bit masks.
using SetMask = std::uint64_t;

namespace bits {

inline constexpr int max_ground = 64;

inline SetMask full_mask(int n) {
  return n == 64 ? ~SetMask{0} : ((SetMask{1} << n) - 1);
}

inline int count(SetMask m) { return std::popcount(m); }

inline bool contains(SetMask m, int e) { return (m >> e) & 1u; }

inline bool subset_of(SetMask a, SetMask b) { return (a & ~b) == 0; }

inline bool proper_subset_of(SetMask a, SetMask b) {
  return a != b && subset_of(a, b);
}

inline bool intersects(SetMask a, SetMask b) { return (a & b) != 0; }

inline std::vector<int> elements(SetMask m) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(count(m)));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Next k-subset in colex-compatible ascending mask order (Gosper).
inline SetMask next_combination(SetMask v) {
  SetMask t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

// All k-subsets of the ground [n] in ascending mask order.
inline std::vector<SetMask> combinations(int n, int k) {
  std::vector<SetMask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  SetMask v = (SetMask{1} << k) - 1;
  SetMask limit = full_mask(n);
  while (v <= limit) {
    out.push_back(v);
    if (v == 0) break;
    SetMask nx = next_combination(v);
    if (nx <= v) break;  // overflow wrap
    v = nx;
  }
  return out;
}

}  // namespace bits
}  // namespace sperner
