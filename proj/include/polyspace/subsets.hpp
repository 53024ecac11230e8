#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace polyspace {

// Subsets of [n] = {1,...,n} packed as bitmasks: element i <-> bit (i-1).
using Mask = std::uint32_t;

// Hard cap for subset-enumeration routines (2^(n-1) scans with 64-bit sums).
constexpr int kMaxSides = 24;

inline int set_size(Mask m) { return std::popcount(m); }

inline bool contains(Mask m, int element) { return (m >> (element - 1)) & 1u; }

inline Mask with_element(Mask m, int element) { return m | (Mask{1} << (element - 1)); }

inline Mask without_element(Mask m, int element) { return m & ~(Mask{1} << (element - 1)); }

inline Mask full_mask(int n) { return (n == 0) ? 0u : (Mask{0xffffffffu} >> (32 - n)); }

// Ascending 1-based elements of a mask.
std::vector<int> elements_of(Mask m);

Mask mask_of(const std::vector<int>& elements);
Mask mask_of(std::initializer_list<int> elements);

// "{2,4,9}" style rendering; "{}" for the empty set.
std::string set_to_string(Mask m);

// Dominance partial order: dominated_by(I, J) is true iff I <= J, i.e. the
// elements of I can be matched injectively to not-smaller elements of J.
// Equivalent suffix-count form: |I ∩ [x,n]| <= |J ∩ [x,n]| for every x.
bool dominated_by(Mask I, Mask J);

}  // namespace polyspace
