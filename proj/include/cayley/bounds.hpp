#pragma once

#include <string>
#include <vector>

#include "cayley/exact.hpp"

namespace cayley {

// One upper-bound exponent e, for assertions of the shape count <= 2^e.
// log2(n) enters the exponents; it is exact when n is a power of two and
// otherwise replaced by its ceiling (which only weakens upper bounds).
// The floor variant is carried alongside for reporting.
struct BoundExponent {
  BigRat exponent;        // ceiling variant; this is what comparisons use
  BigRat exponent_floor;  // equals `exponent` when log2 is exact
  bool log2_exact = false;

  bool admits(const BigInt& count) const { return count_le_pow2(count, exponent); }
};

struct BoundSet {
  BoundExponent thm_epsilon1;      // non-DRR subsets:          3n/4 + 2L^2 + 1
  BoundExponent thm_epsilon2;      // non-small inverse-closed: m/2 + 11n/24 + 2L^2 + 2
  BoundExponent lemma_gw_digraph;  // 3n/4 + 2L^2
  BoundExponent lemma_nor_digraph; // 3n/4 + L^2
  BoundExponent lemma_ex;          // n/4 + 2L - 1
  BoundExponent lemma_gw_graph;    // m/2 + 11n/24 + 2L^2
  BoundExponent lemma_nor_graph;   // m/2 + 11n/24 + L^2
};

BoundSet bound_set(unsigned n, unsigned m);

bool is_power_of_two(unsigned n);
unsigned floor_log2(unsigned n);
unsigned ceil_log2(unsigned n);

}  // namespace cayley
