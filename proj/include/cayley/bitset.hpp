#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cayley {

// Dense element/vertex sets. Group elements and graph vertices are indices
// 0..n-1, so a subset is a bitset of width n.
using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline Bitset bitset_from_mask(unsigned n, std::uint64_t mask) {
  Bitset b(n);
  for (unsigned i = 0; i < n && i < 64; ++i)
    if (mask >> i & 1) b.set(i);
  return b;
}

// Only valid for n <= 64.
inline std::uint64_t mask_from_bitset(const Bitset& b) {
  std::uint64_t mask = 0;
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i))
    mask |= std::uint64_t{1} << i;
  return mask;
}

inline std::vector<unsigned> bitset_elements(const Bitset& b) {
  std::vector<unsigned> out;
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i))
    out.push_back(static_cast<unsigned>(i));
  return out;
}

inline Bitset bitset_from_elements(unsigned n, const std::vector<unsigned>& elems) {
  Bitset b(n);
  for (unsigned e : elems) b.set(e);
  return b;
}

std::string bitset_hex(const Bitset& b);

}  // namespace cayley
