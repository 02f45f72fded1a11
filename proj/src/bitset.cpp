#include "cayley/bitset.hpp"

namespace cayley {

std::string bitset_hex(const Bitset& b) {
  // little-endian nibbles over element indices, fixed width for given n
  static const char* digits = "0123456789abcdef";
  std::string out = "0x";
  const std::size_t nibbles = (b.size() + 3) / 4;
  for (std::size_t k = nibbles; k-- > 0;) {
    unsigned v = 0;
    for (unsigned j = 0; j < 4; ++j) {
      std::size_t bit = 4 * k + j;
      if (bit < b.size() && b.test(bit)) v |= 1u << j;
    }
    out.push_back(digits[v]);
  }
  return out;
}

}  // namespace cayley
