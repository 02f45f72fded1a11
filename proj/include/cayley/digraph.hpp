#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/bitset.hpp"
#include "cayley/exact.hpp"
#include "cayley/group.hpp"

namespace cayley {

namespace guards {
inline constexpr unsigned kDigraphCensusLimit = 16;
inline constexpr unsigned kGraphCensusLimit = 20;
}  // namespace guards

enum class Mode { digraph, graph };

Mode parse_mode(const std::string& s);
std::string mode_name(Mode m);

// Cay(A,S): arc (x,y) present iff x - y in S. Loops allowed (0 in S).
struct CayleyDigraph {
  unsigned n = 0;
  std::vector<Bitset> out;  // out[x] = {x - s : s in S}

  bool arc(unsigned x, unsigned y) const { return out[x].test(y); }
  // Debug export, one line per vertex: "u: v1 v2 ...".
  std::string adjacency_list() const;
};

CayleyDigraph build_cayley(const AbelianGroup& g, const Bitset& connection_set);

bool is_inverse_closed(const AbelianGroup& g, const Bitset& s);

// |2_*^A| = 2^m * 2^((n-m)/2), m = number of elements of order <= 2.
BigInt count_inverse_closed(const AbelianGroup& g);

// Deterministic, random-access enumeration of connection sets.
//   digraph: all 2^n subsets, index = membership bitmask.
//   graph:   all inverse-closed subsets; index bits choose, in order, the
//            involutions (ascending element) then the inverse pairs {a,-a}
//            (ascending smaller element).
// Random access makes the stream cloneable at arbitrary offsets, which is
// what the partitioned census workers rely on.
class SubsetSpace {
 public:
  SubsetSpace(const AbelianGroup& g, Mode mode, unsigned vertex_limit);

  std::uint64_t count() const;
  unsigned free_bits() const {
    return mode_ == Mode::digraph
               ? g_->order()
               : static_cast<unsigned>(involutions_.size() + pair_reps_.size());
  }
  Bitset at(std::uint64_t index) const;
  // The same choice-bit encoding, used by the sampler to draw uniformly.
  Bitset from_choice_bits(std::uint64_t bits) const { return at(bits); }

  Mode mode() const { return mode_; }
  const AbelianGroup& group() const { return *g_; }

 private:
  const AbelianGroup* g_;
  Mode mode_;
  std::vector<Elem> involutions_;
  std::vector<Elem> pair_reps_;
};

// Parses "1,3" (element indices) or "0xA" (membership bitmask).
Bitset parse_connection_set(const AbelianGroup& g, const std::string& spec);
std::string connection_set_string(const Bitset& s);

}  // namespace cayley
