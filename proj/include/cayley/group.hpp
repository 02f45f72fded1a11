#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/bitset.hpp"

namespace cayley {

namespace guards {
inline constexpr unsigned kSubgroupOrderLimit = 256;
inline constexpr std::uint64_t kAutGroupLimit = 10'000'000;
inline constexpr unsigned kAddTableLimit = 4096;
}  // namespace guards

using Elem = unsigned;

struct Subgroup {
  Bitset members;
  std::vector<Elem> generators;
  unsigned order = 0;
};

// An automorphism of the group, stored as its full image table.
struct GroupAutomorphism {
  std::vector<Elem> images;

  Elem operator()(Elem a) const { return images[a]; }
  bool is_identity() const;
  Bitset apply(const Bitset& s) const;
  bool fixes(const Bitset& s) const;  // setwise
};

// A finite abelian group in invariant-factor form d1 | d2 | ... | dk.
// Elements are mixed-radix indices in 0..n-1 (coordinate 0 least significant).
class AbelianGroup {
 public:
  // Canonicalizes an arbitrary cyclic-factor list, e.g. {6,2} -> {2,6}.
  // Throws InvalidInput on factors <= 1.
  explicit AbelianGroup(std::vector<unsigned> factors);

  unsigned order() const { return n_; }
  const std::vector<unsigned>& factors() const { return factors_; }
  unsigned exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  // Number of elements a with 2a = 0, identity included.
  unsigned involution_count() const;
  bool order_is_prime_power() const;

  Elem add(Elem a, Elem b) const {
    return add_table_.empty() ? add_slow(a, b) : add_table_[a * n_ + b];
  }
  Elem neg(Elem a) const { return neg_table_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  unsigned element_order(Elem a) const { return order_table_[a]; }

  std::vector<unsigned> coords(Elem a) const;
  Elem from_coords(const std::vector<unsigned>& c) const;

  // The inversion map a -> -a; the identity automorphism iff exponent <= 2.
  GroupAutomorphism inversion() const;

  // Every subgroup exactly once, sorted by (order, member bitset).
  std::vector<Subgroup> subgroups(unsigned order_limit = guards::kSubgroupOrderLimit) const;

  // The full automorphism group, lexicographically sorted by image table.
  // Guard aborts once more than `limit` automorphisms have been found.
  std::vector<GroupAutomorphism> automorphism_group(
      std::uint64_t limit = guards::kAutGroupLimit) const;

  // The n/|H| cosets of H, each as a bitset, ordered by least member.
  std::vector<Bitset> coset_partition(const Subgroup& h) const;

  bool is_subgroup(const Bitset& members) const;
  Subgroup subgroup_from_members(const Bitset& members) const;

  // Canonical spec string, e.g. "2,6".
  std::string spec_string() const;

 private:
  Elem add_slow(Elem a, Elem b) const;

  std::vector<unsigned> factors_;
  unsigned n_ = 1;
  std::vector<unsigned> strides_;
  std::vector<Elem> neg_table_;
  std::vector<unsigned> order_table_;
  std::vector<std::uint16_t> add_table_;  // n*n, only when n <= kAddTableLimit
};

AbelianGroup make_group(const std::vector<unsigned>& factors);

// Parses a comma-separated factor list, e.g. "2,4".
AbelianGroup parse_group(const std::string& spec);

}  // namespace cayley
