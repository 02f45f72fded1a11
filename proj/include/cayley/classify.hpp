#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/autsolver.hpp"
#include "cayley/bsgs.hpp"
#include "cayley/digraph.hpp"
#include "cayley/group.hpp"

namespace cayley {

// Lambda factor of a product witness: the connection set restricted to the
// cyclic factor is one of exactly four sets.
enum class SPrimeTag { empty, identity, complement_of_identity, all };
std::string sprime_tag_name(SPrimeTag t);

struct WreathWitness {
  std::size_t h_index = 0, k_index = 0;  // indices into GroupContext::subgroups
};

// Internal direct decomposition A = C x Z, C cyclic of order >= 4,
// Z elementary abelian 2-group (the trivial Z is allowed).
struct ProductDecomposition {
  std::size_t c_index = 0, z_index = 0;
  std::vector<Elem> comp_c, comp_z;  // a = comp_c[a] + comp_z[a], uniquely
};

struct ProductWitness {
  std::size_t decomp_index = 0;
  SPrimeTag tag = SPrimeTag::empty;
  Bitset s_z;  // the Z factor of the product set
};

struct Classification {
  BigInt aut_order;
  bool is_drr = false;
  std::optional<bool> is_small;  // graph mode only
  std::optional<WreathWitness> wreath;
  std::vector<std::size_t> normalizers;  // indices into GroupContext::automorphisms
  std::optional<ProductWitness> product;  // graph mode only
  std::string canonical_hex;
};

struct ContextOptions {
  bool subgroup_data = true;      // subgroup lattice, wreath pairs, decompositions
  bool automorphism_data = true;  // full Aut(A) list
  unsigned subgroup_order_limit = guards::kSubgroupOrderLimit;
  std::uint64_t automorphism_limit = guards::kAutGroupLimit;
};

// Immutable per-group data shared by the classifiers; safe to share across
// census workers.
struct GroupContext {
  AbelianGroup group;
  unsigned m = 0;  // number of elements of order <= 2
  bool prime_power = false;

  std::vector<Subgroup> subgroups;
  std::vector<std::pair<std::size_t, std::size_t>> wreath_pairs;  // (H,K), canonical order
  std::vector<std::vector<Bitset>> subgroup_cosets;               // per subgroup index

  std::vector<GroupAutomorphism> automorphisms;  // lex order
  std::size_t identity_index = 0, inversion_index = 0;
  std::vector<std::size_t> normalizer_scan_order;  // ascending support size

  std::vector<ProductDecomposition> decompositions;

  Perm inversion_perm;
  std::vector<Perm> translation_gens;  // right-regular representation generators

  explicit GroupContext(AbelianGroup g, const ContextOptions& opts = {});
};

// |Aut(Cay(A,S))| exactly, via the refinement solver plus Schreier-Sims.
BigInt aut_order(const GroupContext& ctx, const Bitset& s);

bool is_drr(const GroupContext& ctx, const Bitset& s);

// True iff Aut(Cay(A,S)) equals A x <iota> exactly: the order matches 2n
// (n when A has exponent <= 2) and the group contains the regular
// representation and the permutation induced by iota.
bool is_small(const GroupContext& ctx, const Bitset& s);

// First (H, K) pair in canonical subgroup order with 1 < H <= K < A and
// S \ K a union of H-cosets. The empty union (S inside K) counts.
std::optional<WreathWitness> find_wreath_witness(const GroupContext& ctx, const Bitset& s);
bool has_wreath_witness(const GroupContext& ctx, const Bitset& s);

// All non-excluded group automorphisms fixing S setwise. The identity is
// always excluded; exclude_inversion additionally excludes iota.
std::vector<std::size_t> find_normalizers(const GroupContext& ctx, const Bitset& s,
                                          bool exclude_inversion);
bool has_normalizer(const GroupContext& ctx, const Bitset& s, bool exclude_inversion);

// First decomposition A = C x Z under which S = S' x S'' with S' one of the
// four allowed values and S'' inside Z. Requires inverse-closed S.
std::optional<ProductWitness> find_product_witness(const GroupContext& ctx, const Bitset& s);
bool has_product_witness(const GroupContext& ctx, const Bitset& s);

Classification classify(const GroupContext& ctx, const Bitset& s, Mode mode);

// Compact per-subset result for census loops: witness existence only.
struct SubsetAnalysis {
  BigInt aut_order;
  bool good = false;  // DRR in digraph mode, small in graph mode
  bool gw = false, nor = false, ex = false;
  std::string canonical;  // only when requested
};
SubsetAnalysis analyze_subset(const GroupContext& ctx, const Bitset& s, Mode mode,
                              bool want_canonical = false);

}  // namespace cayley
