#pragma once

#include <cstdint>
#include <string>

#include "cayley/census.hpp"
#include "cayley/classify.hpp"

namespace cayley {

struct UnlabeledReport {
  std::string group_spec;
  Mode mode = Mode::digraph;
  BigInt orbit_count;                  // Aut(A)-orbits on connection sets (Burnside)
  std::uint64_t iso_classes = 0;       // canonical-form classes
  std::uint64_t good_iso_classes = 0;  // unlabeled DRRs / smallest-group graphs
  std::uint64_t good_labeled = 0;
  BigRat lower_bound;  // |good labeled| / |Aut(A)|
  double ratio = 0.0;  // good_iso_classes / iso_classes
};

// Number of Aut(A)-orbits on all subsets (or on the inverse-closed subsets,
// which are exactly the iota-fixed ones), by the orbit-counting lemma:
// averages 2^(#orbits of <phi> on A) — respectively <phi, iota> — over Aut(A).
BigInt orbit_count(const GroupContext& ctx, bool inverse_closed_only);

// Canonical-form census of all Cayley (di)graphs on A. Asserts the unlabeled
// lower bound good_iso * |Aut(A)| >= good_labeled and iso_classes <= orbits.
UnlabeledReport unlabeled_census(const GroupContext& ctx, Mode mode,
                                 const CensusOptions& opts = {});

// For two DRR connection sets: whether the digraphs are isomorphic. Also
// verifies this is equivalent to conjugacy of the sets under Aut(A), which is
// the point of the unlabeled lower bound. Throws InvalidInput on non-DRRs.
bool drr_conjugacy_check(const GroupContext& ctx, const Bitset& s1, const Bitset& s2);

}  // namespace cayley
