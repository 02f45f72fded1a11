#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/bounds.hpp"
#include "cayley/classify.hpp"
#include "cayley/digraph.hpp"

namespace cayley {

namespace guards {
inline constexpr unsigned kCensusHardLimit = 24;
inline constexpr unsigned kSampleVertexLimit = 64;
}  // namespace guards

struct CensusTotals {
  std::uint64_t subsets = 0;
  std::uint64_t good_target = 0;  // DRR count (digraph) / small count (graph)
  std::uint64_t gw = 0;           // graph mode: zero when |A| is a prime power
  std::uint64_t gw_raw = 0;       // witness count with no convention applied
  std::uint64_t nor = 0;
  std::uint64_t ex = 0;
  std::uint64_t bad = 0;  // union, no double counting
  std::uint64_t good = 0;
};

// Per-subset flag bits, index = subset index in SubsetSpace order.
enum SubsetFlags : std::uint8_t {
  kFlagGood = 1,
  kFlagGw = 2,
  kFlagNor = 4,
  kFlagEx = 8,
};

struct CensusReport {
  std::string group_spec;
  Mode mode = Mode::digraph;
  unsigned n = 0, m = 0;
  bool prime_power = false;
  CensusTotals totals;
  std::vector<std::uint64_t> violations;  // offending subset bitmasks, sorted
  BoundSet bounds;
  std::uint64_t solver_nodes = 0;
  std::vector<std::uint8_t> per_subset;  // filled when keep_flags is set
};

struct CensusOptions {
  unsigned jobs = 0;   // 0 = hardware concurrency
  unsigned limit = 0;  // 0 = mode default (16 digraph / 20 graph)
  bool force = false;
  bool keep_flags = false;
};

// Classifies every connection set, checks the dichotomy for each one and
// aggregates the counts. A dichotomy failure is recorded, not thrown; the
// report's `violations` is the falsification channel.
CensusReport exact_census(const GroupContext& ctx, Mode mode, const CensusOptions& opts = {});

// Number of subsets (digraph) / inverse-closed subsets (graph) S such that
// S \ K is a union of H-cosets, by the closed-form count:
//   digraph: 2^(k + (n-k)/h)
//   graph:   2^(j + (k-j)/2 + i/h + (n-k-i)/(2h)), j = #{x in K : 2x = 0},
//            i = #{x in A\K : 2x in H}
BigInt gw_pair_count(const AbelianGroup& g, const Subgroup& h, const Subgroup& k, Mode mode);

// Exact number of quadruples (C, Z, S', S'') over all decompositions
// A = C x Z; asserted against its bound exponent n/4 + 2*log2(n) - 1.
BigInt ex_quadruple_count(const GroupContext& ctx);

struct SampleReport {
  std::string group_spec;
  Mode mode = Mode::digraph;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t hits = 0;
  double estimate = 0.0;
  double ci_low = 0.0, ci_high = 1.0;  // exact (Clopper-Pearson) 99% interval
};

inline constexpr std::uint64_t kDefaultSeed = 0xCA11E7;

// Uniform sampling of connection sets; per-trial randomness is derived from
// (seed, trial index) alone, so reports are identical for any worker count.
SampleReport sample_census(const GroupContext& ctx, Mode mode, std::uint64_t trials,
                           std::uint64_t seed, unsigned jobs = 0);

// True iff Cay(A,S) is a DRR (digraph mode) / has smallest automorphism
// group (graph mode); the sampler's per-trial predicate.
bool subset_is_good(const GroupContext& ctx, const Bitset& s, Mode mode);

// Central band [lo, hi] of Binomial(trials, p): P(X < lo) and P(X > hi) are
// each at most alpha/2.
std::pair<std::uint64_t, std::uint64_t> binomial_band(std::uint64_t trials, double p,
                                                      double alpha = 0.01);

std::pair<double, double> clopper_pearson(std::uint64_t hits, std::uint64_t trials,
                                          double alpha = 0.01);

// The splittable per-trial seed scheme (SplitMix64 over seed and index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace cayley
