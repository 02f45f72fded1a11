#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/bitset.hpp"
#include "cayley/digraph.hpp"
#include "cayley/perm.hpp"

namespace cayley {

namespace guards {
inline constexpr unsigned kSolverVertexLimit = 4096;
inline constexpr unsigned kBruteForceLimit = 8;
inline constexpr std::uint64_t kSolverNodeLimit = 50'000'000;
}  // namespace guards

// Vertex-colored digraph; automorphisms must preserve colors and arcs.
// Loops are permitted and are folded into the working colors by the solver.
struct ColoredDigraph {
  unsigned n = 0;
  std::vector<Bitset> out;
  std::vector<unsigned> colors;  // size n; empty means all-equal

  bool arc(unsigned x, unsigned y) const { return out[x].test(y); }
  unsigned color(unsigned v) const { return colors.empty() ? 0u : colors[v]; }
};

ColoredDigraph colored_from_cayley(const CayleyDigraph& d);

// Coarsest stable refinement of `coloring`: vertices share a class only if
// they have equal out-degree into and in-degree from every class. The result
// uses class ids 0..C-1 assigned by (input class, signature) order, which
// makes the function idempotent and relabeling-invariant.
std::vector<unsigned> refine(const ColoredDigraph& g, const std::vector<unsigned>& coloring);

struct AutSearchResult {
  std::vector<Perm> generators;  // generate the full automorphism group
  std::string canonical_form;    // relabeling-invariant byte string
  std::uint64_t nodes = 0;
};

// Individualization-refinement backtracking with orbit pruning by the
// automorphisms found so far.
AutSearchResult automorphism_search(const ColoredDigraph& g,
                                    std::uint64_t node_limit = guards::kSolverNodeLimit);

std::vector<Perm> automorphism_generators(const ColoredDigraph& g);
std::string canonical_form(const ColoredDigraph& g);
std::string hex_encode(const std::string& bytes);

// Validation oracle: filters all n! permutations. Guarded at n <= 8.
std::vector<Perm> brute_force_automorphisms(const ColoredDigraph& g);

bool is_automorphism(const ColoredDigraph& g, const Perm& p);

}  // namespace cayley
