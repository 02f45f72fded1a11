#pragma once

#include <vector>

#include "cayley/exact.hpp"
#include "cayley/perm.hpp"

namespace cayley {

// Base and strong generating set with explicit transversals, built by the
// deterministic (non-randomized) Schreier-Sims algorithm. Gives the exact
// group order and a membership test.
class StabilizerChain {
 public:
  // <gens> on 0..degree-1; the empty list yields the trivial group.
  // forced_base points are used first, in order (for stabilizer rebasing).
  StabilizerChain(unsigned degree, const std::vector<Perm>& gens,
                  const std::vector<unsigned>& forced_base = {});

  unsigned degree() const { return degree_; }
  BigInt order() const;
  bool contains(const Perm& p) const;

  std::vector<unsigned> base() const;
  std::vector<Perm> strong_generators() const;

  // Size of the orbit of `point` under the whole group.
  unsigned orbit_size(unsigned point) const;

 private:
  struct Level {
    unsigned beta;
    std::vector<Perm> gens;         // strong generators fixing all earlier base points
    std::vector<unsigned> orbit;    // BFS discovery order, orbit[0] == beta
    std::vector<Perm> transversal;  // indexed by point; empty = not in orbit
  };

  void insert_generator(const Perm& g, std::size_t level);
  void recompute_orbit(Level& lv) const;
  // Multiplies g into the chain starting at `level`; returns the residue and
  // the level it got stuck at.
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t level) const;
  void run_schreier_sims(std::size_t from_level);

  unsigned degree_;
  std::vector<Level> levels_;
};

StabilizerChain schreier_sims(unsigned degree, const std::vector<Perm>& gens);

// |G_point| for a transitive chain; throws InvalidInput (reporting the orbit
// size) when the group is not transitive on 0..degree-1.
BigInt stabilizer_order(const StabilizerChain& chain, unsigned point);

}  // namespace cayley
