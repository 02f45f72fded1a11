// Deterministic Schreier-Sims stabilizer chain.
//
// Each level stores every strong generator that fixes all earlier base
// points, the orbit of its base point under those generators (BFS order) and
// a transversal of coset representatives. The chain is valid once every
// Schreier generator of every level sifts to the identity through the levels
// below it (Sims' criterion); run_schreier_sims() establishes exactly that,
// restarting at the deepest modified level whenever a sift fails.

#include "cayley/bsgs.hpp"

#include <algorithm>
#include <set>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

unsigned first_moved_point(const Perm& p) {
  for (unsigned i = 0; i < p.size(); ++i)
    if (p[i] != i) return i;
  throw CheckFailure("first_moved_point called on the identity");
}

}  // namespace

StabilizerChain::StabilizerChain(unsigned degree, const std::vector<Perm>& gens,
                                 const std::vector<unsigned>& forced_base)
    : degree_(degree) {
  for (unsigned b : forced_base) {
    if (b >= degree_) throw InvalidInput("forced base point out of range");
    Level lv;
    lv.beta = b;
    levels_.push_back(std::move(lv));
  }
  for (const Perm& g : gens) {
    if (g.size() != degree_) throw InvalidInput("generator degree mismatch");
    if (!perm_is_valid(g)) throw InvalidInput("generator is not a permutation");
    insert_generator(g, 0);
  }
  for (Level& lv : levels_) recompute_orbit(lv);
  run_schreier_sims(0);
}

void StabilizerChain::insert_generator(const Perm& g, std::size_t level) {
  if (perm_is_identity(g)) return;
  std::size_t j = level;
  while (j < levels_.size() && g[levels_[j].beta] == levels_[j].beta) ++j;
  if (j == levels_.size()) {
    Level lv;
    lv.beta = first_moved_point(g);
    levels_.push_back(std::move(lv));
  }
  for (std::size_t l = level; l <= j; ++l) levels_[l].gens.push_back(g);
}

void StabilizerChain::recompute_orbit(Level& lv) const {
  lv.orbit.clear();
  lv.transversal.assign(degree_, Perm{});
  lv.orbit.push_back(lv.beta);
  lv.transversal[lv.beta] = perm_identity(degree_);
  for (std::size_t idx = 0; idx < lv.orbit.size(); ++idx) {
    unsigned x = lv.orbit[idx];
    for (const Perm& s : lv.gens) {
      unsigned y = s[x];
      if (lv.transversal[y].empty()) {
        lv.transversal[y] = perm_compose(lv.transversal[x], s);
        lv.orbit.push_back(y);
      }
    }
  }
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm g, std::size_t level) const {
  for (std::size_t l = level; l < levels_.size(); ++l) {
    unsigned x = g[levels_[l].beta];
    const Perm& u = levels_[l].transversal[x];
    if (u.empty()) return {std::move(g), l};
    g = perm_compose(g, perm_invert(u));
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::run_schreier_sims(std::size_t from_level) {
  if (levels_.empty()) return;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  i = std::max(i, static_cast<std::ptrdiff_t>(from_level));
  while (i >= 0) {
    Level& lv = levels_[static_cast<std::size_t>(i)];
    recompute_orbit(lv);
    bool modified = false;
    for (std::size_t idx = 0; idx < lv.orbit.size() && !modified; ++idx) {
      unsigned x = lv.orbit[idx];
      for (const Perm& s : lv.gens) {
        unsigned y = s[x];
        Perm sg = perm_compose(perm_compose(lv.transversal[x], s), perm_invert(lv.transversal[y]));
        if (perm_is_identity(sg)) continue;
        auto [residue, stuck] = strip(std::move(sg), static_cast<std::size_t>(i) + 1);
        if (perm_is_identity(residue)) continue;
        std::size_t before = levels_.size();
        insert_generator(residue, static_cast<std::size_t>(i) + 1);
        std::size_t deepest = levels_.size() > before ? levels_.size() - 1 : stuck;
        i = static_cast<std::ptrdiff_t>(deepest);
        modified = true;
        break;
      }
    }
    if (!modified) --i;
  }
}

BigInt StabilizerChain::order() const {
  BigInt o = 1;
  for (const Level& lv : levels_) o *= static_cast<unsigned>(lv.orbit.size());
  return o;
}

bool StabilizerChain::contains(const Perm& p) const {
  if (p.size() != degree_) throw InvalidInput("contains: degree mismatch");
  if (!perm_is_valid(p)) throw InvalidInput("contains: not a permutation");
  auto [residue, stuck] = strip(p, 0);
  (void)stuck;
  return perm_is_identity(residue);
}

std::vector<unsigned> StabilizerChain::base() const {
  std::vector<unsigned> b;
  b.reserve(levels_.size());
  for (const Level& lv : levels_) b.push_back(lv.beta);
  return b;
}

std::vector<Perm> StabilizerChain::strong_generators() const {
  std::set<Perm> uniq;
  for (const Level& lv : levels_) uniq.insert(lv.gens.begin(), lv.gens.end());
  return {uniq.begin(), uniq.end()};
}

unsigned StabilizerChain::orbit_size(unsigned point) const {
  if (point >= degree_) throw InvalidInput("orbit point out of range");
  if (levels_.empty()) return 1;
  std::vector<bool> seen(degree_, false);
  std::vector<unsigned> queue{point};
  seen[point] = true;
  for (std::size_t idx = 0; idx < queue.size(); ++idx)
    for (const Perm& s : levels_[0].gens) {
      unsigned y = s[queue[idx]];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  return static_cast<unsigned>(queue.size());
}

StabilizerChain schreier_sims(unsigned degree, const std::vector<Perm>& gens) {
  return StabilizerChain(degree, gens);
}

BigInt stabilizer_order(const StabilizerChain& chain, unsigned point) {
  unsigned orbit = chain.orbit_size(point);
  if (orbit != chain.degree())
    throw InvalidInput("group is not transitive: orbit of point " + std::to_string(point) +
                       " has size " + std::to_string(orbit));
  StabilizerChain rebased(chain.degree(), chain.strong_generators(), {point});
  return rebased.order() / chain.degree();
}

}  // namespace cayley
