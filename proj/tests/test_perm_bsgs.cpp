#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cayley/bsgs.hpp"
#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "cayley/perm.hpp"

using namespace cayley;

TEST_CASE("composition convention fixture") {
  // left-to-right: compose(p, q) applies p first
  Perm p{1, 0, 2};  // (0 1)
  Perm q{0, 2, 1};  // (1 2)
  Perm pq = perm_compose(p, q);
  CHECK(pq[0] == 2);  // 0 -p-> 1 -q-> 2
  CHECK(perm_compose(perm_identity(3), p) == p);
  CHECK(perm_compose(p, perm_invert(p)) == perm_identity(3));
  CHECK(perm_invert(Perm{1, 2, 0}) == Perm{2, 0, 1});  // (0 1 2)^-1 = (0 2 1)
  CHECK(perm_compose(p, p) == perm_identity(3));
  CHECK_THROWS_AS(perm_compose(p, perm_identity(4)), InvalidInput);
  CHECK(perm_cycle_string(Perm{1, 2, 0, 3}) == "(0 1 2)");
  CHECK(perm_cycle_string(perm_identity(2)) == "()");
}

namespace {

std::vector<Perm> regular_representation(const AbelianGroup& g) {
  std::vector<Perm> gens;
  unsigned stride = 1;
  for (unsigned d : g.factors()) {
    Perm t(g.order());
    for (Elem x = 0; x < g.order(); ++x) t[x] = g.add(x, stride);
    gens.push_back(t);
    stride *= d;
  }
  return gens;
}

// independent oracle: BFS closure by multiplication
std::set<Perm> bfs_closure(unsigned degree, const std::vector<Perm>& gens) {
  std::set<Perm> elems{perm_identity(degree)};
  std::vector<Perm> queue{perm_identity(degree)};
  while (!queue.empty()) {
    Perm p = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) {
      Perm q = perm_compose(p, g);
      if (elems.insert(q).second) queue.push_back(q);
    }
  }
  return elems;
}

}  // namespace

TEST_CASE("schreier-sims orders") {
  CHECK(StabilizerChain(4, {}).order() == 1);
  CHECK(StabilizerChain(4, {Perm{1, 0, 2, 3}, Perm{1, 2, 3, 0}}).order() == 24);  // Sym(4)
  CHECK(StabilizerChain(5, {Perm{1, 0, 2, 3, 4}, Perm{1, 2, 3, 4, 0}}).order() == 120);
  AbelianGroup z6({6});
  CHECK(StabilizerChain(6, regular_representation(z6)).order() == 6);
}

TEST_CASE("membership") {
  StabilizerChain sym4(4, {Perm{1, 0, 2, 3}, Perm{1, 2, 3, 0}});
  CHECK(sym4.contains(Perm{0, 3, 2, 1}));  // (1 3)
  CHECK(sym4.contains(perm_identity(4)));

  AbelianGroup z6({6});
  StabilizerChain reg(6, regular_representation(z6));
  CHECK_FALSE(reg.contains(Perm{1, 0, 2, 3, 4, 5}));  // regular rep is fixed-point-free
  for (const Perm& g : regular_representation(z6)) CHECK(reg.contains(g));
  CHECK_THROWS_AS(reg.contains(perm_identity(5)), InvalidInput);
}

TEST_CASE("stabilizer orders") {
  AbelianGroup z4({4});
  StabilizerChain reg(4, regular_representation(z4));
  CHECK(stabilizer_order(reg, 0) == 1);

  StabilizerChain sym4(4, {Perm{1, 0, 2, 3}, Perm{1, 2, 3, 0}});
  CHECK(stabilizer_order(sym4, 0) == 6);
  CHECK(stabilizer_order(sym4, 2) == 6);

  // automorphisms of the undirected 4-cycle: brute-force filter, order 8
  std::vector<Perm> c4_auts;
  Perm p = perm_identity(4);
  auto adjacent = [](unsigned a, unsigned b) { return (a + 1) % 4 == b || (b + 1) % 4 == a; };
  do {
    bool ok = true;
    for (unsigned a = 0; a < 4 && ok; ++a)
      for (unsigned b = 0; b < 4 && ok; ++b)
        if (adjacent(a, b) != adjacent(p[a], p[b])) ok = false;
    if (ok) c4_auts.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  REQUIRE(c4_auts.size() == 8);
  StabilizerChain dihedral(4, c4_auts);
  CHECK(dihedral.order() == 8);
  for (unsigned pt = 0; pt < 4; ++pt) CHECK(stabilizer_order(dihedral, pt) == 2);

  // non-transitive input reports the orbit
  StabilizerChain partial(4, {Perm{1, 0, 2, 3}});
  CHECK_THROWS_AS(stabilizer_order(partial, 0), InvalidInput);
}

TEST_CASE("random generator sets agree with the closure oracle") {
  std::mt19937_64 rng(0xC0FFEE);
  for (unsigned trial = 0; trial < 60; ++trial) {
    unsigned degree = 2 + static_cast<unsigned>(rng() % 7);  // up to 8 points
    unsigned k = 1 + static_cast<unsigned>(rng() % 3);
    std::vector<Perm> gens;
    for (unsigned i = 0; i < k; ++i) {
      Perm p = perm_identity(degree);
      std::shuffle(p.begin(), p.end(), rng);
      gens.push_back(p);
    }
    auto closure = bfs_closure(degree, gens);
    StabilizerChain chain(degree, gens);
    CHECK(chain.order() == closure.size());
    for (const Perm& e : closure) CHECK(chain.contains(e));
    // elements outside the closure are rejected
    for (unsigned probe = 0; probe < 10; ++probe) {
      Perm p = perm_identity(degree);
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(chain.contains(p) == (closure.count(p) > 0));
    }
  }
}

TEST_CASE("order is invariant under generator permutation") {
  std::mt19937_64 rng(1234);
  for (unsigned trial = 0; trial < 20; ++trial) {
    unsigned degree = 3 + static_cast<unsigned>(rng() % 5);
    std::vector<Perm> gens;
    for (unsigned i = 0; i < 3; ++i) {
      Perm p = perm_identity(degree);
      std::shuffle(p.begin(), p.end(), rng);
      gens.push_back(p);
    }
    BigInt reference = StabilizerChain(degree, gens).order();
    for (unsigned s = 0; s < 4; ++s) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(StabilizerChain(degree, gens).order() == reference);
    }
  }
}

TEST_CASE("strong generators sift and base is consistent") {
  StabilizerChain sym5(5, {Perm{1, 0, 2, 3, 4}, Perm{1, 2, 3, 4, 0}});
  for (const Perm& g : sym5.strong_generators()) CHECK(sym5.contains(g));
  CHECK(!sym5.base().empty());
}
