#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cayley/errors.hpp"
#include "cayley/exact.hpp"
#include "cayley/group.hpp"

using namespace cayley;

TEST_CASE("invariant factor canonicalization") {
  CHECK(make_group({4}).factors() == std::vector<unsigned>{4});
  CHECK(make_group({4}).order() == 4);
  CHECK(make_group({6, 2}).factors() == std::vector<unsigned>{2, 6});
  CHECK(make_group({6, 2}).order() == 12);
  CHECK(make_group({2, 2, 2}).factors() == std::vector<unsigned>{2, 2, 2});
  CHECK(make_group({2, 2, 2}).exponent() == 2);
  // 12 = 4*3, 18 = 2*9 -> chain 6 | 36
  CHECK(make_group({12, 18}).factors() == std::vector<unsigned>{6, 36});
  CHECK_THROWS_AS(make_group({1}), InvalidInput);
  CHECK_THROWS_AS(make_group({0}), InvalidInput);
  CHECK_THROWS_AS(parse_group("4,x"), InvalidInput);
  CHECK(parse_group("2,4").spec_string() == "2,4");
}

TEST_CASE("element encoding round-trips") {
  AbelianGroup g({3, 4, 5});
  for (Elem a = 0; a < g.order(); ++a) CHECK(g.from_coords(g.coords(a)) == a);
}

TEST_CASE("arithmetic and element orders") {
  AbelianGroup z6z2({6, 2});
  // element (1,1): coordinate order is [2,6] after canonicalization
  Elem e = z6z2.from_coords({1, 1});
  CHECK(z6z2.element_order(e) == 6);
  CHECK(z6z2.element_order(0) == 1);
  AbelianGroup z8({8});
  CHECK(z8.element_order(4) == 2);
  CHECK(z8.add(5, 6) == 3);
  CHECK(z8.neg(3) == 5);
  CHECK(z8.sub(2, 5) == 5);
}

TEST_CASE("involution counts") {
  CHECK(make_group({9}).involution_count() == 1);
  CHECK(make_group({2, 6}).involution_count() == 4);
  CHECK(make_group({2, 2, 2}).involution_count() == 8);
  // gcd formula agrees with a direct scan
  for (auto factors : {std::vector<unsigned>{12}, {2, 4}, {3, 6}, {2, 2, 4}}) {
    AbelianGroup g(factors);
    unsigned scan = 0;
    for (Elem a = 0; a < g.order(); ++a)
      if (g.add(a, a) == 0) ++scan;
    CHECK(g.involution_count() == scan);
  }
}

TEST_CASE("exponent and inversion map") {
  AbelianGroup z4({4});
  auto iota = z4.inversion();
  CHECK(iota.images == std::vector<Elem>{0, 3, 2, 1});
  CHECK(make_group({2, 2}).inversion().is_identity());
  AbelianGroup z5({5});
  for (Elem x = 0; x < 5; ++x) CHECK(z5.inversion()(x) == (5 - x) % 5);
  // involution property
  for (Elem x = 0; x < 4; ++x) CHECK(iota(iota(x)) == x);
}

TEST_CASE("subgroup enumeration") {
  CHECK(make_group({4}).subgroups().size() == 3);
  CHECK(make_group({2, 2}).subgroups().size() == 5);
  CHECK(make_group({6}).subgroups().size() == 4);
  CHECK(make_group({2, 2, 2}).subgroups().size() == 16);  // Gaussian binomials over F2

  AbelianGroup g({2, 4});
  auto subs = g.subgroups();
  std::set<Bitset> seen;
  for (const auto& h : subs) {
    CHECK(g.is_subgroup(h.members));
    CHECK(h.order == h.members.count());
    CHECK(g.order() % h.order == 0);  // Lagrange
    CHECK(seen.insert(h.members).second);
    auto blocks = g.coset_partition(h);
    CHECK(blocks.size() == g.order() / h.order);
    Bitset all(g.order());
    for (const auto& b : blocks) {
      CHECK(b.count() == h.order);
      CHECK((all & b).none());
      all |= b;
    }
    CHECK(all.count() == g.order());
  }
  // sorted by (order, members)
  for (std::size_t i = 1; i < subs.size(); ++i) {
    CHECK(subs[i - 1].order <= subs[i].order);
    if (subs[i - 1].order == subs[i].order) CHECK(subs[i - 1].members < subs[i].members);
  }
  CHECK_THROWS_AS(make_group({257}).subgroups(), ResourceLimit);
}

TEST_CASE("coset partitions") {
  AbelianGroup z4({4});
  auto subs = z4.subgroups();
  // subs[1] is {0,2}
  auto blocks = z4.coset_partition(subs[1]);
  REQUIRE(blocks.size() == 2);
  CHECK(bitset_elements(blocks[0]) == std::vector<unsigned>{0, 2});
  CHECK(bitset_elements(blocks[1]) == std::vector<unsigned>{1, 3});
  CHECK(z4.coset_partition(subs[0]).size() == 4);  // trivial subgroup
  CHECK(z4.coset_partition(subs[2]).size() == 1);  // whole group
  Subgroup bogus;
  bogus.members = bitset_from_mask(4, 0b0011);  // {0,1} not closed
  bogus.order = 2;
  CHECK_THROWS_AS(z4.coset_partition(bogus), InvalidInput);
}

namespace {

// independent oracle: filter all permutations of the element set for the
// homomorphism property (order <= 5 only: n! blows up)
unsigned brute_force_aut_count(const AbelianGroup& g) {
  std::vector<unsigned> p(g.order());
  for (unsigned i = 0; i < g.order(); ++i) p[i] = i;
  unsigned count = 0;
  do {
    if (p[0] != 0) continue;
    bool hom = true;
    for (Elem a = 0; a < g.order() && hom; ++a)
      for (Elem b = a; b < g.order() && hom; ++b)
        if (p[g.add(a, b)] != g.add(p[a], p[b])) hom = false;
    if (hom) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST_CASE("automorphism group enumeration") {
  auto aut_z4 = make_group({4}).automorphism_group();
  REQUIRE(aut_z4.size() == 2);
  CHECK(aut_z4[0].is_identity());
  CHECK(aut_z4[1].images == std::vector<Elem>{0, 3, 2, 1});

  CHECK(make_group({2, 2}).automorphism_group().size() == 6);
  CHECK(make_group({2, 2}).automorphism_group().size() == brute_force_aut_count(make_group({2, 2})));
  CHECK(make_group({8}).automorphism_group().size() == 4);
  CHECK(make_group({5}).automorphism_group().size() == brute_force_aut_count(make_group({5})));
  CHECK(make_group({2, 2, 2}).automorphism_group().size() == 168);  // |GL(3,2)|
}

TEST_CASE("automorphism properties") {
  for (auto factors : {std::vector<unsigned>{12}, {2, 4}, {2, 2, 2}, {3, 3}, {16}}) {
    AbelianGroup g(factors);
    auto autos = g.automorphism_group();
    // paper-level cap: |Aut(A)| <= 2^((log2 n)^2), here with ceil(log2 n)
    unsigned l = 0;
    while ((1u << l) < g.order()) ++l;
    CHECK(BigInt(autos.size()) <= (BigInt(1) << (l * l)));
    CHECK(BigInt(g.subgroups().size()) <= (BigInt(1) << (l * l)));

    bool has_identity = false, has_iota = false;
    auto iota = g.inversion();
    std::set<std::vector<Elem>> distinct;
    for (const auto& phi : autos) {
      CHECK(distinct.insert(phi.images).second);
      if (phi.is_identity()) has_identity = true;
      if (phi.images == iota.images) has_iota = true;
      for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b)
          CHECK(phi(g.add(a, b)) == g.add(phi(a), phi(b)));
    }
    CHECK(has_identity);
    CHECK(has_iota);
    // lexicographically sorted
    for (std::size_t i = 1; i < autos.size(); ++i) CHECK(autos[i - 1].images < autos[i].images);
  }
}

TEST_CASE("automorphism guard") {
  CHECK_THROWS_AS(make_group({2, 2, 2}).automorphism_group(100), ResourceLimit);
}
