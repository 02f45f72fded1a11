// Detectors for the bad connection-set families and DRR / smallest-group
// status.

#include "cayley/classify.hpp"

#include <algorithm>

#include "cayley/errors.hpp"

namespace cayley {

std::string sprime_tag_name(SPrimeTag t) {
  switch (t) {
    case SPrimeTag::empty: return "empty";
    case SPrimeTag::identity: return "identity";
    case SPrimeTag::complement_of_identity: return "complement_of_identity";
    case SPrimeTag::all: return "all";
  }
  return "?";
}

namespace {

bool subgroup_is_cyclic(const AbelianGroup& g, const Subgroup& h) {
  for (auto a = h.members.find_first(); a != Bitset::npos; a = h.members.find_next(a))
    if (g.element_order(static_cast<Elem>(a)) == h.order) return true;
  return h.order == 1;
}

bool subgroup_has_exponent_le2(const AbelianGroup& g, const Subgroup& h) {
  for (auto a = h.members.find_first(); a != Bitset::npos; a = h.members.find_next(a))
    if (g.element_order(static_cast<Elem>(a)) > 2) return false;
  return true;
}

}  // namespace

GroupContext::GroupContext(AbelianGroup g, const ContextOptions& opts) : group(std::move(g)) {
  const unsigned n = group.order();
  m = group.involution_count();
  prime_power = group.order_is_prime_power();

  inversion_perm.resize(n);
  for (Elem a = 0; a < n; ++a) inversion_perm[a] = group.neg(a);
  {
    // translations by the coordinate basis generate the regular representation
    unsigned stride = 1;
    for (unsigned d : group.factors()) {
      Perm t(n);
      for (Elem x = 0; x < n; ++x) t[x] = group.add(x, stride);
      translation_gens.push_back(std::move(t));
      stride *= d;
    }
  }

  if (opts.subgroup_data) {
    subgroups = group.subgroups(opts.subgroup_order_limit);
    subgroup_cosets.resize(subgroups.size());
    for (std::size_t i = 0; i < subgroups.size(); ++i)
      subgroup_cosets[i] = group.coset_partition(subgroups[i]);
    for (std::size_t hi = 0; hi < subgroups.size(); ++hi) {
      if (subgroups[hi].order <= 1) continue;
      for (std::size_t ki = 0; ki < subgroups.size(); ++ki) {
        if (subgroups[ki].order >= n) continue;
        if (!subgroups[hi].members.is_subset_of(subgroups[ki].members)) continue;
        wreath_pairs.emplace_back(hi, ki);
      }
    }
    for (std::size_t ci = 0; ci < subgroups.size(); ++ci) {
      const Subgroup& c = subgroups[ci];
      if (c.order < 4 || !subgroup_is_cyclic(group, c)) continue;
      for (std::size_t zi = 0; zi < subgroups.size(); ++zi) {
        const Subgroup& z = subgroups[zi];
        if (static_cast<unsigned long long>(c.order) * z.order != n) continue;
        if (!subgroup_has_exponent_le2(group, z)) continue;
        if ((c.members & z.members).count() != 1) continue;
        ProductDecomposition d;
        d.c_index = ci;
        d.z_index = zi;
        d.comp_c.assign(n, 0);
        d.comp_z.assign(n, 0);
        for (auto cc = c.members.find_first(); cc != Bitset::npos; cc = c.members.find_next(cc))
          for (auto zz = z.members.find_first(); zz != Bitset::npos; zz = z.members.find_next(zz)) {
            Elem a = group.add(static_cast<Elem>(cc), static_cast<Elem>(zz));
            d.comp_c[a] = static_cast<Elem>(cc);
            d.comp_z[a] = static_cast<Elem>(zz);
          }
        decompositions.push_back(std::move(d));
      }
    }
  }

  if (opts.automorphism_data) {
    automorphisms = group.automorphism_group(opts.automorphism_limit);
    for (std::size_t i = 0; i < automorphisms.size(); ++i) {
      if (automorphisms[i].is_identity()) identity_index = i;
      if (automorphisms[i].images == inversion_perm) inversion_index = i;
    }
    // existence scans probe automorphisms with small support first; they fix
    // far more subsets, so the early exit fires sooner
    std::vector<unsigned> support(automorphisms.size(), 0);
    for (std::size_t i = 0; i < automorphisms.size(); ++i)
      for (Elem a = 0; a < n; ++a)
        if (automorphisms[i].images[a] != a) ++support[i];
    normalizer_scan_order.resize(automorphisms.size());
    for (std::size_t i = 0; i < automorphisms.size(); ++i) normalizer_scan_order[i] = i;
    std::stable_sort(normalizer_scan_order.begin(), normalizer_scan_order.end(),
                     [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
  }
}

BigInt aut_order(const GroupContext& ctx, const Bitset& s) {
  auto gens = automorphism_generators(colored_from_cayley(build_cayley(ctx.group, s)));
  return StabilizerChain(ctx.group.order(), gens).order();
}

bool is_drr(const GroupContext& ctx, const Bitset& s) {
  return aut_order(ctx, s) == ctx.group.order();
}

bool is_small(const GroupContext& ctx, const Bitset& s) {
  if (!is_inverse_closed(ctx.group, s))
    throw InvalidInput("is_small requires an inverse-closed connection set");
  const unsigned n = ctx.group.order();
  auto gens = automorphism_generators(colored_from_cayley(build_cayley(ctx.group, s)));
  StabilizerChain chain(n, gens);
  BigInt target = ctx.group.exponent() > 2 ? BigInt(2) * n : BigInt(n);
  if (chain.order() != target) return false;
  for (const Perm& t : ctx.translation_gens)
    if (!chain.contains(t)) return false;
  return chain.contains(ctx.inversion_perm);
}

namespace {

bool pair_admits(const GroupContext& ctx, const Bitset& s, std::size_t hi, std::size_t ki) {
  // S \ K must meet every H-coset either fully or not at all.
  Bitset rest = s - ctx.subgroups[ki].members;
  if (rest.none()) return true;
  const unsigned h = ctx.subgroups[hi].order;
  for (const Bitset& block : ctx.subgroup_cosets[hi]) {
    std::size_t c = (rest & block).count();
    if (c != 0 && c != h) return false;
  }
  return true;
}

}  // namespace

std::optional<WreathWitness> find_wreath_witness(const GroupContext& ctx, const Bitset& s) {
  for (const auto& [hi, ki] : ctx.wreath_pairs)
    if (pair_admits(ctx, s, hi, ki)) return WreathWitness{hi, ki};
  return std::nullopt;
}

bool has_wreath_witness(const GroupContext& ctx, const Bitset& s) {
  return find_wreath_witness(ctx, s).has_value();
}

std::vector<std::size_t> find_normalizers(const GroupContext& ctx, const Bitset& s,
                                          bool exclude_inversion) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ctx.automorphisms.size(); ++i) {
    if (i == ctx.identity_index) continue;
    if (exclude_inversion && i == ctx.inversion_index) continue;
    if (ctx.automorphisms[i].fixes(s)) out.push_back(i);
  }
  return out;
}

bool has_normalizer(const GroupContext& ctx, const Bitset& s, bool exclude_inversion) {
  for (std::size_t i : ctx.normalizer_scan_order) {
    if (i == ctx.identity_index) continue;
    if (exclude_inversion && i == ctx.inversion_index) continue;
    if (ctx.automorphisms[i].fixes(s)) return true;
  }
  return false;
}

std::optional<ProductWitness> find_product_witness(const GroupContext& ctx, const Bitset& s) {
  if (!is_inverse_closed(ctx.group, s))
    throw InvalidInput("product witness requires an inverse-closed connection set");
  const unsigned n = ctx.group.order();
  for (std::size_t di = 0; di < ctx.decompositions.size(); ++di) {
    const ProductDecomposition& d = ctx.decompositions[di];
    Bitset sc(n), sz(n);
    for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a)) {
      sc.set(d.comp_c[a]);
      sz.set(d.comp_z[a]);
    }
    if (s.count() != sc.count() * sz.count()) continue;  // not a rectangle
    const Bitset& c_members = ctx.subgroups[d.c_index].members;
    SPrimeTag tag;
    if (sc.none())
      tag = SPrimeTag::empty;
    else if (sc.count() == 1 && sc.test(0))
      tag = SPrimeTag::identity;
    else if (sc == c_members)
      tag = SPrimeTag::all;
    else if (!sc.test(0) && sc.count() + 1 == c_members.count() && sc.is_subset_of(c_members))
      tag = SPrimeTag::complement_of_identity;
    else
      continue;
    return ProductWitness{di, tag, std::move(sz)};
  }
  return std::nullopt;
}

bool has_product_witness(const GroupContext& ctx, const Bitset& s) {
  return find_product_witness(ctx, s).has_value();
}

Classification classify(const GroupContext& ctx, const Bitset& s, Mode mode) {
  if (mode == Mode::graph && !is_inverse_closed(ctx.group, s))
    throw InvalidInput("graph mode requires an inverse-closed connection set");
  const unsigned n = ctx.group.order();
  auto search = automorphism_search(colored_from_cayley(build_cayley(ctx.group, s)));
  StabilizerChain chain(n, search.generators);

  Classification c;
  c.aut_order = chain.order();
  c.is_drr = (c.aut_order == n);
  c.canonical_hex = hex_encode(search.canonical_form);
  if (mode == Mode::graph) {
    BigInt target = ctx.group.exponent() > 2 ? BigInt(2) * n : BigInt(n);
    bool small = c.aut_order == target;
    if (small)
      for (const Perm& t : ctx.translation_gens) small = small && chain.contains(t);
    if (small) small = chain.contains(ctx.inversion_perm);
    c.is_small = small;
  }
  c.wreath = find_wreath_witness(ctx, s);
  c.normalizers = find_normalizers(ctx, s, mode == Mode::graph);
  if (mode == Mode::graph) c.product = find_product_witness(ctx, s);
  return c;
}

SubsetAnalysis analyze_subset(const GroupContext& ctx, const Bitset& s, Mode mode,
                              bool want_canonical) {
  const unsigned n = ctx.group.order();
  auto search = automorphism_search(colored_from_cayley(build_cayley(ctx.group, s)));
  StabilizerChain chain(n, search.generators);

  SubsetAnalysis a;
  a.aut_order = chain.order();
  if (mode == Mode::digraph) {
    a.good = (a.aut_order == n);
  } else {
    BigInt target = ctx.group.exponent() > 2 ? BigInt(2) * n : BigInt(n);
    bool small = a.aut_order == target;
    if (small)
      for (const Perm& t : ctx.translation_gens) small = small && chain.contains(t);
    if (small) small = chain.contains(ctx.inversion_perm);
    a.good = small;
  }
  a.gw = has_wreath_witness(ctx, s);
  a.nor = has_normalizer(ctx, s, mode == Mode::graph);
  a.ex = mode == Mode::graph && has_product_witness(ctx, s);
  if (want_canonical) a.canonical = std::move(search.canonical_form);
  return a;
}

}  // namespace cayley
