// Isomorphism-class counting: Burnside orbit counts and canonical-form
// censuses.

#include "cayley/unlabeled.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

// Materializes the subgroup of Sym(A) generated by `gens` (tiny groups:
// powers of one automorphism, possibly joined with iota).
std::vector<Perm> closure(const std::vector<Perm>& gens) {
  std::set<Perm> elems;
  if (gens.empty()) return {};
  elems.insert(perm_identity(static_cast<unsigned>(gens[0].size())));
  std::vector<Perm> queue(elems.begin(), elems.end());
  while (!queue.empty()) {
    Perm p = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) {
      Perm q = perm_compose(p, g);
      if (elems.insert(q).second) queue.push_back(q);
    }
  }
  return {elems.begin(), elems.end()};
}

unsigned count_point_orbits(unsigned n, const std::vector<Perm>& elems) {
  std::vector<unsigned> uf(n);
  for (unsigned i = 0; i < n; ++i) uf[i] = i;
  auto find = [&](unsigned x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const Perm& p : elems)
    for (unsigned x = 0; x < n; ++x) {
      unsigned a = find(x), b = find(p[x]);
      if (a != b) uf[a] = b;
    }
  unsigned orbits = 0;
  for (unsigned x = 0; x < n; ++x)
    if (find(x) == x) ++orbits;
  return orbits;
}

}  // namespace

BigInt orbit_count(const GroupContext& ctx, bool inverse_closed_only) {
  const unsigned n = ctx.group.order();
  if (ctx.automorphisms.empty()) throw InvalidInput("orbit_count needs Aut(A)");
  BigInt total = 0;
  for (const GroupAutomorphism& phi : ctx.automorphisms) {
    std::vector<Perm> gens{Perm(phi.images.begin(), phi.images.end())};
    if (inverse_closed_only) gens.push_back(ctx.inversion_perm);
    total += pow2(count_point_orbits(n, closure(gens)));
  }
  BigInt aut = static_cast<unsigned>(ctx.automorphisms.size());
  if (total % aut != 0) throw CheckFailure("orbit count not integral");
  return total / aut;
}

UnlabeledReport unlabeled_census(const GroupContext& ctx, Mode mode, const CensusOptions& opts) {
  const unsigned n = ctx.group.order();
  unsigned limit = opts.limit ? opts.limit
                              : (mode == Mode::digraph ? guards::kDigraphCensusLimit
                                                       : guards::kGraphCensusLimit);
  if (opts.force && n > limit) limit = n;
  if (limit > guards::kCensusHardLimit) limit = guards::kCensusHardLimit;
  SubsetSpace space(ctx.group, mode, limit);
  const std::uint64_t total = space.count();

  unsigned jobs = opts.jobs ? opts.jobs : std::thread::hardware_concurrency();
  if (!jobs) jobs = 1;
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total ? total : 1));

  struct Partial {
    std::set<std::string> all, good, bad;
    std::uint64_t good_labeled = 0;
  };
  std::vector<Partial> partials(jobs);

  auto worker = [&](unsigned w) {
    Partial& part = partials[w];
    const std::uint64_t lo = total * w / jobs;
    const std::uint64_t hi = total * (w + 1) / jobs;
    for (std::uint64_t index = lo; index < hi; ++index) {
      Bitset s = space.at(index);
      auto search = automorphism_search(colored_from_cayley(build_cayley(ctx.group, s)));
      StabilizerChain chain(n, search.generators);
      bool good;
      if (mode == Mode::digraph) {
        good = chain.order() == n;
      } else {
        BigInt target = ctx.group.exponent() > 2 ? BigInt(2) * n : BigInt(n);
        good = chain.order() == target;
        if (good)
          for (const Perm& t : ctx.translation_gens) good = good && chain.contains(t);
        if (good) good = good && chain.contains(ctx.inversion_perm);
      }
      part.all.insert(search.canonical_form);
      (good ? part.good : part.bad).insert(search.canonical_form);
      if (good) ++part.good_labeled;
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  std::set<std::string> all, good, bad;
  std::uint64_t good_labeled = 0;
  for (Partial& part : partials) {
    all.merge(part.all);
    good.merge(part.good);
    bad.merge(part.bad);
    good_labeled += part.good_labeled;
  }
  for (const std::string& f : good)
    if (bad.count(f))
      throw CheckFailure("isomorphic connection sets classified differently on " +
                         ctx.group.spec_string());

  UnlabeledReport rep;
  rep.group_spec = ctx.group.spec_string();
  rep.mode = mode;
  rep.orbit_count = orbit_count(ctx, mode == Mode::graph);
  rep.iso_classes = all.size();
  rep.good_iso_classes = good.size();
  rep.good_labeled = good_labeled;
  BigInt aut = static_cast<unsigned>(ctx.automorphisms.size());
  rep.lower_bound = BigRat(BigInt(good_labeled), aut);
  rep.ratio = rep.iso_classes
                  ? static_cast<double>(rep.good_iso_classes) / static_cast<double>(rep.iso_classes)
                  : 0.0;

  if (BigInt(rep.iso_classes) > rep.orbit_count)
    throw CheckFailure("more isomorphism classes than Aut(A)-orbits on " +
                       ctx.group.spec_string());
  if (BigInt(rep.good_iso_classes) * aut < BigInt(good_labeled))
    throw CheckFailure("unlabeled lower bound violated on " + ctx.group.spec_string());
  return rep;
}

bool drr_conjugacy_check(const GroupContext& ctx, const Bitset& s1, const Bitset& s2) {
  const unsigned n = ctx.group.order();
  auto analyze = [&](const Bitset& s) {
    auto search = automorphism_search(colored_from_cayley(build_cayley(ctx.group, s)));
    if (StabilizerChain(n, search.generators).order() != n)
      throw InvalidInput("drr_conjugacy_check requires DRR connection sets");
    return search.canonical_form;
  };
  bool isomorphic = analyze(s1) == analyze(s2);
  bool conjugate = false;
  for (const GroupAutomorphism& phi : ctx.automorphisms)
    if (phi.apply(s1) == s2) {
      conjugate = true;
      break;
    }
  if (isomorphic != conjugate)
    throw CheckFailure("DRR isomorphism/conjugacy mismatch on " + ctx.group.spec_string());
  return isomorphic;
}

}  // namespace cayley
