// Finite abelian group arithmetic, subgroup lattice, automorphism enumeration.

#include "cayley/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

bool GroupAutomorphism::is_identity() const {
  for (Elem i = 0; i < images.size(); ++i)
    if (images[i] != i) return false;
  return true;
}

Bitset GroupAutomorphism::apply(const Bitset& s) const {
  Bitset out(s.size());
  for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i))
    out.set(images[i]);
  return out;
}

bool GroupAutomorphism::fixes(const Bitset& s) const {
  for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i))
    if (!s.test(images[i])) return false;
  return true;
}

namespace {

std::map<unsigned, std::vector<unsigned>> prime_power_parts(const std::vector<unsigned>& factors) {
  std::map<unsigned, std::vector<unsigned>> parts;  // prime -> prime powers
  for (unsigned f : factors) {
    unsigned rest = f;
    for (unsigned p = 2; p * p <= rest; ++p) {
      if (rest % p) continue;
      unsigned q = 1;
      while (rest % p == 0) {
        rest /= p;
        q *= p;
      }
      parts[p].push_back(q);
    }
    if (rest > 1) parts[rest].push_back(rest);
  }
  for (auto& [p, qs] : parts) std::sort(qs.begin(), qs.end(), std::greater<>());
  return parts;
}

std::vector<unsigned> invariant_factor_chain(const std::vector<unsigned>& factors) {
  auto parts = prime_power_parts(factors);
  std::size_t len = 0;
  for (const auto& [p, qs] : parts) len = std::max(len, qs.size());
  std::vector<unsigned> chain(len, 1);
  // chain is ascending; the largest invariant factor collects the largest
  // prime power of every prime.
  for (const auto& [p, qs] : parts)
    for (std::size_t i = 0; i < qs.size(); ++i) chain[len - 1 - i] *= qs[i];
  return chain;
}

unsigned gcd_u(unsigned a, unsigned b) { return std::gcd(a, b); }

}  // namespace

AbelianGroup::AbelianGroup(std::vector<unsigned> factors) {
  for (unsigned f : factors)
    if (f <= 1) throw InvalidInput("group factor must be >= 2, got " + std::to_string(f));
  factors_ = invariant_factor_chain(factors);
  n_ = 1;
  for (unsigned d : factors_) {
    if (n_ > 1'000'000 / d) throw InvalidInput("group order too large");
    n_ *= d;
  }
  strides_.resize(factors_.size());
  unsigned s = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    strides_[i] = s;
    s *= factors_[i];
  }

  neg_table_.resize(n_);
  order_table_.resize(n_);
  for (Elem a = 0; a < n_; ++a) {
    auto c = coords(a);
    auto nc = c;
    unsigned ord = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      nc[i] = c[i] ? factors_[i] - c[i] : 0;
      ord = std::lcm(ord, factors_[i] / gcd_u(c[i], factors_[i]));
    }
    neg_table_[a] = from_coords(nc);
    order_table_[a] = ord;
  }

  if (n_ <= guards::kAddTableLimit) {
    add_table_.resize(std::size_t{n_} * n_);
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        add_table_[std::size_t{a} * n_ + b] = static_cast<std::uint16_t>(add_slow(a, b));
  }
}

Elem AbelianGroup::add_slow(Elem a, Elem b) const {
  Elem r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    unsigned ai = a / strides_[i] % factors_[i];
    unsigned bi = b / strides_[i] % factors_[i];
    unsigned ci = ai + bi;
    if (ci >= factors_[i]) ci -= factors_[i];
    r += ci * strides_[i];
  }
  return r;
}

std::vector<unsigned> AbelianGroup::coords(Elem a) const {
  std::vector<unsigned> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = a / strides_[i] % factors_[i];
  return c;
}

Elem AbelianGroup::from_coords(const std::vector<unsigned>& c) const {
  Elem a = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) a += (c[i] % factors_[i]) * strides_[i];
  return a;
}

unsigned AbelianGroup::involution_count() const {
  unsigned m = 1;
  for (unsigned d : factors_) m *= gcd_u(2, d);
  return m;
}

bool AbelianGroup::order_is_prime_power() const {
  if (n_ < 2) return false;
  unsigned rest = n_;
  for (unsigned p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      while (rest % p == 0) rest /= p;
      return rest == 1;
    }
  return true;  // n_ itself prime
}

GroupAutomorphism AbelianGroup::inversion() const {
  GroupAutomorphism phi;
  phi.images.assign(neg_table_.begin(), neg_table_.end());
  return phi;
}

bool AbelianGroup::is_subgroup(const Bitset& members) const {
  if (members.size() != n_ || !members.test(0)) return false;
  for (auto a = members.find_first(); a != Bitset::npos; a = members.find_next(a)) {
    if (!members.test(neg(static_cast<Elem>(a)))) return false;
    for (auto b = members.find_first(); b != Bitset::npos; b = members.find_next(b))
      if (!members.test(add(static_cast<Elem>(a), static_cast<Elem>(b)))) return false;
  }
  return true;
}

Subgroup AbelianGroup::subgroup_from_members(const Bitset& members) const {
  if (!is_subgroup(members)) throw InvalidInput("element set is not a subgroup");
  Subgroup h;
  h.members = members;
  h.order = static_cast<unsigned>(members.count());
  // Greedy generating set.
  Bitset span(n_);
  span.set(0);
  for (auto a = members.find_first(); a != Bitset::npos; a = members.find_next(a)) {
    if (span.test(a)) continue;
    h.generators.push_back(static_cast<Elem>(a));
    Bitset next = span;
    for (auto x = span.find_first(); x != Bitset::npos; x = span.find_next(x)) {
      Elem y = static_cast<Elem>(x);
      for (unsigned k = 1; k < element_order(static_cast<Elem>(a)); ++k) {
        y = add(y, static_cast<Elem>(a));
        next.set(y);
      }
    }
    span = next;
  }
  return h;
}

std::vector<Subgroup> AbelianGroup::subgroups(unsigned order_limit) const {
  if (n_ > order_limit)
    throw ResourceLimit("subgroup enumeration limited to order <= " + std::to_string(order_limit));

  // Cyclic subgroups, deduplicated.
  std::set<Bitset> cyclics;
  for (Elem a = 0; a < n_; ++a) {
    Bitset c(n_);
    Elem x = 0;
    do {
      c.set(x);
      x = add(x, a);
    } while (x != 0);
    cyclics.insert(c);
  }

  // Every subgroup of a finite abelian group is a join (sumset) of cyclic ones.
  std::set<Bitset> known(cyclics);
  std::vector<Bitset> queue(cyclics.begin(), cyclics.end());
  while (!queue.empty()) {
    Bitset h = queue.back();
    queue.pop_back();
    for (const Bitset& c : cyclics) {
      if (c.is_subset_of(h)) continue;
      Bitset join(n_);
      for (auto x = h.find_first(); x != Bitset::npos; x = h.find_next(x))
        for (auto y = c.find_first(); y != Bitset::npos; y = c.find_next(y))
          join.set(add(static_cast<Elem>(x), static_cast<Elem>(y)));
      if (known.insert(join).second) queue.push_back(join);
    }
  }

  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (const Bitset& members : known) out.push_back(subgroup_from_members(members));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members < b.members;
  });
  return out;
}

std::vector<GroupAutomorphism> AbelianGroup::automorphism_group(std::uint64_t limit) const {
  // Backtracking over images of the coordinate basis e_i. Any choice of
  // images y_i with ord(y_i) | d_i defines a homomorphism; it is an
  // automorphism iff injective, and then ord(y_i) = d_i exactly.
  const std::size_t k = factors_.size();
  std::vector<std::vector<Elem>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (Elem a = 0; a < n_; ++a)
      if (order_table_[a] == factors_[i]) candidates[i].push_back(a);

  std::vector<GroupAutomorphism> result;
  std::vector<Elem> img(n_);  // image table, defined on indices < strides_[level]
  img[0] = 0;
  Bitset used(n_);
  used.set(0);

  // Assigns images for <e_0..e_level> extended by y = image of e_level.
  auto recurse = [&](auto&& self, std::size_t level) -> void {
    if (level == k) {
      if (result.size() >= limit)
        throw ResourceLimit("automorphism group larger than limit " + std::to_string(limit));
      GroupAutomorphism phi;
      phi.images.assign(img.begin(), img.end());
      result.push_back(std::move(phi));
      return;
    }
    const unsigned span = strides_[level];  // |<e_0..e_{level-1}>|
    const unsigned d = factors_[level];
    for (Elem y : candidates[level]) {
      // img[x + c*span] = img[x] + c*y, checked injective as we go.
      std::vector<Elem> touched;
      bool ok = true;
      Elem cy = 0;
      for (unsigned c = 1; c < d && ok; ++c) {
        cy = add(cy, y);
        for (unsigned x = 0; x < span; ++x) {
          Elem v = add(img[x], cy);
          if (used.test(v)) {
            ok = false;
            break;
          }
          used.set(v);
          touched.push_back(v);
          img[c * span + x] = v;
        }
      }
      if (ok) self(self, level + 1);
      for (Elem v : touched) used.reset(v);
    }
  };
  if (n_ == 1) {
    GroupAutomorphism id;
    id.images = {0};
    return {id};
  }
  recurse(recurse, 0);

  std::sort(result.begin(), result.end(),
            [](const GroupAutomorphism& a, const GroupAutomorphism& b) { return a.images < b.images; });
  return result;
}

std::vector<Bitset> AbelianGroup::coset_partition(const Subgroup& h) const {
  if (!is_subgroup(h.members)) throw InvalidInput("coset_partition: not a subgroup");
  std::vector<Bitset> blocks;
  Bitset seen(n_);
  for (Elem a = 0; a < n_; ++a) {
    if (seen.test(a)) continue;
    Bitset block(n_);
    for (auto x = h.members.find_first(); x != Bitset::npos; x = h.members.find_next(x))
      block.set(add(a, static_cast<Elem>(x)));
    seen |= block;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::string AbelianGroup::spec_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ',';
    os << factors_[i];
  }
  return os.str();
}

AbelianGroup make_group(const std::vector<unsigned>& factors) { return AbelianGroup(factors); }

AbelianGroup parse_group(const std::string& spec) {
  std::vector<unsigned> factors;
  std::string token;
  std::istringstream is(spec);
  while (std::getline(is, token, ',')) {
    if (token.empty()) throw InvalidInput("empty factor in group spec '" + spec + "'");
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(token, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("bad group factor '" + token + "'");
    }
    if (pos != token.size() || v < 2)
      throw InvalidInput("bad group factor '" + token + "'");
    factors.push_back(static_cast<unsigned>(v));
  }
  if (factors.empty()) throw InvalidInput("empty group spec");
  return AbelianGroup(factors);
}

}  // namespace cayley
