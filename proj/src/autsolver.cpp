// Graph automorphism search and canonical labeling.
//
// The search tree alternates color refinement with individualization of one
// vertex from the first smallest non-singleton class. Leaves are discrete
// partitions, i.e. labelings; a leaf whose relabeled adjacency string equals
// the first leaf's yields an automorphism, and the lexicographically least
// leaf string is the canonical form. Siblings lying in one orbit of the
// already-found automorphisms that fix the current individualization prefix
// are skipped; such subtrees contribute the same leaf strings, so neither
// the generated group nor the canonical minimum changes.

#include "cayley/autsolver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cayley/errors.hpp"

namespace cayley {

ColoredDigraph colored_from_cayley(const CayleyDigraph& d) {
  ColoredDigraph g;
  g.n = d.n;
  g.out = d.out;
  g.colors.assign(d.n, 0);
  return g;
}

bool is_automorphism(const ColoredDigraph& g, const Perm& p) {
  if (p.size() != g.n || !perm_is_valid(p)) return false;
  for (unsigned v = 0; v < g.n; ++v)
    if (g.color(p[v]) != g.color(v)) return false;
  for (unsigned v = 0; v < g.n; ++v)
    for (unsigned w = 0; w < g.n; ++w)
      if (g.arc(v, w) != g.arc(p[v], p[w])) return false;
  return true;
}

namespace {

std::vector<unsigned> normalize_ids(const std::vector<unsigned>& col) {
  std::vector<unsigned> distinct(col);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<unsigned> out(col.size());
  for (std::size_t v = 0; v < col.size(); ++v)
    out[v] = static_cast<unsigned>(
        std::lower_bound(distinct.begin(), distinct.end(), col[v]) - distinct.begin());
  return out;
}

struct Refiner {
  const ColoredDigraph& g;
  std::vector<Bitset> in;

  explicit Refiner(const ColoredDigraph& graph) : g(graph), in(g.n, Bitset(g.n)) {
    for (unsigned x = 0; x < g.n; ++x)
      for (auto y = g.out[x].find_first(); y != Bitset::npos; y = g.out[x].find_next(y))
        in[y].set(x);
  }

  std::vector<unsigned> refine(std::vector<unsigned> col) const {
    const unsigned n = g.n;
    col = normalize_ids(col);
    for (;;) {
      unsigned classes = col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
      if (classes == n) return col;
      std::vector<Bitset> members(classes, Bitset(n));
      for (unsigned v = 0; v < n; ++v) members[col[v]].set(v);

      // signature: own class, then (out, in) degree towards every class
      std::vector<std::vector<unsigned>> sig(n);
      for (unsigned v = 0; v < n; ++v) {
        sig[v].reserve(1 + 2 * classes);
        sig[v].push_back(col[v]);
        for (unsigned c = 0; c < classes; ++c) {
          sig[v].push_back(static_cast<unsigned>((g.out[v] & members[c]).count()));
          sig[v].push_back(static_cast<unsigned>((in[v] & members[c]).count()));
        }
      }
      std::vector<unsigned> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](unsigned a, unsigned b) { return sig[a] < sig[b]; });
      std::vector<unsigned> next(n);
      unsigned id = 0;
      for (unsigned idx = 0; idx < n; ++idx) {
        if (idx && sig[order[idx]] != sig[order[idx - 1]]) ++id;
        next[order[idx]] = id;
      }
      if (next == col) return col;
      col = std::move(next);
    }
  }
};

class AutSearch {
 public:
  AutSearch(const ColoredDigraph& graph, std::uint64_t node_limit)
      : g_(graph), ref_(graph), node_limit_(node_limit) {}

  AutSearchResult run() {
    const unsigned n = g_.n;
    // fold loops into the working colors
    work_colors_.resize(n);
    std::vector<std::pair<unsigned, unsigned>> pairs(n);
    for (unsigned v = 0; v < n; ++v) pairs[v] = {g_.color(v), g_.arc(v, v) ? 1u : 0u};
    auto distinct = pairs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (unsigned v = 0; v < n; ++v)
      work_colors_[v] = static_cast<unsigned>(
          std::lower_bound(distinct.begin(), distinct.end(), pairs[v]) - distinct.begin());

    if (n == 0) {
      AutSearchResult r;
      r.canonical_form = encode_header();
      return r;
    }
    descend(ref_.refine(work_colors_));

    AutSearchResult r;
    r.generators = std::move(gens_);
    r.canonical_form = encode_header() + best_;
    r.nodes = nodes_;
    return r;
  }

 private:
  std::string encode_header() const {
    std::string h(4, '\0');
    for (int i = 0; i < 4; ++i) h[i] = static_cast<char>(g_.n >> (8 * i) & 0xff);
    return h;
  }

  void descend(const std::vector<unsigned>& col) {
    if (++nodes_ > node_limit_)
      throw ResourceLimit("automorphism search exceeded node limit");
    const unsigned n = g_.n;
    unsigned classes = *std::max_element(col.begin(), col.end()) + 1;
    if (classes == n) {
      handle_leaf(col);
      return;
    }
    // first smallest non-singleton class in partition order
    std::vector<unsigned> size(classes, 0);
    for (unsigned v = 0; v < n; ++v) ++size[col[v]];
    unsigned target = classes;
    for (unsigned c = 0; c < classes; ++c)
      if (size[c] > 1 && (target == classes || size[c] < size[target])) target = c;

    std::vector<unsigned> candidates;
    for (unsigned v = 0; v < n; ++v)
      if (col[v] == target) candidates.push_back(v);

    std::vector<unsigned> explored;
    for (unsigned v : candidates) {
      if (!explored.empty() && pruned_by_orbit(v, explored)) continue;
      std::vector<unsigned> next(col);
      next[v] = classes;  // fresh id, sorts after all existing classes
      prefix_.push_back(v);
      descend(ref_.refine(next));
      prefix_.pop_back();
      explored.push_back(v);
    }
  }

  bool pruned_by_orbit(unsigned v, const std::vector<unsigned>& explored) {
    const unsigned n = g_.n;
    std::vector<unsigned> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](unsigned x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    bool merged_any = false;
    for (const Perm& p : gens_) {
      bool fixes_prefix = true;
      for (unsigned q : prefix_)
        if (p[q] != q) {
          fixes_prefix = false;
          break;
        }
      if (!fixes_prefix) continue;
      merged_any = true;
      for (unsigned x = 0; x < n; ++x) {
        unsigned a = find(x), b = find(p[x]);
        if (a != b) uf[a] = b;
      }
    }
    if (!merged_any) return false;
    unsigned rv = find(v);
    for (unsigned u : explored)
      if (find(u) == rv) return true;
    return false;
  }

  void handle_leaf(const std::vector<unsigned>& col) {
    const unsigned n = g_.n;
    std::vector<unsigned> inv(n);
    for (unsigned v = 0; v < n; ++v) inv[col[v]] = v;

    std::string s;
    s.reserve(4 * n + (static_cast<std::size_t>(n) * n + 7) / 8);
    for (unsigned i = 0; i < n; ++i) {
      unsigned c = work_colors_[inv[i]];
      for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>(c >> (8 * b) & 0xff));
    }
    std::size_t bit_base = s.size() * 8;
    s.resize(s.size() + (static_cast<std::size_t>(n) * n + 7) / 8, '\0');
    for (unsigned i = 0; i < n; ++i)
      for (auto w = g_.out[inv[i]].find_first(); w != Bitset::npos; w = g_.out[inv[i]].find_next(w)) {
        std::size_t bit = bit_base + static_cast<std::size_t>(i) * n + col[w];
        s[bit / 8] = static_cast<char>(s[bit / 8] | (1 << (bit % 8)));
      }

    if (!have_first_) {
      have_first_ = true;
      first_ = s;
      first_labeling_.assign(col.begin(), col.end());
      best_ = std::move(s);
      return;
    }
    if (s == first_) {
      // two equal relabelings differ by an automorphism
      Perm gamma(n);
      for (unsigned v = 0; v < n; ++v) gamma[v] = inv[first_labeling_[v]];
      if (!perm_is_identity(gamma) && known_.insert(gamma).second) gens_.push_back(gamma);
    }
    if (s < best_) best_ = std::move(s);
  }

  const ColoredDigraph& g_;
  Refiner ref_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<unsigned> work_colors_;
  std::vector<unsigned> prefix_;
  std::vector<Perm> gens_;
  std::set<Perm> known_;
  bool have_first_ = false;
  std::string first_;
  Perm first_labeling_;
  std::string best_;
};

}  // namespace

std::vector<unsigned> refine(const ColoredDigraph& g, const std::vector<unsigned>& coloring) {
  if (coloring.size() != g.n) throw InvalidInput("refine: coloring size mismatch");
  return Refiner(g).refine(coloring);
}

AutSearchResult automorphism_search(const ColoredDigraph& g, std::uint64_t node_limit) {
  if (g.n > guards::kSolverVertexLimit)
    throw ResourceLimit("automorphism search limited to " +
                        std::to_string(guards::kSolverVertexLimit) + " vertices");
  return AutSearch(g, node_limit).run();
}

std::vector<Perm> automorphism_generators(const ColoredDigraph& g) {
  return automorphism_search(g).generators;
}

std::string canonical_form(const ColoredDigraph& g) { return automorphism_search(g).canonical_form; }

std::string hex_encode(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

std::vector<Perm> brute_force_automorphisms(const ColoredDigraph& g) {
  if (g.n > guards::kBruteForceLimit)
    throw ResourceLimit("brute-force oracle limited to " +
                        std::to_string(guards::kBruteForceLimit) + " vertices");
  std::vector<Perm> out;
  Perm p = perm_identity(g.n);
  do {
    if (is_automorphism(g, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace cayley
