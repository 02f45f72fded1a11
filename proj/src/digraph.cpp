#include "cayley/digraph.hpp"

#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

Mode parse_mode(const std::string& s) {
  if (s == "digraph") return Mode::digraph;
  if (s == "graph") return Mode::graph;
  throw InvalidInput("mode must be 'digraph' or 'graph', got '" + s + "'");
}

std::string mode_name(Mode m) { return m == Mode::digraph ? "digraph" : "graph"; }

std::string CayleyDigraph::adjacency_list() const {
  std::ostringstream os;
  for (unsigned u = 0; u < n; ++u) {
    os << u << ':';
    for (auto v = out[u].find_first(); v != Bitset::npos; v = out[u].find_next(v)) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

CayleyDigraph build_cayley(const AbelianGroup& g, const Bitset& connection_set) {
  if (connection_set.size() != g.order())
    throw InvalidInput("connection set does not belong to this group");
  CayleyDigraph d;
  d.n = g.order();
  d.out.assign(d.n, Bitset(d.n));
  for (unsigned x = 0; x < d.n; ++x)
    for (auto s = connection_set.find_first(); s != Bitset::npos; s = connection_set.find_next(s))
      d.out[x].set(g.sub(x, static_cast<Elem>(s)));
  return d;
}

bool is_inverse_closed(const AbelianGroup& g, const Bitset& s) {
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a))
    if (!s.test(g.neg(static_cast<Elem>(a)))) return false;
  return true;
}

BigInt count_inverse_closed(const AbelianGroup& g) {
  unsigned m = g.involution_count();
  return pow2(m) * pow2((g.order() - m) / 2);
}

SubsetSpace::SubsetSpace(const AbelianGroup& g, Mode mode, unsigned vertex_limit)
    : g_(&g), mode_(mode) {
  if (g.order() > vertex_limit)
    throw ResourceLimit("subset enumeration limited to groups of order <= " +
                        std::to_string(vertex_limit) + " in " + mode_name(mode) + " mode");
  if (mode_ == Mode::graph) {
    for (Elem a = 0; a < g.order(); ++a) {
      Elem b = g.neg(a);
      if (b == a)
        involutions_.push_back(a);
      else if (a < b)
        pair_reps_.push_back(a);
    }
  }
}

std::uint64_t SubsetSpace::count() const {
  if (free_bits() >= 64) throw ResourceLimit("subset space too large to enumerate");
  return std::uint64_t{1} << free_bits();
}

Bitset SubsetSpace::at(std::uint64_t index) const {
  const unsigned n = g_->order();
  if (mode_ == Mode::digraph) return bitset_from_mask(n, index);
  Bitset s(n);
  unsigned bit = 0;
  for (Elem a : involutions_) {
    if (index >> bit & 1) s.set(a);
    ++bit;
  }
  for (Elem a : pair_reps_) {
    if (index >> bit & 1) {
      s.set(a);
      s.set(g_->neg(a));
    }
    ++bit;
  }
  return s;
}

Bitset parse_connection_set(const AbelianGroup& g, const std::string& spec) {
  const unsigned n = g.order();
  if (spec.rfind("0x", 0) == 0 || spec.rfind("0X", 0) == 0) {
    std::uint64_t mask = 0;
    std::size_t pos = 0;
    try {
      mask = std::stoull(spec.substr(2), &pos, 16);
    } catch (const std::exception&) {
      throw InvalidInput("bad connection set mask '" + spec + "'");
    }
    if (pos != spec.size() - 2 || (n < 64 && mask >> n))
      throw InvalidInput("bad connection set mask '" + spec + "'");
    return bitset_from_mask(n, mask);
  }
  Bitset s(n);
  if (spec.empty()) return s;  // empty set
  std::istringstream is(spec);
  std::string token;
  while (std::getline(is, token, ',')) {
    std::size_t pos = 0;
    long v = -1;
    try {
      v = std::stol(token, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("bad connection set element '" + token + "'");
    }
    if (pos != token.size() || v < 0 || static_cast<unsigned long>(v) >= n)
      throw InvalidInput("bad connection set element '" + token + "'");
    s.set(static_cast<unsigned>(v));
  }
  return s;
}

std::string connection_set_string(const Bitset& s) {
  std::ostringstream os;
  bool first = true;
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a)) {
    if (!first) os << ',';
    os << a;
    first = false;
  }
  return os.str();
}

}  // namespace cayley
