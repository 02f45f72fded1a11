#include "cayley/bounds.hpp"

#include "cayley/errors.hpp"

namespace cayley {

bool is_power_of_two(unsigned n) { return n > 0 && (n & (n - 1)) == 0; }

unsigned floor_log2(unsigned n) {
  unsigned l = 0;
  while (n >>= 1) ++l;
  return l;
}

unsigned ceil_log2(unsigned n) { return is_power_of_two(n) ? floor_log2(n) : floor_log2(n) + 1; }

namespace {

BoundExponent make_exponent(unsigned n, const BigRat& base, unsigned log_coeff, bool log_squared) {
  BoundExponent e;
  e.log2_exact = is_power_of_two(n);
  auto value = [&](unsigned log2n) {
    BigRat l(log2n);
    return base + BigRat(log_coeff) * (log_squared ? l * l : l);
  };
  e.exponent = value(ceil_log2(n));
  e.exponent_floor = value(floor_log2(n));
  return e;
}

}  // namespace

BoundSet bound_set(unsigned n, unsigned m) {
  if (n < 2) throw InvalidInput("bounds require n >= 2");
  if (m < 1 || m > n) throw InvalidInput("bounds require 1 <= m <= n");
  const BigRat n3_4 = BigRat(3 * static_cast<long>(n), 4);
  const BigRat graph_base = BigRat(m, 2) + BigRat(11 * static_cast<long>(n), 24);

  BoundSet b;
  b.thm_epsilon1 = make_exponent(n, n3_4 + 1, 2, true);
  b.thm_epsilon2 = make_exponent(n, graph_base + 2, 2, true);
  b.lemma_gw_digraph = make_exponent(n, n3_4, 2, true);
  b.lemma_nor_digraph = make_exponent(n, n3_4, 1, true);
  b.lemma_ex = make_exponent(n, BigRat(n, 4) - 1, 2, false);
  b.lemma_gw_graph = make_exponent(n, graph_base, 2, true);
  b.lemma_nor_graph = make_exponent(n, graph_base, 1, true);
  return b;
}

}  // namespace cayley
