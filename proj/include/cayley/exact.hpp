#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cayley {

// Counts and permutation-group orders. |Aut| reaches n! already for the
// complete graph, so 64-bit is not enough.
using BigInt = boost::multiprecision::cpp_int;

// Exact rationals for bound exponents (3n/4, 11n/24, ...).
using BigRat = boost::multiprecision::cpp_rational;

// count <= 2^exponent, decided in exact integer arithmetic:
// with exponent = p/q (q > 0), this is count^q <= 2^p.
bool count_le_pow2(const BigInt& count, const BigRat& exponent);

BigInt pow2(unsigned long e);

}  // namespace cayley
