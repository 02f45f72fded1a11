#include "cayley/exact.hpp"

#include "cayley/errors.hpp"

namespace cayley {

BigInt pow2(unsigned long e) { return BigInt(1) << e; }

bool count_le_pow2(const BigInt& count, const BigRat& exponent) {
  if (count < 0) throw InvalidInput("count_le_pow2: negative count");
  if (count == 0) return true;
  BigInt p = boost::multiprecision::numerator(exponent);
  BigInt q = boost::multiprecision::denominator(exponent);  // > 0, normalized
  if (p < 0) return false;  // count >= 1 > 2^negative
  // count <= 2^(p/q)  <=>  count^q <= 2^p
  BigInt lhs = boost::multiprecision::pow(count, static_cast<unsigned>(q));
  return lhs <= (BigInt(1) << static_cast<unsigned>(p));
}

}  // namespace cayley
