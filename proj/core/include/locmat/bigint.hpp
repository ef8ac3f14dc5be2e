#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace locmat {

// Arbitrary-precision signed integer and rational. Exact arithmetic
// everywhere; no floating point anywhere in the library.
using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Nonnegative modular remainder, also for negative a.
inline bigint mod_floor(const bigint& a, const bigint& m) {
  bigint r = a % m;
  if (r < 0) r += m;
  return r;
}

// x with a*x == 1 (mod m), via extended Euclid. Requires gcd(a, m) == 1.
bigint mod_inverse(const bigint& a, const bigint& m);

// a^e mod m for e >= 0.
bigint mod_pow(const bigint& a, const bigint& e, const bigint& m);

// Deterministic trial division below 2^32, Miller-Rabin above.
bool is_prime(const bigint& n);

}  // namespace locmat
