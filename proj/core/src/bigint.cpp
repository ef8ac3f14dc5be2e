#include "locmat/bigint.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include "locmat/errors.hpp"

namespace locmat {

bigint mod_inverse(const bigint& a, const bigint& m) {
  bigint r0 = m, r1 = mod_floor(a, m);
  bigint t0 = 0, t1 = 1;
  while (r1 != 0) {
    bigint q = r0 / r1;
    bigint r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    bigint t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw invalid_argument("mod_inverse: arguments are not coprime");
  return mod_floor(t0, m);
}

bigint mod_pow(const bigint& a, const bigint& e, const bigint& m) {
  if (e < 0) throw invalid_argument("mod_pow: negative exponent");
  bigint base = mod_floor(a, m);
  bigint exp = e;
  bigint acc = 1;
  while (exp > 0) {
    if ((exp & 1) != 0) acc = acc * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return acc;
}

bool is_prime(const bigint& n) {
  if (n < 2) return false;
  if (n < (bigint(1) << 32)) {
    const std::uint64_t v = n.convert_to<std::uint64_t>();
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t d = 3; d * d <= v; d += 2) {
      if (v % d == 0) return false;
    }
    return true;
  }
  return boost::multiprecision::miller_rabin_test(n, 32);
}

}  // namespace locmat
