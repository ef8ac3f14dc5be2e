#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "locmat/bigint.hpp"
#include "locmat/errors.hpp"

namespace locmat {

// Exponent of a prime inside a Steinitz number: a natural number or infinity.
class steinitz_exp {
 public:
  steinitz_exp() : infinite_(false), value_(0) {}
  steinitz_exp(bigint v) : infinite_(false), value_(std::move(v)) {
    if (value_ < 0) throw invalid_argument("Steinitz exponent must be nonnegative");
  }
  steinitz_exp(int v) : steinitz_exp(bigint(v)) {}

  static steinitz_exp infinity() {
    steinitz_exp e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }
  // Finite value; only meaningful when !is_infinite().
  const bigint& finite_value() const { return value_; }

  friend bool operator==(const steinitz_exp& a, const steinitz_exp& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator<=(const steinitz_exp& a, const steinitz_exp& b) {
    if (b.infinite_) return true;
    if (a.infinite_) return false;
    return a.value_ <= b.value_;
  }

  // Sum with infinity absorbing.
  friend steinitz_exp operator+(const steinitz_exp& a, const steinitz_exp& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return steinitz_exp(a.value_ + b.value_);
  }

  friend steinitz_exp min(const steinitz_exp& a, const steinitz_exp& b) {
    return (a <= b) ? a : b;
  }
  friend steinitz_exp max(const steinitz_exp& a, const steinitz_exp& b) {
    return (a <= b) ? b : a;
  }

 private:
  bool infinite_;
  bigint value_;
};

// A supernatural number: finitely many explicit prime exponents over a
// default exponent (0 or infinity) that applies to every other prime.
// Canonical form never stores an explicit exponent equal to the default,
// so equality is structural. 1 is (empty, default 0) and the maximal
// Steinitz number Omega is (empty, default infinity).
class steinitz_number {
 public:
  using exponent_map = std::map<bigint, steinitz_exp>;

  steinitz_number() : default_(0) {}  // the number 1

  static steinitz_number one() { return steinitz_number(); }
  static steinitz_number omega();

  // Canonicalizing constructor; every key must be prime and the default
  // exponent must be 0 or infinity.
  static steinitz_number make(exponent_map exps, steinitz_exp default_exp);

  // Prime factorization of a positive integer; rejects n < 1.
  static steinitz_number from_integer(const bigint& n);

  const exponent_map& explicit_exponents() const { return exps_; }
  const steinitz_exp& default_exponent() const { return default_; }
  steinitz_exp exponent(const bigint& p) const;

  bool is_one() const { return exps_.empty() && default_.is_zero(); }
  bool is_omega() const { return exps_.empty() && default_.is_infinite(); }
  // True when the number is an ordinary positive integer (all exponents finite).
  bool is_finite() const;
  // The integer value; requires is_finite().
  bigint to_integer() const;

  friend bool operator==(const steinitz_number& a, const steinitz_number& b) {
    return a.default_ == b.default_ && a.exps_ == b.exps_;
  }

 private:
  friend struct steinitz_detail;

  exponent_map exps_;
  steinitz_exp default_;
};

// Exponentwise sum with infinity absorbing.
steinitz_number multiply(const steinitz_number& a, const steinitz_number& b);

// True iff a divides b (exponentwise <=).
bool divides(const steinitz_number& a, const steinitz_number& b);

// Witness s3 with s1 = s2 * s3; requires divides(s2, s1). At primes where
// both exponents are infinite the witness is not unique and the maximal
// one (infinity) is returned.
steinitz_number quotient(const steinitz_number& s1, const steinitz_number& s2);

// Exponentwise max / min over a nonempty list.
steinitz_number lcm(const std::vector<steinitz_number>& xs);
steinitz_number gcd(const std::vector<steinitz_number>& xs);

// Convenience for integer operands.
bool divides(const bigint& a, const steinitz_number& b);

// Grammar (ASCII, whitespace insignificant):
//   expr   := factor ('*' factor)*
//           | 'lcm' '(' expr (',' expr)* ')'
//           | 'gcd' '(' expr (',' expr)* ')'
//   factor := INT | INT '^' (INT | 'inf') | 'omega'
// A bare INT is factorized; a base with an explicit '^' must be prime.
steinitz_number parse_steinitz(std::string_view text);

// Ascending primes, '*' separators, 'inf' for infinite exponents,
// "omega" for the maximal number, "1" for the identity.
std::string format_steinitz(const steinitz_number& s);

}  // namespace locmat
