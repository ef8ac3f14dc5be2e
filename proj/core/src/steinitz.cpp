#include "locmat/steinitz.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace locmat {

namespace {

std::map<bigint, bigint> factorize(bigint n) {
  std::map<bigint, bigint> out;
  for (bigint d = 2; d * d <= n; d == 2 ? ++d : d += 2) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

}  // namespace

// Canonicalizes without re-validating primality; internal construction path.
struct steinitz_detail {
  static steinitz_number normalized(steinitz_number::exponent_map exps,
                                    steinitz_exp default_exp) {
    steinitz_number s;
    s.default_ = std::move(default_exp);
    for (auto& [p, e] : exps) {
      if (e == s.default_) continue;
      s.exps_.emplace(p, e);
    }
    return s;
  }
};

steinitz_number steinitz_number::omega() {
  steinitz_number s;
  s.default_ = steinitz_exp::infinity();
  return s;
}

steinitz_number steinitz_number::make(exponent_map exps, steinitz_exp default_exp) {
  if (!default_exp.is_zero() && !default_exp.is_infinite())
    throw invalid_argument("default exponent must be 0 or inf");
  for (const auto& [p, e] : exps) {
    if (!is_prime(p)) throw invalid_argument("non-prime base: " + p.str());
  }
  return steinitz_detail::normalized(std::move(exps), std::move(default_exp));
}

steinitz_number steinitz_number::from_integer(const bigint& n) {
  if (n < 1) throw invalid_argument("Steinitz numbers have no zero or negatives");
  steinitz_number s;
  for (auto& [p, e] : factorize(n)) s.exps_.emplace(p, steinitz_exp(e));
  return s;
}

steinitz_exp steinitz_number::exponent(const bigint& p) const {
  auto it = exps_.find(p);
  return it == exps_.end() ? default_ : it->second;
}

bool steinitz_number::is_finite() const {
  if (default_.is_infinite()) return false;
  for (const auto& [p, e] : exps_) {
    if (e.is_infinite()) return false;
  }
  return true;
}

bigint steinitz_number::to_integer() const {
  if (!is_finite()) throw invalid_argument("to_integer: not a finite Steinitz number");
  bigint out = 1;
  for (const auto& [p, e] : exps_) {
    if (e.finite_value() > 1000000) throw invalid_argument("to_integer: value too large");
    for (bigint i = 0; i < e.finite_value(); ++i) out *= p;
  }
  return out;
}

steinitz_number multiply(const steinitz_number& a, const steinitz_number& b) {
  steinitz_number::exponent_map out = a.explicit_exponents();
  for (const auto& [p, e] : b.explicit_exponents()) {
    auto it = out.find(p);
    if (it == out.end()) {
      out.emplace(p, a.default_exponent() + e);
    } else {
      it->second = it->second + e;
    }
  }
  // primes explicit only in a
  for (auto& [p, e] : out) {
    if (b.explicit_exponents().find(p) == b.explicit_exponents().end())
      e = e + b.default_exponent();
  }
  return steinitz_number::normalized(std::move(out),
                                     a.default_exponent() + b.default_exponent());
}

bool divides(const steinitz_number& a, const steinitz_number& b) {
  if (!(a.default_exponent() <= b.default_exponent())) return false;
  for (const auto& [p, e] : a.explicit_exponents()) {
    if (!(e <= b.exponent(p))) return false;
  }
  for (const auto& [p, e] : b.explicit_exponents()) {
    if (!(a.exponent(p) <= e)) return false;
  }
  return true;
}

bool divides(const bigint& a, const steinitz_number& b) {
  return divides(steinitz_number::from_integer(a), b);
}

steinitz_number quotient(const steinitz_number& s1, const steinitz_number& s2) {
  if (!divides(s2, s1)) throw not_divisible("quotient: second argument does not divide first");
  auto quot_exp = [](const steinitz_exp& r, const steinitz_exp& k) {
    if (r.is_infinite()) return steinitz_exp::infinity();  // maximal witness
    return steinitz_exp(r.finite_value() - k.finite_value());
  };
  steinitz_number::exponent_map out;
  for (const auto& [p, e] : s1.explicit_exponents()) out.emplace(p, quot_exp(e, s2.exponent(p)));
  for (const auto& [p, e] : s2.explicit_exponents()) {
    if (out.find(p) == out.end()) out.emplace(p, quot_exp(s1.exponent(p), e));
  }
  return steinitz_number::normalized(
      std::move(out), quot_exp(s1.default_exponent(), s2.default_exponent()));
}

namespace {

steinitz_number combine(const steinitz_number& a, const steinitz_number& b, bool use_max) {
  auto pick = [use_max](const steinitz_exp& x, const steinitz_exp& y) {
    return use_max ? max(x, y) : min(x, y);
  };
  steinitz_number::exponent_map out;
  for (const auto& [p, e] : a.explicit_exponents()) out.emplace(p, pick(e, b.exponent(p)));
  for (const auto& [p, e] : b.explicit_exponents()) {
    if (out.find(p) == out.end()) out.emplace(p, pick(a.exponent(p), e));
  }
  return steinitz_number::normalized(
      std::move(out), pick(a.default_exponent(), b.default_exponent()));
}

}  // namespace

steinitz_number lcm(const std::vector<steinitz_number>& xs) {
  if (xs.empty()) throw invalid_argument("lcm of empty list");
  steinitz_number acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = combine(acc, xs[i], true);
  return acc;
}

steinitz_number gcd(const std::vector<steinitz_number>& xs) {
  if (xs.empty()) throw invalid_argument("gcd of empty list");
  steinitz_number acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = combine(acc, xs[i], false);
  return acc;
}

// ---------------------------------------------------------------------------
// parsing / formatting

namespace {

struct cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) throw parse_error(std::string("expected '") + c + "'", pos);
  }
  std::string read_ident() {
    skip_ws();
    std::string out;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
      out.push_back(text[pos++]);
    return out;
  }
  bigint read_int() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected integer", pos);
    bigint v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  }
};

steinitz_number parse_expr(cursor& c);

steinitz_number parse_factor(cursor& c) {
  c.skip_ws();
  if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
    const std::size_t at = c.pos;
    const std::string ident = c.read_ident();
    if (ident == "omega") return steinitz_number::omega();
    throw parse_error("expected integer, 'omega', 'lcm' or 'gcd'", at);
  }
  const std::size_t base_at = c.pos;
  const bigint base = c.read_int();
  if (c.consume('^')) {
    if (!is_prime(base)) throw parse_error("non-prime base '" + base.str() + "'", base_at);
    c.skip_ws();
    if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
      const std::size_t at = c.pos;
      if (c.read_ident() != "inf") throw parse_error("expected exponent or 'inf'", at);
      return steinitz_number::make({{base, steinitz_exp::infinity()}}, steinitz_exp(0));
    }
    const bigint e = c.read_int();
    return steinitz_number::make({{base, steinitz_exp(e)}}, steinitz_exp(0));
  }
  if (base < 1) throw parse_error("Steinitz numbers have no zero", base_at);
  return steinitz_number::from_integer(base);
}

steinitz_number parse_expr(cursor& c) {
  c.skip_ws();
  if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
    const std::size_t at = c.pos;
    const std::string ident = c.read_ident();
    if (ident == "lcm" || ident == "gcd") {
      c.expect('(');
      std::vector<steinitz_number> args;
      args.push_back(parse_expr(c));
      while (c.consume(',')) args.push_back(parse_expr(c));
      c.expect(')');
      return ident == "lcm" ? lcm(args) : gcd(args);
    }
    c.pos = at;  // fall through: 'omega' is a factor
  }
  steinitz_number acc = parse_factor(c);
  while (c.consume('*')) acc = multiply(acc, parse_factor(c));
  return acc;
}

}  // namespace

steinitz_number parse_steinitz(std::string_view text) {
  cursor c{text};
  steinitz_number s = parse_expr(c);
  if (!c.eof()) throw parse_error("unexpected trailing input", c.pos);
  return s;
}

std::string format_steinitz(const steinitz_number& s) {
  if (s.is_omega()) return "omega";
  if (s.default_exponent().is_infinite())
    throw invalid_argument("format: number with infinite default and finite exceptions "
                           "has no expression form");
  if (s.explicit_exponents().empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, e] : s.explicit_exponents()) {
    if (!first) out << " * ";
    first = false;
    out << p.str();
    if (e.is_infinite()) {
      out << "^inf";
    } else if (e.finite_value() != 1) {
      out << "^" << e.finite_value().str();
    }
  }
  return out.str();
}

}  // namespace locmat
