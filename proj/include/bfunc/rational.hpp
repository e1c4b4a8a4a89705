#pragma once

#include <gmpxx.h>

#include <string>

namespace bfunc {

// Exact rationals backed by GMP. gmpxx keeps results of arithmetic in
// canonical form (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "a" or "a/b"; throws InputError on malformed text or b == 0.
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace bfunc
