#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "bfunc/expr.hpp"

namespace bfunc::testing {

inline std::vector<std::string> vars_of(std::initializer_list<const char*> names) {
  return {names.begin(), names.end()};
}

inline DiffOp op(const std::string& src, const std::vector<std::string>& vars) {
  return parse_op(src, vars);
}

inline SymbolPoly poly(const std::string& src, const std::vector<std::string>& vars) {
  return parse_poly(src, vars);
}

// Small random coefficient in {-3..3} \ {0}, occasionally a fraction.
inline Rational random_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  int a = 0;
  while (a == 0) a = num(rng);
  Rational c(a, den(rng));
  c.canonicalize();
  return c;
}

// Random polynomial with `terms` terms over `arity` slots; each slot exponent
// in [0, max_exp], and slots listed in `zero_slots` are kept at zero.
inline SymbolPoly random_poly(std::mt19937& rng, std::size_t arity, unsigned terms, unsigned max_exp,
                              const std::vector<unsigned>& zero_slots = {}) {
  std::uniform_int_distribution<unsigned> ex(0, max_exp);
  std::vector<Term> out;
  for (unsigned t = 0; t < terms; ++t) {
    Exponent e(arity);
    for (unsigned i = 0; i < arity; ++i) e.set(i, ex(rng));
    for (unsigned z : zero_slots) e.set(z, 0);
    out.push_back({e, random_coeff(rng)});
  }
  return SymbolPoly::from_terms(std::move(out));
}

inline DiffOp random_op(std::mt19937& rng, const Layout& L, unsigned terms, unsigned max_exp,
                        bool with_s = true) {
  std::vector<unsigned> zero;
  if (!with_s)
    for (unsigned j = 0; j < L.params; ++j) zero.push_back(L.param(j));
  return DiffOp(L, random_poly(rng, L.size(), terms, max_exp, zero));
}

}  // namespace bfunc::testing

namespace bfunc {

// gtest printers: raw exponent vectors, enough to read a failure.
inline void PrintTo(const SymbolPoly& f, std::ostream* os) {
  if (f.is_zero()) *os << "0";
  bool first = true;
  for (const auto& t : f.terms()) {
    *os << (first ? "" : " + ") << t.coeff.get_str() << "*" << t.exp.to_string();
    first = false;
  }
}

inline void PrintTo(const DiffOp& p, std::ostream* os) { PrintTo(p.symbol(), os); }

}  // namespace bfunc
