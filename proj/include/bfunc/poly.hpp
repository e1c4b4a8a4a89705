#pragma once

#include <limits>
#include <span>
#include <vector>

#include "bfunc/exponent.hpp"
#include "bfunc/order.hpp"
#include "bfunc/rational.hpp"

namespace bfunc {

struct Term {
  Exponent exp;
  Rational coeff;
};

// Sentinel "degree" of the zero polynomial.
inline constexpr unsigned kInfiniteDegree = std::numeric_limits<unsigned>::max();

// Commutative polynomial over the session variables with exact rational
// coefficients. Terms are kept sorted by raw exponent and never carry a zero
// coefficient, so equality is structural.
class SymbolPoly {
public:
  SymbolPoly() = default;

  static SymbolPoly constant(std::size_t arity, const Rational& c);
  static SymbolPoly monomial(Exponent e, Rational c = Rational(1));
  static SymbolPoly variable(std::size_t arity, std::size_t slot);
  // Sums duplicate exponents and drops zeros.
  static SymbolPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  Rational coefficient(const Exponent& e) const;

  SymbolPoly operator-() const;
  SymbolPoly& operator+=(const SymbolPoly& other);
  SymbolPoly& operator-=(const SymbolPoly& other);
  friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
  friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
  friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
  SymbolPoly scaled(const Rational& c) const;
  SymbolPoly mul_term(const Exponent& e, const Rational& c) const;
  SymbolPoly pow(unsigned k, std::size_t arity) const;

  friend bool operator==(const SymbolPoly& a, const SymbolPoly& b);

  // Leading data with respect to `order`; the zero polynomial throws
  // UndefinedLeadingTermError.
  const Term& leading_term(const MatrixOrder& order) const;
  const Exponent& leading_exponent(const MatrixOrder& order) const {
    return leading_term(order).exp;
  }
  SymbolPoly rest(const MatrixOrder& order) const;

  std::vector<Exponent> exps() const;
  // Minimum |alpha| over the terms; kInfiniteDegree for zero.
  unsigned min_total_degree() const;
  // Maximum |alpha| over the terms; 0 for zero.
  unsigned max_total_degree() const;

  SymbolPoly truncated_below(unsigned degree) const;
  template <class Pred>
  SymbolPoly filtered(Pred keep) const {
    SymbolPoly r;
    for (const auto& t : terms_)
      if (keep(t)) r.terms_.push_back(t);
    return r;
  }

  SymbolPoly derivative(std::size_t slot) const;
  // p(..., v_slot + c, ...)
  SymbolPoly shifted(std::size_t slot, const Rational& c) const;
  // p(..., v_slot = value, ...) for a polynomial value.
  SymbolPoly substituted(std::size_t slot, const SymbolPoly& value, std::size_t arity) const;

  // Terms sorted descending by `order`.
  std::vector<Term> sorted_terms(const MatrixOrder& order) const;

private:
  std::vector<Term> terms_;
};

// The LM/LT/LE/Exps/Rest notation.
inline SymbolPoly lm(const SymbolPoly& f, const MatrixOrder& order) {
  return SymbolPoly::monomial(f.leading_exponent(order));
}
inline SymbolPoly lt(const SymbolPoly& f, const MatrixOrder& order) {
  const auto& t = f.leading_term(order);
  return SymbolPoly::monomial(t.exp, t.coeff);
}
inline Exponent le(const SymbolPoly& f, const MatrixOrder& order) {
  return f.leading_exponent(order);
}
inline std::vector<Exponent> exps(const SymbolPoly& f) { return f.exps(); }
inline SymbolPoly rest(const SymbolPoly& f, const MatrixOrder& order) { return f.rest(order); }
inline unsigned min_total_degree(const SymbolPoly& f) { return f.min_total_degree(); }

// Sorts by exponent and merges equal exponents in place, dropping zeros.
void normalize_terms(std::vector<Term>& terms);

}  // namespace bfunc
