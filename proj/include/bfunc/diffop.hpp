#pragma once

#include "bfunc/poly.hpp"

namespace bfunc {

// e-weight of a monomial: each xi and each (non-homogenizer) parameter
// counts 1, x counts 0.
unsigned e_weight(const Layout& layout, const Exponent& e);

// An element of the Weyl algebra (with central parameters) in normal order:
// sum of c * x^alpha * params^gamma * d^beta with every x left of every d.
// Stored as its total symbol, i.e. with d_i replaced positionally by xi_i.
class DiffOp {
public:
  DiffOp() = default;
  explicit DiffOp(Layout layout) : layout_(layout) {}
  DiffOp(Layout layout, SymbolPoly symbol);

  static DiffOp constant(Layout layout, const Rational& c);
  static DiffOp monomial(Layout layout, Exponent e, Rational c = Rational(1));
  static DiffOp x(Layout layout, unsigned i);
  static DiffOp d(Layout layout, unsigned i);
  static DiffOp param(Layout layout, unsigned j);

  const Layout& layout() const { return layout_; }
  const SymbolPoly& symbol() const { return symbol_; }
  bool is_zero() const { return symbol_.is_zero(); }

  DiffOp operator-() const { return DiffOp(layout_, -symbol_); }
  DiffOp& operator+=(const DiffOp& other);
  DiffOp& operator-=(const DiffOp& other);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  // Operator composition (Leibniz rule).
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  DiffOp scaled(const Rational& c) const { return DiffOp(layout_, symbol_.scaled(c)); }
  DiffOp pow(unsigned k) const;

  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.symbol_ == b.symbol_ && (a.is_zero() || a.layout_ == b.layout_);
  }

private:
  Layout layout_;
  SymbolPoly symbol_;
};

// Total symbol of P * Q:  sum_nu 1/nu! (d_xi^nu P)(d_x^nu Q), with an extra
// h^(2|nu|) when the layout has a homogenizer.
DiffOp op_mul(const DiffOp& p, const DiffOp& q);

inline const SymbolPoly& total_symbol(const DiffOp& p) { return p.symbol(); }
inline DiffOp from_symbol(const Layout& layout, SymbolPoly f) { return DiffOp(layout, std::move(f)); }

// Maximal e-weight over the terms. Zero throws UndefinedLeadingTermError.
unsigned ord_e(const DiffOp& p);
// Sum of the symbol terms of maximal e-weight. Zero throws.
SymbolPoly in_e(const DiffOp& p);
// Symbol terms of e-weight exactly k and total degree < bound.
SymbolPoly e_part(const DiffOp& p, unsigned k, unsigned bound = kInfiniteDegree);

// Is the total degree of every term >= i (membership in T(i))?
inline bool in_degree_filtration(const SymbolPoly& f, unsigned i) {
  return f.is_zero() || f.min_total_degree() >= i;
}

}  // namespace bfunc
