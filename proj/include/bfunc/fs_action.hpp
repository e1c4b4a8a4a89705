#pragma once

#include "bfunc/diffop.hpp"

namespace bfunc {

// P . f^(s+shift) = (numerator / f^denom_power) . f^(s+shift), where the
// numerator lives in K[x, s]. No cancellation against f is attempted.
struct FsAction {
  SymbolPoly numerator;
  unsigned denom_power = 0;

  bool is_zero() const { return numerator.is_zero(); }
};

// Symbolic action of an operator of the main session layout on f^(s+shift):
// d_i acts on g f^(s+shift-k) as ((d_i g) f + (s+shift-k) g f_i) f^(s+shift-k-1).
// `f` must be a nonzero polynomial in x alone.
FsAction apply_to_fs(const DiffOp& p, const SymbolPoly& f, long shift = 0);

// a == b as elements of K[x, s][1/f], compared by cross-multiplication.
bool same_action(const FsAction& a, const FsAction& b, const SymbolPoly& f);

// Does P . f^(s+1) = b(s) f^s hold? `b` is a polynomial in the s slot.
bool satisfies_functional_equation(const DiffOp& p, const SymbolPoly& b, const SymbolPoly& f);

}  // namespace bfunc
