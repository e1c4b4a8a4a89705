#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "bfunc/diffop.hpp"

namespace bfunc {

// unit * P = sum quotients_i * G_i + remainder, with unit a polynomial in x
// whose constant term is 1 (so it is invertible in the power-series ring).
struct MoraResult {
  DiffOp unit;
  std::vector<DiffOp> quotients;
  DiffOp remainder;
};

// Mora's tangent-cone division of P by G under the local order `order`
// (normally MatrixOrder::weyl_local). Only the leading term is reduced: the
// remainder is zero or has a leading monomial outside the monoideal of the
// LM(G_i). Without `track` the unit and quotients are left empty.
MoraResult mora_div(const DiffOp& p, std::span<const DiffOp> g, const MatrixOrder& order,
                    bool track = true);
MoraResult mora_div(const DiffOp& p, std::span<const DiffOp> g, TieOrder tie = TieOrder::Grevlex);

// Remainder of the plain (terminating) reduction by G under a global
// well-order. With `full` every term is reduced, else only leading terms.
DiffOp global_reduce(const DiffOp& p, std::span<const DiffOp> g, const MatrixOrder& order,
                     bool full = true);

// (1/lc P) m_P P - (1/lc Q) m_Q Q, with m_P, m_Q the monomials lifting the
// leading exponents to their lcm.
DiffOp spair(const DiffOp& p, const DiffOp& q, const MatrixOrder& order);

enum class GbStrategy { Mora, Lazard };
GbStrategy parse_gb_strategy(std::string_view name);
std::string_view gb_strategy_name(GbStrategy s);

struct GbStats {
  unsigned pairs_considered = 0;
  unsigned pairs_skipped = 0;
  unsigned reductions_to_zero = 0;
};

struct GroebnerBasis {
  std::vector<DiffOp> elements;
  MatrixOrder order;
  GbStats stats;
};

// Standard basis of the D-hat[s] ideal generated by `gens` under the local
// order weyl_local(tie): Buchberger with Mora normal forms, normal pair
// selection, chain criterion only.
GroebnerBasis buchberger_mora(std::span<const DiffOp> gens, TieOrder tie = TieOrder::Grevlex);

// Same ideal-level result via homogenization: Buchberger in the homogenized
// Weyl algebra under the degree-first refinement of <, then h = 1.
GroebnerBasis lazard_gb(std::span<const DiffOp> gens, TieOrder tie = TieOrder::Grevlex);

GroebnerBasis standard_basis(std::span<const DiffOp> gens, GbStrategy strategy,
                             TieOrder tie = TieOrder::Grevlex);

// Buchberger for a global well-order (plain reduction), reduced at the end.
GroebnerBasis global_gb(std::span<const DiffOp> gens, const MatrixOrder& order);

// Does every element of `a` Mora-reduce to zero by `b` and vice versa?
bool mutually_reduce(std::span<const DiffOp> a, std::span<const DiffOp> b, const MatrixOrder& order);

}  // namespace bfunc
