#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bfunc/poly.hpp"

namespace bfunc {

// The partition Delta^1, ..., Delta^s, Delta-bar of Z_{>=0}^k induced by an
// ordered list of leading exponents: Delta^i holds the points dominating
// leader i but no earlier leader; Delta-bar holds the rest. Leader order
// matters.
class StaircasePartition {
public:
  explicit StaircasePartition(std::vector<Exponent> leaders);

  const std::vector<Exponent>& leaders() const { return leaders_; }
  std::size_t arity() const { return leaders_.front().size(); }

  // Index of the class containing `a`, or nullopt for Delta-bar.
  std::optional<std::size_t> classify(const Exponent& a) const;

private:
  std::vector<Exponent> leaders_;
};

struct MonoDivision {
  std::vector<SymbolPoly> quotients;
  SymbolPoly remainder;
};

// Division of `f` by the monomial terms `divisor_leads` (the leading terms of
// the actual divisors) along `partition`: every term of f lands either in a
// quotient or in the remainder, so the result is unique.
MonoDivision mono_div(const SymbolPoly& f, std::span<const Term> divisor_leads,
                      const StaircasePartition& partition);

struct ApproxDivisionResult {
  std::vector<SymbolPoly> quotients;
  SymbolPoly remainder;
  // Unprocessed part; zero or of minimal total degree >= degree_bound.
  SymbolPoly tail;
  unsigned degree_bound = 0;
};

// Terminating approximation of the division in K[[vars]] under a local
// order whose only weight row is all -1:
//   f = sum q_i g_i + remainder + tail  (exactly).
// Quotient terms of degree < N - |LE(g_i)| and remainder terms of degree < N
// coincide with those of the exact (infinite) division.
ApproxDivisionResult series_approx_div(const SymbolPoly& f, std::span<const SymbolPoly> divisors,
                                       const MatrixOrder& order, unsigned n);

}  // namespace bfunc
