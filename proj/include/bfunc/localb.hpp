#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bfunc/groebner.hpp"

namespace bfunc {

// Generators of Ann_{D[s]} f^s, by elimination of (u, v) from
// <t - u f, d_i + u f_i d_t, u v - 1> and the substitution t d_t = -s - 1.
// `f` must be a nonzero polynomial in the x slots of the main layout.
std::vector<DiffOp> ann_fs(const SymbolPoly& f, const Layout& layout,
                           TieOrder tie = TieOrder::Grevlex);

// Remainder of dhat_approx_div(P, G, N); agrees with NF(P, G, <) below total
// degree N.
DiffOp approx_nf(const DiffOp& p, const GroebnerBasis& g, unsigned n);

// Nullspace over Q of the matrix whose columns are the coefficient vectors
// of the nfs restricted to monomials of total degree < N. The basis comes
// from reduced row echelon form (one vector per free column, that column
// set to 1).
std::vector<std::vector<Rational>> dependency_kernel(std::span<const DiffOp> nfs, unsigned n);

// NF(s^i, G, <, N), memoized per (i, N).
class NFTable {
public:
  explicit NFTable(const GroebnerBasis& g) : g_(g) {}
  const DiffOp& get(unsigned i, unsigned n);
  std::size_t size() const { return memo_.size(); }

private:
  const GroebnerBasis& g_;
  std::map<std::pair<unsigned, unsigned>, DiffOp> memo_;
};

struct TraceStep {
  unsigned n = 0;
  unsigned degree = 0;
  // Candidate coefficients (ascending powers of s); empty when the kernel at
  // this degree was trivial.
  std::vector<Rational> candidate;
  bool accepted = false;
};

struct GeneratorResult {
  std::vector<Rational> b;  // ascending, monic
  unsigned n_final = 0;
  std::vector<TraceStep> trace;
};

// The monic generator of I cap K[s] for I generated by the standard basis G,
// searching N = n0, n0+1, ... and certifying candidates by Mora division.
// Throws ResourceLimitError past nmax.
GeneratorResult find_generator(const GroebnerBasis& g, unsigned n0, unsigned nmax);

struct RootMultiplicity {
  Rational root;
  unsigned multiplicity = 0;
};

struct RootsResult {
  std::vector<RootMultiplicity> roots;  // ascending
  std::vector<Rational> cofactor;       // ascending, monic; {1} when b splits over Q
};

RootsResult rational_roots(std::span<const Rational> monic_ascending);

struct LocalBOptions {
  TieOrder tie = TieOrder::Grevlex;
  GbStrategy gb = GbStrategy::Mora;
  std::optional<unsigned> n0;  // default 2(2n+1)
  unsigned nmax = 64;
  // Replaces the computed annihilator when nonempty.
  std::vector<DiffOp> annihilator;
};

struct LocalBTimings {
  double ann_ms = 0, gb_ms = 0, nf_ms = 0, total_ms = 0;
};

struct BFunctionResult {
  std::vector<Rational> b;  // ascending, monic
  RootsResult roots;
  unsigned n_final = 0;
  MoraResult certificate;
  std::vector<TraceStep> trace;
  std::vector<DiffOp> annihilator;
  std::vector<DiffOp> basis;
  GbStrategy gb_strategy = GbStrategy::Mora;
  LocalBTimings timings;
};

BFunctionResult local_b_function(const SymbolPoly& f, const Layout& layout,
                                 const LocalBOptions& options = {});

// b(s) as an operator of the main layout.
DiffOp univariate_op(std::span<const Rational> ascending, const Layout& layout);

}  // namespace bfunc
