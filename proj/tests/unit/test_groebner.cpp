#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bfunc/errors.hpp"
#include "bfunc/groebner.hpp"
#include "bfunc/localb.hpp"
#include "support/helpers.hpp"

using namespace bfunc;
using namespace bfunc::testing;

namespace {

const auto X = vars_of({"x"});
const auto XY = vars_of({"x", "y"});
const auto XYZ = vars_of({"x", "y", "z"});

std::vector<DiffOp> ops(std::initializer_list<const char*> srcs, const std::vector<std::string>& vars) {
  std::vector<DiffOp> out;
  for (const char* s : srcs) out.push_back(op(s, vars));
  return out;
}

const std::vector<DiffOp>& example_h() {
  static const auto h = ops({"x^2*(y+1)^2*z^2", "-2*s + z*dz", "-x*dx + z*dz", "-dy + x*dx - y*dy"}, XYZ);
  return h;
}

const std::vector<DiffOp>& example_g() {
  static const auto g = ops({"x^2*(y+1)^2*z^2", "-2*s + z*dz", "-x*dx + z*dz", "-dy + x*dx - y*dy",
                             "-x*z^3*dz - 2*x*z^2",
                             "-z^4*dz^2 - 2*x*z^2*dx - 2*z^3*dz - 2*z^2"},
                            XYZ);
  return g;
}

bool is_unit_in_x(const DiffOp& u) {
  const Layout& L = u.layout();
  for (const auto& t : u.symbol().terms())
    for (unsigned k = L.pairs; k < L.size(); ++k)
      if (t.exp[k] != 0) return false;
  return u.symbol().coefficient(Exponent(L.size())) == 1;
}

void expect_representation(const DiffOp& p, std::span<const DiffOp> g, const MoraResult& r,
                           const MatrixOrder& order) {
  DiffOp rhs = r.remainder;
  for (std::size_t i = 0; i < g.size(); ++i) rhs += r.quotients[i] * g[i];
  EXPECT_EQ(r.unit * p, rhs);
  EXPECT_TRUE(is_unit_in_x(r.unit));
  if (!r.remainder.is_zero()) {
    const Exponent lead = le(r.remainder.symbol(), order);
    for (const auto& x : g) EXPECT_FALSE(le(x.symbol(), order).divides(lead));
  }
}

std::set<Exponent> leading_exponents(std::span<const DiffOp> g, const MatrixOrder& order) {
  std::set<Exponent> out;
  for (const auto& x : g) out.insert(le(x.symbol(), order));
  return out;
}

// Ideals used for the strategy comparison.
std::vector<std::vector<DiffOp>> sample_ideals() {
  std::vector<std::vector<DiffOp>> out;
  out.push_back(example_h());
  const Layout L2 = Layout::weyl(2);
  for (const char* f : {"x*(x+y+1)", "x^2 + y^3", "x*y*(x+y)", "x^2 + y^2"}) {
    const SymbolPoly p = poly(f, XY);
    auto gens = ann_fs(p, L2);
    gens.push_back(DiffOp(L2, p));
    out.push_back(std::move(gens));
  }
  out.push_back(ops({"x*dx - s", "x^2 - x^3"}, X));
  out.push_back(ops({"dx + x*dx", "x*y - y^2", "s*y - dy"}, XY));
  return out;
}

}  // namespace

TEST(Groebner, SPairExamples) {
  const MatrixOrder o = MatrixOrder::weyl_local(Layout::weyl(1));
  EXPECT_EQ(spair(op("dx", X), op("x", X), o), op("-1", X));
  EXPECT_EQ(spair(op("x - x^2", X), op("x*dx", X), o), op("-x^2*dx - 2*x + 1", X));
  EXPECT_TRUE(spair(op("dx", X), op("dx", X), o).is_zero());
  EXPECT_THROW(spair(op("dx", X), DiffOp(Layout::weyl(1)), o), InputError);
}

TEST(Groebner, MoraExamples) {
  const Layout L = Layout::weyl(1);
  const MatrixOrder o = MatrixOrder::weyl_local(L);

  // x = (1 - x)^(-1) (x - x^2): needs the unit.
  const auto g1 = ops({"x - x^2"}, X);
  const MoraResult r1 = mora_div(op("x", X), g1);
  EXPECT_TRUE(r1.remainder.is_zero());
  expect_representation(op("x", X), g1, r1, o);

  const auto g2 = ops({"dx"}, X);
  const MoraResult r2 = mora_div(op("x*dx + dx", X), g2);
  EXPECT_TRUE(r2.remainder.is_zero());
  EXPECT_EQ(r2.quotients[0], op("x + 1", X));
  expect_representation(op("x*dx + dx", X), g2, r2, o);

  const auto g3 = ops({"1"}, X);
  EXPECT_TRUE(mora_div(op("s*x*dx^3 + 5", X), g3).remainder.is_zero());

  // 1 + x is a unit of the local ring; only leading terms are reduced.
  const auto g4 = ops({"1 + x"}, X);
  EXPECT_TRUE(mora_div(op("dx", X), g4).remainder.is_zero());
  const auto g5 = ops({"x"}, X);
  EXPECT_EQ(mora_div(op("dx + x", X), g5).remainder, op("dx + x", X));

  EXPECT_THROW(mora_div(op("x", X), std::vector<DiffOp>{}), InputError);
  EXPECT_TRUE(mora_div(DiffOp(L), g1).remainder.is_zero());
}

TEST(Groebner, MoraRepresentationOnRandomInputs) {
  std::mt19937 rng(53);
  std::uniform_int_distribution<unsigned> count(1, 3), terms(1, 3);
  for (unsigned n_vars : {1u, 2u}) {
    const Layout L = Layout::weyl(n_vars);
    const MatrixOrder o = MatrixOrder::weyl_local(L);
    for (int it = 0; it < 110; ++it) {
      std::vector<DiffOp> g;
      for (unsigned j = count(rng); j > 0; --j) {
        DiffOp x(L);
        while (x.is_zero()) x = random_op(rng, L, terms(rng), 2);
        g.push_back(x);
      }
      const DiffOp p = random_op(rng, L, terms(rng) + 1, 2);
      expect_representation(p, g, mora_div(p, g), o);
    }
  }
}

TEST(Groebner, ExampleStandardBasis) {
  const MatrixOrder o = MatrixOrder::weyl_local(Layout::weyl(3));
  for (GbStrategy s : {GbStrategy::Mora, GbStrategy::Lazard}) {
    const GroebnerBasis gb = standard_basis(example_h(), s);
    EXPECT_EQ(leading_exponents(gb.elements, o), leading_exponents(example_g(), o));
    EXPECT_TRUE(mutually_reduce(gb.elements, example_g(), o));
  }
}

TEST(Groebner, MoraAndLazardAgree) {
  const auto ideals = sample_ideals();
  ASSERT_GE(ideals.size(), 5u);
  for (const auto& gens : ideals) {
    const MatrixOrder o = MatrixOrder::weyl_local(gens.front().layout());
    const GroebnerBasis a = buchberger_mora(gens), b = lazard_gb(gens);
    EXPECT_TRUE(mutually_reduce(a.elements, b.elements, o));
    EXPECT_EQ(leading_exponents(a.elements, o), leading_exponents(b.elements, o));
    for (const auto& g : gens) EXPECT_TRUE(mora_div(g, a.elements, o, false).remainder.is_zero());
  }
}

TEST(Groebner, SPairsReduceToZero) {
  for (const auto& gens : sample_ideals()) {
    const GroebnerBasis gb = buchberger_mora(gens);
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
      for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
        const DiffOp sp = spair(gb.elements[i], gb.elements[j], gb.order);
        EXPECT_TRUE(mora_div(sp, gb.elements, gb.order, false).remainder.is_zero());
      }
  }
}

TEST(Groebner, RandomCombinationsReduceToZero) {
  std::mt19937 rng(59);
  std::vector<GroebnerBasis> bases;
  for (const auto& gens : sample_ideals()) bases.push_back(buchberger_mora(gens));
  std::uniform_int_distribution<unsigned> terms(1, 2);
  int cases = 0;
  for (int it = 0; it < 210; ++it) {
    const GroebnerBasis& gb = bases[it % bases.size()];
    const Layout& L = gb.elements.front().layout();
    DiffOp comb(L);
    for (const auto& g : gb.elements) comb += random_op(rng, L, terms(rng), 1) * g;
    EXPECT_TRUE(mora_div(comb, gb.elements, gb.order, false).remainder.is_zero());
    ++cases;
  }
  EXPECT_GE(cases, 200);
}

TEST(Groebner, GlobalBasisEliminates) {
  // the second generator is dx*(x - s), so the ideal is principal
  const Layout L = Layout::weyl(1);
  const GroebnerBasis gb = global_gb(ops({"x - s", "x*dx - s*dx + 1"}, X),
                                     MatrixOrder::eliminate_params(L));
  ASSERT_EQ(gb.elements.size(), 1u);
  EXPECT_EQ(gb.elements[0], op("s - x", X));

  const GroebnerBasis g2 = global_gb(ops({"x^2", "x*dx"}, X), MatrixOrder::eliminate_params(L));
  for (const char* p : {"x^2", "x*dx", "x"})
    EXPECT_TRUE(global_reduce(op(p, X), g2.elements, g2.order).is_zero()) << p;
}

TEST(Groebner, StrategyNames) {
  EXPECT_EQ(parse_gb_strategy("mora"), GbStrategy::Mora);
  EXPECT_EQ(parse_gb_strategy("lazard"), GbStrategy::Lazard);
  EXPECT_EQ(gb_strategy_name(GbStrategy::Lazard), "lazard");
  EXPECT_THROW(parse_gb_strategy("f4"), InputError);
}
