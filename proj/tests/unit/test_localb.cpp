#include <gtest/gtest.h>

#include <random>

#include "bfunc/errors.hpp"
#include "bfunc/fs_action.hpp"
#include "bfunc/localb.hpp"
#include "support/helpers.hpp"

using namespace bfunc;
using namespace bfunc::testing;

namespace {

const auto X = vars_of({"x"});
const auto XY = vars_of({"x", "y"});
const auto XYZ = vars_of({"x", "y", "z"});

std::vector<Rational> q(std::initializer_list<const char*> cs) {
  std::vector<Rational> out;
  for (const char* c : cs) out.push_back(parse_rational(c));
  return out;
}

GroebnerBasis example_g() {
  GroebnerBasis g{{}, MatrixOrder::weyl_local(Layout::weyl(3)), {}};
  for (const char* s : {"x^2*(y+1)^2*z^2", "-2*s + z*dz", "-x*dx + z*dz", "-dy + x*dx - y*dy",
                        "-x*z^3*dz - 2*x*z^2", "-z^4*dz^2 - 2*x*z^2*dx - 2*z^3*dz - 2*z^2"})
    g.elements.push_back(op(s, XYZ));
  return g;
}

}  // namespace

TEST(Annihilator, AnnihilatesFs) {
  const std::vector<std::pair<const char*, std::vector<std::string>>> cases = {
      {"x^2 + y^3", XY},          {"x*y*(x+y)", XY},         {"x*(x+y+1)", XY},
      {"x^3 - y^2", XY},          {"x^5 + y^4", XY},         {"x^2*y + y^3", XY},
      {"(x+y)^2*x", XY},          {"x^2*(y+1)^2*z^2", XYZ},  {"x^3 + y^2 + z^2", XYZ},
      {"x*y*z", XYZ},             {"x*y + z^2", XYZ},        {"x^3 + x*y^2 + z^2", XYZ},
      {"x^4", X},
  };
  for (const auto& [src, vars] : cases) {
    const SymbolPoly f = poly(src, vars);
    const auto ann = ann_fs(f, Layout::weyl(vars.size()));
    EXPECT_FALSE(ann.empty()) << src;
    for (const auto& p : ann) EXPECT_TRUE(apply_to_fs(p, f).numerator.is_zero()) << src;
  }
  EXPECT_THROW(ann_fs(SymbolPoly{}, Layout::weyl(1)), InputError);
  EXPECT_THROW(ann_fs(poly("s*x", X), Layout::weyl(1)), InputError);
}

TEST(Annihilator, ExampleMatchesKnownGenerators) {
  const Layout L = Layout::weyl(3);
  const SymbolPoly f = poly("x^2*(y+1)^2*z^2", XYZ);
  const auto ann = ann_fs(f, L);
  const std::vector<DiffOp> h = {op("-2*s + z*dz", XYZ), op("-x*dx + z*dz", XYZ),
                                 op("-dy + x*dx - y*dy", XYZ)};
  const MatrixOrder o = MatrixOrder::weyl_local(L);
  EXPECT_TRUE(mutually_reduce(buchberger_mora(ann).elements, buchberger_mora(h).elements, o));

  std::vector<DiffOp> gens = ann;
  gens.push_back(DiffOp(L, f));
  EXPECT_TRUE(mutually_reduce(buchberger_mora(gens).elements, example_g().elements, o));
}

TEST(DependencyKernel, Examples) {
  const std::vector<DiffOp> a = {op("x", XY), op("2*x", XY), op("y", XY)};
  const auto k = dependency_kernel(a, 5);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], q({"-2", "1", "0"}));

  const std::vector<DiffOp> b = {op("1", XYZ), op("1/2*z*dz", XYZ)};
  EXPECT_TRUE(dependency_kernel(b, 7).empty());
  // below degree 2 the second column vanishes
  EXPECT_EQ(dependency_kernel(b, 2), (std::vector<std::vector<Rational>>{q({"0", "1"})}));

  const std::vector<DiffOp> c = {op("x + x^3", X), op("x", X)};
  EXPECT_EQ(dependency_kernel(c, 3), (std::vector<std::vector<Rational>>{q({"-1", "1"})}));
  EXPECT_TRUE(dependency_kernel(c, 4).empty());
}

TEST(ApproximateNormalForm, ExamplePowersOfS) {
  const GroebnerBasis g = example_g();
  NFTable table(g);
  const char* expected[] = {
      "1",
      "1/2*z*dz",
      "1/4*z^2*dz^2 + 1/4*z*dz",
      "1/8*z^3*dz^3 + 3/8*z^2*dz^2 + 1/8*z*dz",
      "-3/8*z^3*dz^3 - 31/16*z^2*dz^2 - 31/16*z*dz - 1/4",
  };
  for (unsigned i = 0; i < 5; ++i) {
    const DiffOp& nf = table.get(i, 7);
    EXPECT_EQ(nf.symbol().truncated_below(7), op(expected[i], XYZ).symbol()) << i;
    EXPECT_EQ(nf, approx_nf(DiffOp::param(Layout::weyl(3), 0).pow(i), g, 7));
  }
  table.get(2, 7);
  EXPECT_EQ(table.size(), 5u);
}

TEST(FindGenerator, ExampleTrace) {
  const GeneratorResult r = find_generator(example_g(), 1, 64);
  EXPECT_EQ(r.b, q({"1/4", "3/2", "13/4", "3", "1"}));
  EXPECT_EQ(r.n_final, 7u);
  struct Step {
    unsigned n, degree;
    std::vector<Rational> cand;
    bool ok;
  };
  const std::vector<Step> expected = {
      {1, 0, {}, false},
      {1, 1, q({"0", "1"}), false},
      {2, 1, q({"0", "1"}), false},
      {3, 1, {}, false},
      {3, 2, q({"0", "-1/2", "1"}), false},
      {4, 2, q({"0", "-1/2", "1"}), false},
      {5, 2, {}, false},
      {5, 3, q({"0", "1/2", "-3/2", "1"}), false},
      {6, 3, q({"0", "1/2", "-3/2", "1"}), false},
      {7, 3, {}, false},
      {7, 4, q({"1/4", "3/2", "13/4", "3", "1"}), true},
  };
  ASSERT_EQ(r.trace.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(r.trace[i].n, expected[i].n) << i;
    EXPECT_EQ(r.trace[i].degree, expected[i].degree) << i;
    EXPECT_EQ(r.trace[i].candidate, expected[i].cand) << i;
    EXPECT_EQ(r.trace[i].accepted, expected[i].ok) << i;
  }
}

TEST(FindGenerator, ResourceLimit) {
  try {
    find_generator(example_g(), 1, 5);
    FAIL() << "expected ResourceLimitError";
  } catch (const ResourceLimitError& e) {
    EXPECT_EQ(e.last_n(), 5u);
    EXPECT_EQ(e.last_candidate(), (std::vector<std::string>{"0", "1/2", "-3/2", "1"}));
  }
  EXPECT_THROW(find_generator(example_g(), 0, 5), InputError);
}

TEST(RationalRoots, Examples) {
  const RootsResult a = rational_roots(q({"1/4", "3/2", "13/4", "3", "1"}));
  ASSERT_EQ(a.roots.size(), 2u);
  EXPECT_EQ(a.roots[0].root, Rational(-1));
  EXPECT_EQ(a.roots[0].multiplicity, 2u);
  EXPECT_EQ(a.roots[1].root, Rational(-1, 2));
  EXPECT_EQ(a.roots[1].multiplicity, 2u);
  EXPECT_EQ(a.cofactor, q({"1"}));

  const RootsResult b = rational_roots(q({"0", "-1", "0", "1"}));
  ASSERT_EQ(b.roots.size(), 3u);
  EXPECT_EQ(b.roots[0].root, Rational(-1));
  EXPECT_EQ(b.roots[1].root, Rational(0));
  EXPECT_EQ(b.roots[2].root, Rational(1));

  const RootsResult c = rational_roots(q({"2", "0", "1"}));
  EXPECT_TRUE(c.roots.empty());
  EXPECT_EQ(c.cofactor, q({"2", "0", "1"}));

  // (s+1)(s+5/6)(s+7/6)
  const RootsResult d = rational_roots(q({"35/36", "107/36", "3", "1"}));
  ASSERT_EQ(d.roots.size(), 3u);
  EXPECT_EQ(d.roots[0].root, Rational(-7, 6));
  EXPECT_EQ(d.roots[1].root, Rational(-1));
  EXPECT_EQ(d.roots[2].root, Rational(-5, 6));

  EXPECT_THROW(rational_roots(std::vector<Rational>{}), InputError);
}

TEST(LocalB, SmallExamples) {
  const BFunctionResult a = local_b_function(poly("x*(x+y+1)", XY), Layout::weyl(2));
  EXPECT_EQ(a.b, q({"1", "1"}));
  const BFunctionResult b = local_b_function(poly("x", X), Layout::weyl(1));
  EXPECT_EQ(b.b, q({"1", "1"}));
  const BFunctionResult c = local_b_function(poly("1 + x", X), Layout::weyl(1));
  EXPECT_EQ(c.b, q({"1"}));
  EXPECT_TRUE(c.certificate.remainder.is_zero());

  for (GbStrategy s : {GbStrategy::Mora, GbStrategy::Lazard}) {
    LocalBOptions o;
    o.gb = s;
    const BFunctionResult d = local_b_function(poly("x^2 + y^3", XY), Layout::weyl(2), o);
    EXPECT_EQ(d.b, q({"35/36", "107/36", "3", "1"}));
    EXPECT_EQ(d.gb_strategy, s);
  }
  EXPECT_THROW(local_b_function(SymbolPoly{}, Layout::weyl(1)), InputError);
  EXPECT_THROW(local_b_function(poly("x*dx", X), Layout::weyl(1)), InputError);
}

TEST(LocalB, ExampleWithCertificate) {
  const Layout L = Layout::weyl(3);
  const BFunctionResult r = local_b_function(poly("x^2*(y+1)^2*z^2", XYZ), L);
  EXPECT_EQ(r.b, q({"1/4", "3/2", "13/4", "3", "1"}));
  EXPECT_TRUE(r.certificate.remainder.is_zero());
  const DiffOp b = univariate_op(r.b, L);
  DiffOp rhs(L);
  for (std::size_t i = 0; i < r.basis.size(); ++i) rhs += r.certificate.quotients[i] * r.basis[i];
  EXPECT_EQ(r.certificate.unit * b, rhs);
  ASSERT_EQ(r.roots.roots.size(), 2u);
  EXPECT_EQ(r.roots.roots[0].multiplicity, 2u);

  // a caller-supplied annihilator is used as is
  LocalBOptions o;
  o.annihilator = {op("-2*s + z*dz", XYZ), op("-x*dx + z*dz", XYZ), op("-dy + x*dx - y*dy", XYZ)};
  o.n0 = 1;
  const BFunctionResult r2 = local_b_function(poly("x^2*(y+1)^2*z^2", XYZ), L, o);
  EXPECT_EQ(r2.b, r.b);
  EXPECT_EQ(r2.n_final, 7u);
  EXPECT_EQ(r2.annihilator.size(), 3u);
}

TEST(Annihilator, OneVariable) {
  const Layout L = Layout::weyl(1);
  const auto ann = ann_fs(poly("x", X), L);
  const GroebnerBasis gb = buchberger_mora(ann);
  EXPECT_TRUE(mora_div(op("x*dx - s", X), gb.elements, gb.order, false).remainder.is_zero());
}

TEST(DependencyKernel, ExampleTableRows) {
  const GroebnerBasis g = example_g();
  NFTable table(g);
  std::vector<DiffOp> nfs;
  for (unsigned i = 0; i < 4; ++i) nfs.push_back(table.get(i, 7));
  EXPECT_TRUE(dependency_kernel(nfs, 7).empty());
  nfs.push_back(table.get(4, 7));
  const auto k = dependency_kernel(nfs, 7);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], q({"1/4", "3/2", "13/4", "3", "1"}));

  const std::vector<DiffOp> single = {op("x*dx", X)};
  EXPECT_TRUE(dependency_kernel(single, 5).empty());
  EXPECT_TRUE(approx_nf(DiffOp(Layout::weyl(3)), g, 7).is_zero());
}

TEST(DependencyKernel, ShrinksAsNGrows) {
  // the kernel at N + 1 sits inside the kernel at N
  const GroebnerBasis g = example_g();
  NFTable table(g);
  for (unsigned d = 1; d <= 4; ++d)
    for (unsigned n = 1; n < 8; ++n) {
      std::vector<DiffOp> lo, hi;
      for (unsigned i = 0; i <= d; ++i) {
        lo.push_back(table.get(i, n));
        hi.push_back(table.get(i, n + 1));
      }
      const auto big = dependency_kernel(lo, n);
      for (const auto& v : dependency_kernel(hi, n + 1)) {
        DiffOp comb(Layout::weyl(3));
        for (std::size_t i = 0; i < v.size(); ++i) comb += lo[i].scaled(v[i]);
        EXPECT_TRUE(comb.symbol().truncated_below(n).is_zero()) << d << " " << n;
      }
      EXPECT_LE(dependency_kernel(hi, n + 1).size(), big.size());
    }
}

TEST(ApproximateNormalForm, AdditiveBelowN) {
  std::mt19937 rng(61);
  const GroebnerBasis g = example_g();
  const Layout L = Layout::weyl(3);
  std::uniform_int_distribution<unsigned> nd(2, 7);
  for (int it = 0; it < 40; ++it) {
    const DiffOp a = random_op(rng, L, 2, 1), b = random_op(rng, L, 2, 1);
    const unsigned n = nd(rng);
    const DiffOp diff = approx_nf(a + b, g, n) - approx_nf(a, g, n) - approx_nf(b, g, n);
    EXPECT_TRUE(in_degree_filtration(diff.symbol(), n));
  }
}

TEST(LocalB, DegreesOfQuasiHomogeneousFamily) {
  for (unsigned k = 1; k <= 7; ++k) {
    const std::string f = "x^" + std::to_string(k) + " + y^2 + z^2";
    const BFunctionResult r = local_b_function(poly(f, XYZ), Layout::weyl(3));
    EXPECT_EQ(r.b.size(), k + 1) << f;
    // roots -1 and -(1/k + 1/2 + 1/2 + j/k), j = 1..k-1
    ASSERT_EQ(r.roots.roots.size(), k) << f;
    EXPECT_EQ(r.roots.cofactor, q({"1"}));
    for (unsigned j = 1; j < k; ++j)
      EXPECT_EQ(r.roots.roots[k - 1 - j].root, -Rational(1) - make_rational(j, k)) << f;
  }
}

TEST(LocalB, DividesGlobal) {
  // global b of x(x+y+1) is (s+1)^2
  const BFunctionResult r = local_b_function(poly("x*(x+y+1)", XY), Layout::weyl(2));
  const RootsResult g = rational_roots(q({"1", "2", "1"}));
  for (const auto& rm : r.roots.roots) {
    bool found = false;
    for (const auto& gm : g.roots)
      if (gm.root == rm.root && gm.multiplicity >= rm.multiplicity) found = true;
    EXPECT_TRUE(found);
  }
  // and d_x f^(s+1) = (s+1)(1+2x+y) f^s, the unit being 1+2x+y
  EXPECT_TRUE(satisfies_functional_equation(op("dx", XY), poly("(s+1)*(1+2*x+y)", XY),
                                            poly("x^2 + x*y + x", XY)));
}
