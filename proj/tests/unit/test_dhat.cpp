#include <gtest/gtest.h>

#include <random>

#include "bfunc/dhat_division.hpp"
#include "bfunc/errors.hpp"
#include "bfunc/staircase.hpp"
#include "support/helpers.hpp"

using namespace bfunc;
using namespace bfunc::testing;

namespace {

const auto X = vars_of({"x"});

}  // namespace

TEST(DhatDivision, WorkedExample) {
  const std::vector<DiffOp> divisors = {op("(1+x)*dx + x", X)};
  const DhatDivisionResult r = dhat_approx_div(op("dx^2", X), divisors, 5);
  EXPECT_EQ(r.quotients[0], op("(1-x+x^2-x^3+x^4-x^5+x^6)*dx + (-1+x-x^2+x^3-x^4)", X));
  EXPECT_EQ(r.remainder,
            op("-x^7*dx^2 - x^7*dx + x^5*dx - 1 + 2*x - 2*x^2 + 2*x^3 - 2*x^4 + 2*x^5 - x^6", X));
  EXPECT_EQ(r.initial_bound, 9u);
  ASSERT_EQ(r.bound_schedule.size(), 3u);
  EXPECT_EQ(r.bound_schedule[0].k, 2u);
  EXPECT_EQ(r.bound_schedule[0].m_k, 3u);
  EXPECT_EQ(r.bound_schedule[0].bound_before, 9u);
  EXPECT_EQ(r.bound_schedule[1].m_k, 1u);
  EXPECT_EQ(r.bound_schedule[1].bound_before, 6u);
  EXPECT_EQ(r.bound_schedule[2].m_k, 0u);
  EXPECT_EQ(r.bound_schedule[2].bound_before, 5u);
  EXPECT_EQ(mk_schedule(divisors, 2), (std::vector<unsigned>{0, 1, 3}));
}

TEST(DhatDivision, Schedules) {
  const std::vector<DiffOp> one = {op("1", X)};
  EXPECT_EQ(mk_schedule(one, 3), (std::vector<unsigned>{0, 2, 4, 6}));
  const std::vector<DiffOp> high = {op("dx^3", X)};
  EXPECT_EQ(mk_schedule(high, 1), (std::vector<unsigned>{0, 0}));
  EXPECT_THROW(mk_schedule(std::vector<DiffOp>{}, 1), InputError);
}

TEST(DhatDivision, TrivialCases) {
  const DiffOp p1 = op("(1+x)*dx + x", X);
  const std::vector<DiffOp> self = {p1};
  // Whole-polynomial steps leave a quotient 1 +- x^k past the guaranteed
  // prefix, as in the commutative (1+x)/(1+x) case.
  for (unsigned n : {1u, 4u, 9u}) {
    const DhatDivisionResult r = dhat_approx_div(p1, self, n);
    EXPECT_EQ(r.quotients[0].symbol().truncated_below(n - 1), n > 1 ? poly("1", X) : SymbolPoly{});
    EXPECT_TRUE(r.remainder.symbol().truncated_below(n).is_zero());
    EXPECT_EQ(r.quotients[0] * p1 + r.remainder, p1);
  }
  const std::vector<DiffOp> d = {op("dx", X)};
  const DhatDivisionResult r = dhat_approx_div(op("x*dx", X), d, 3);
  EXPECT_EQ(r.quotients[0], op("x", X));
  EXPECT_TRUE(r.remainder.is_zero());

  EXPECT_THROW(dhat_approx_div(op("x", X), d, 0), InputError);
  const std::vector<DiffOp> zero = {DiffOp(Layout::weyl(1))};
  EXPECT_THROW(dhat_approx_div(op("x", X), zero, 3), InputError);
  EXPECT_TRUE(dhat_approx_div(DiffOp(Layout::weyl(1)), d, 3).remainder.is_zero());
}

namespace {

struct RandomCase {
  DiffOp p;
  std::vector<DiffOp> divisors;
};

RandomCase random_case(std::mt19937& rng, const Layout& L) {
  std::uniform_int_distribution<unsigned> count(1, 2), terms(1, 3);
  RandomCase c{random_op(rng, L, terms(rng) + 1, 2), {}};
  for (unsigned j = count(rng); j > 0; --j) {
    DiffOp g(L);
    while (g.is_zero()) g = random_op(rng, L, terms(rng), 2);
    c.divisors.push_back(g);
  }
  return c;
}

}  // namespace

TEST(DhatDivision, IdentityAndStaircaseOnRandomInputs) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<unsigned> nd(1, 5);
  for (unsigned n_vars : {1u, 2u}) {
    const Layout L = Layout::weyl(n_vars);
    const MatrixOrder lt = MatrixOrder::weyl_local(L), r = MatrixOrder::series_local(L);
    for (int it = 0; it < 120; ++it) {
      const RandomCase c = random_case(rng, L);
      const unsigned n = nd(rng);
      const DhatDivisionResult res = dhat_approx_div(c.p, c.divisors, n);
      DiffOp check = c.p - res.remainder;
      for (std::size_t i = 0; i < c.divisors.size(); ++i) check -= res.quotients[i] * c.divisors[i];
      EXPECT_TRUE(check.is_zero());

      std::vector<Exponent> leaders;
      for (const auto& g : c.divisors) {
        leaders.push_back(le(g.symbol(), lt));
        EXPECT_EQ(le(in_e(g), r), leaders.back());
      }
      const StaircasePartition part(leaders);
      for (const auto& t : res.remainder.symbol().terms())
        if (t.exp.total_degree() < n) EXPECT_EQ(part.classify(t.exp), std::nullopt);
    }
  }
}

TEST(DhatDivision, TruncationAgreementAcrossN) {
  std::mt19937 rng(43);
  std::uniform_int_distribution<unsigned> nd(1, 5);
  for (unsigned n_vars : {1u, 2u}) {
    const Layout L = Layout::weyl(n_vars);
    const MatrixOrder lt = MatrixOrder::weyl_local(L);
    for (int it = 0; it < 120; ++it) {
      const RandomCase c = random_case(rng, L);
      const unsigned n = nd(rng);
      const DhatDivisionResult a = dhat_approx_div(c.p, c.divisors, n);
      const DhatDivisionResult b = dhat_approx_div(c.p, c.divisors, n + 3);
      EXPECT_EQ(a.remainder.symbol().truncated_below(n), b.remainder.symbol().truncated_below(n));
      for (std::size_t i = 0; i < c.divisors.size(); ++i) {
        const unsigned lead = le(c.divisors[i].symbol(), lt).total_degree();
        if (lead >= n) continue;
        EXPECT_EQ(a.quotients[i].symbol().truncated_below(n - lead),
                  b.quotients[i].symbol().truncated_below(n - lead));
      }
    }
  }
}
