#include "bfunc/dhat_division.hpp"

#include <numeric>

#include "bfunc/errors.hpp"
#include "bfunc/staircase.hpp"

namespace bfunc {

namespace {

void check_divisors(std::span<const DiffOp> divisors) {
  if (divisors.empty()) throw InputError("empty divisor list");
  for (const auto& d : divisors)
    if (d.is_zero()) throw InputError("zero divisor");
}

}  // namespace

std::vector<unsigned> mk_schedule(std::span<const DiffOp> divisors, unsigned m0, TieOrder tie) {
  check_divisors(divisors);
  const MatrixOrder order = MatrixOrder::weyl_local(divisors.front().layout(), tie);
  std::vector<unsigned> orders, lead_degrees;
  for (const auto& d : divisors) {
    orders.push_back(ord_e(d));
    lead_degrees.push_back(d.symbol().leading_exponent(order).total_degree());
  }
  std::vector<unsigned> m(m0 + 1, 0);
  for (unsigned k = 0; k <= m0; ++k)
    for (std::size_t i = 0; i < divisors.size(); ++i)
      if (k >= orders[i]) m[k] = std::max(m[k], lead_degrees[i] + 2 * (k - orders[i]));
  return m;
}

DhatDivisionResult dhat_approx_div(const DiffOp& p, std::span<const DiffOp> divisors, unsigned n,
                                   TieOrder tie) {
  check_divisors(divisors);
  if (n == 0) throw InputError("dhat_approx_div: N must be positive");
  const Layout& L = divisors.front().layout();
  for (const auto& d : divisors)
    if (!(d.layout() == L)) throw InputError("dhat_approx_div: layout mismatch");
  if (!p.is_zero() && !(p.layout() == L)) throw InputError("dhat_approx_div: layout mismatch");

  DhatDivisionResult out;
  out.requested_n = n;
  out.quotients.assign(divisors.size(), DiffOp(L));
  out.remainder = p.is_zero() ? DiffOp(L) : p;
  if (p.is_zero()) {
    out.initial_bound = n;
    return out;
  }

  const unsigned m0 = ord_e(p);
  const std::vector<unsigned> m = mk_schedule(divisors, m0, tie);
  unsigned bound = n + std::accumulate(m.begin(), m.end(), 0u);
  out.initial_bound = bound;

  const MatrixOrder series = MatrixOrder::series_local(L, tie);
  std::vector<SymbolPoly> initials;
  for (const auto& d : divisors) initials.push_back(in_e(d));

  for (unsigned k = m0 + 1; k-- > 0;) {
    out.bound_schedule.push_back({k, m[k], bound});
    const SymbolPoly level = e_part(out.remainder, k, bound);
    if (!level.is_zero()) {
      ApproxDivisionResult step = series_approx_div(level, initials, series, bound);
      for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (step.quotients[i].is_zero()) continue;
        DiffOp q = from_symbol(L, std::move(step.quotients[i]));
        out.remainder -= op_mul(q, divisors[i]);
        out.quotients[i] += q;
      }
    }
    bound -= m[k];
  }
  return out;
}

}  // namespace bfunc
