#include "bfunc/staircase.hpp"

#include "bfunc/errors.hpp"

namespace bfunc {

StaircasePartition::StaircasePartition(std::vector<Exponent> leaders)
    : leaders_(std::move(leaders)) {
  if (leaders_.empty()) throw InputError("staircase partition needs at least one leader");
  for (const auto& l : leaders_) check_arity(l, leaders_.front().size());
}

std::optional<std::size_t> StaircasePartition::classify(const Exponent& a) const {
  check_arity(a, arity());
  for (std::size_t i = 0; i < leaders_.size(); ++i)
    if (leaders_[i].divides(a)) return i;
  return std::nullopt;
}

MonoDivision mono_div(const SymbolPoly& f, std::span<const Term> divisor_leads,
                      const StaircasePartition& partition) {
  if (divisor_leads.size() != partition.leaders().size())
    throw InputError("mono_div: partition does not match the divisor list");
  for (const auto& d : divisor_leads)
    if (sgn(d.coeff) == 0) throw InputError("mono_div: zero leading coefficient");

  std::vector<std::vector<Term>> q(divisor_leads.size());
  std::vector<Term> r;
  for (const auto& t : f.terms()) {
    if (auto i = partition.classify(t.exp)) {
      const Term& d = divisor_leads[*i];
      q[*i].push_back({t.exp - d.exp, t.coeff / d.coeff});
    } else {
      r.push_back(t);
    }
  }
  MonoDivision out;
  out.quotients.reserve(q.size());
  for (auto& terms : q) out.quotients.push_back(SymbolPoly::from_terms(std::move(terms)));
  out.remainder = SymbolPoly::from_terms(std::move(r));
  return out;
}

ApproxDivisionResult series_approx_div(const SymbolPoly& f, std::span<const SymbolPoly> divisors,
                                       const MatrixOrder& order, unsigned n) {
  if (divisors.empty()) throw InputError("series_approx_div: empty divisor list");
  if (order.rows().size() != 1 ||
      std::any_of(order.rows()[0].begin(), order.rows()[0].end(), [](int w) { return w != -1; }))
    throw InputError("series_approx_div: order must have the single weight row (-1, ..., -1)");

  std::vector<Term> leads;
  std::vector<SymbolPoly> rests;
  std::vector<Exponent> leaders;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw InputError("series_approx_div: zero divisor");
    const Term& t = g.leading_term(order);
    leads.push_back(t);
    leaders.push_back(t.exp);
    rests.push_back(g.rest(order));
  }
  const StaircasePartition partition(std::move(leaders));

  ApproxDivisionResult out;
  out.quotients.assign(divisors.size(), SymbolPoly{});
  out.degree_bound = n;
  SymbolPoly tail = f;
  // Under <_r the leading exponent of tail is one of minimal total degree.
  while (!tail.is_zero() && tail.min_total_degree() < n) {
    MonoDivision step = mono_div(tail, leads, partition);
    SymbolPoly next;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (step.quotients[i].is_zero()) continue;
      next -= step.quotients[i] * rests[i];
      out.quotients[i] += step.quotients[i];
    }
    out.remainder += step.remainder;
    tail = std::move(next);
  }
  out.tail = std::move(tail);
  return out;
}

}  // namespace bfunc
