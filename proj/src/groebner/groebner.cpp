#include "bfunc/groebner.hpp"

#include <algorithm>
#include <set>

#include "bfunc/errors.hpp"

namespace bfunc {

namespace {

void check_generators(std::span<const DiffOp> g, const char* who) {
  if (g.empty()) throw InputError(std::string(who) + ": empty generator list");
  for (const auto& x : g) {
    if (x.is_zero()) throw InputError(std::string(who) + ": zero generator");
    if (!(x.layout() == g.front().layout())) throw InputError(std::string(who) + ": layout mismatch");
  }
}

DiffOp monomial_op(const Layout& L, const Exponent& e, const Rational& c) {
  return DiffOp::monomial(L, e, c);
}

// h - c * x^e * g, computed with one Leibniz product.
void subtract_multiple(DiffOp& h, const Exponent& e, const Rational& c, const DiffOp& g) {
  h -= op_mul(monomial_op(g.layout(), e, c), g);
}

unsigned ecart(const SymbolPoly& f, const Exponent& lead) {
  return f.max_total_degree() - lead.total_degree();
}

DiffOp monic(const DiffOp& p, const MatrixOrder& order) {
  return p.scaled(Rational(1) / p.symbol().leading_term(order).coeff);
}

struct Reducer {
  DiffOp op;
  Exponent lead;
  Rational lc;
  unsigned ecart = 0;
  // Representation unit * P = sum q_i G_i + op; empty when not tracked.
  DiffOp unit;
  std::vector<DiffOp> q;
};

}  // namespace

MoraResult mora_div(const DiffOp& p, std::span<const DiffOp> g, const MatrixOrder& order,
                    bool track) {
  check_generators(g, "mora_div");
  const Layout L = g.front().layout();
  if (!p.is_zero() && !(p.layout() == L)) throw InputError("mora_div: layout mismatch");

  std::vector<Reducer> pool;
  pool.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Term& t = g[i].symbol().leading_term(order);
    Reducer r{g[i], t.exp, t.coeff, ecart(g[i].symbol(), t.exp), DiffOp(L), {}};
    if (track) {
      r.q.assign(g.size(), DiffOp(L));
      r.q[i] = DiffOp::constant(L, Rational(-1));
    }
    pool.push_back(std::move(r));
  }

  MoraResult out;
  DiffOp h = p.is_zero() ? DiffOp(L) : p;
  if (track) {
    out.unit = DiffOp::constant(L, Rational(1));
    out.quotients.assign(g.size(), DiffOp(L));
  }
  while (!h.is_zero()) {
    const Term lead = h.symbol().leading_term(order);
    const Reducer* best = nullptr;
    for (const auto& r : pool)
      if (r.lead.divides(lead.exp) && (!best || r.ecart < best->ecart)) best = &r;
    if (!best) break;
    const unsigned e_h = ecart(h.symbol(), lead.exp);
    const Exponent shift = lead.exp - best->lead;
    const Rational c = lead.coeff / best->lc;
    if (best->ecart > e_h) {
      // Keep the current partial remainder as a later reducer.
      const std::size_t idx = static_cast<std::size_t>(best - pool.data());
      Reducer r{h, lead.exp, lead.coeff, e_h, out.unit, out.quotients};
      pool.push_back(std::move(r));
      best = &pool[idx];
    }
    if (track) {
      const DiffOp m = monomial_op(L, shift, c);
      if (!best->unit.is_zero()) out.unit -= op_mul(m, best->unit);
      for (std::size_t i = 0; i < g.size(); ++i)
        if (!best->q[i].is_zero()) out.quotients[i] -= op_mul(m, best->q[i]);
    }
    subtract_multiple(h, shift, c, best->op);
  }
  out.remainder = std::move(h);
  return out;
}

MoraResult mora_div(const DiffOp& p, std::span<const DiffOp> g, TieOrder tie) {
  check_generators(g, "mora_div");
  return mora_div(p, g, MatrixOrder::weyl_local(g.front().layout(), tie), true);
}

DiffOp global_reduce(const DiffOp& p, std::span<const DiffOp> g, const MatrixOrder& order,
                     bool full) {
  if (p.is_zero()) return p;
  std::vector<Term> leads;
  for (const auto& x : g) leads.push_back(x.symbol().leading_term(order));
  DiffOp h = p;
  std::vector<Term> rem;
  while (!h.is_zero()) {
    const Term lead = h.symbol().leading_term(order);
    std::size_t i = 0;
    while (i < g.size() && !leads[i].exp.divides(lead.exp)) ++i;
    if (i < g.size()) {
      subtract_multiple(h, lead.exp - leads[i].exp, lead.coeff / leads[i].coeff, g[i]);
    } else if (full) {
      rem.push_back(lead);
      h -= DiffOp::monomial(h.layout(), lead.exp, lead.coeff);
    } else {
      break;
    }
  }
  if (rem.empty()) return h;
  return h + DiffOp(p.layout(), SymbolPoly::from_terms(std::move(rem)));
}

DiffOp spair(const DiffOp& p, const DiffOp& q, const MatrixOrder& order) {
  if (p.is_zero() || q.is_zero()) throw InputError("spair: zero argument");
  const Term& a = p.symbol().leading_term(order);
  const Term& b = q.symbol().leading_term(order);
  const Exponent l = a.exp.lcm(b.exp);
  DiffOp s = op_mul(monomial_op(p.layout(), l - a.exp, Rational(1) / a.coeff), p);
  s -= op_mul(monomial_op(q.layout(), l - b.exp, Rational(1) / b.coeff), q);
  return s;
}

GbStrategy parse_gb_strategy(std::string_view name) {
  if (name == "mora") return GbStrategy::Mora;
  if (name == "lazard") return GbStrategy::Lazard;
  throw InputError("unknown GB strategy '" + std::string(name) + "' (expected mora or lazard)");
}

std::string_view gb_strategy_name(GbStrategy s) {
  return s == GbStrategy::Mora ? "mora" : "lazard";
}

namespace {

// Drops elements whose leading exponent is a multiple of another's (the
// earlier one wins on equal exponents).
std::vector<DiffOp> minimalize(const std::vector<DiffOp>& g, const MatrixOrder& order) {
  std::vector<Exponent> leads;
  for (const auto& x : g) leads.push_back(x.symbol().leading_exponent(order));
  std::vector<DiffOp> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !leads[j].divides(leads[i])) continue;
      redundant = !(leads[i] == leads[j]) || j < i;
    }
    if (!redundant) out.push_back(g[i]);
  }
  return out;
}

struct Pair {
  std::size_t i, j;
  Exponent lcm;
};

// Buchberger skeleton shared by the local and global variants. `nf` maps an
// S-polynomial to a reduced element (zero or with a new leading monomial).
template <class NormalForm>
GroebnerBasis buchberger(std::span<const DiffOp> gens, const MatrixOrder& order,
                         const MatrixOrder& selection, NormalForm nf) {
  GroebnerBasis gb{{}, order, {}};
  std::vector<Exponent> leads;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;

  auto add = [&](DiffOp p) {
    p = monic(p, order);
    const std::size_t k = gb.elements.size();
    leads.push_back(p.symbol().leading_exponent(order));
    gb.elements.push_back(std::move(p));
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back({i, k, leads[i].lcm(leads[k])});
      open.insert({i, k});
    }
  };
  for (const auto& g : gens)
    if (!g.is_zero()) add(g);

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      const auto c = selection.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair pr = *it;
    pending.erase(it);
    open.erase({pr.i, pr.j});
    ++gb.stats.pairs_considered;

    bool chain = false;
    for (std::size_t k = 0; k < gb.elements.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || !leads[k].divides(pr.lcm)) continue;
      chain = !open.count({std::min(pr.i, k), std::max(pr.i, k)}) &&
              !open.count({std::min(pr.j, k), std::max(pr.j, k)});
    }
    if (chain) {
      ++gb.stats.pairs_skipped;
      continue;
    }
    DiffOp h = nf(spair(gb.elements[pr.i], gb.elements[pr.j], order), gb.elements);
    if (h.is_zero()) {
      ++gb.stats.reductions_to_zero;
      continue;
    }
    add(std::move(h));
  }
  return gb;
}

MatrixOrder tie_only(std::size_t arity, TieOrder tie) { return MatrixOrder(arity, {}, tie); }

}  // namespace

GroebnerBasis buchberger_mora(std::span<const DiffOp> gens, TieOrder tie) {
  check_generators(gens, "buchberger_mora");
  const Layout L = gens.front().layout();
  const MatrixOrder order = MatrixOrder::weyl_local(L, tie);
  GroebnerBasis gb = buchberger(gens, order, tie_only(L.size(), tie),
                                [&](const DiffOp& s, const std::vector<DiffOp>& g) {
                                  if (s.is_zero()) return s;
                                  return mora_div(s, g, order, false).remainder;
                                });
  gb.elements = minimalize(gb.elements, order);
  return gb;
}

GroebnerBasis global_gb(std::span<const DiffOp> gens, const MatrixOrder& order) {
  check_generators(gens, "global_gb");
  GroebnerBasis gb = buchberger(gens, order, order,
                                [&](const DiffOp& s, const std::vector<DiffOp>& g) {
                                  return global_reduce(s, g, order, true);
                                });
  std::vector<DiffOp> basis = minimalize(gb.elements, order);
  // Tail reduction against the other elements.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<DiffOp> others;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) others.push_back(basis[j]);
    const Term lead = basis[i].symbol().leading_term(order);
    const DiffOp lt = DiffOp::monomial(basis[i].layout(), lead.exp, lead.coeff);
    basis[i] = monic(lt + global_reduce(basis[i] - lt, others, order, true), order);
  }
  gb.elements = std::move(basis);
  return gb;
}

namespace {

Layout homogenized_layout(const Layout& L) {
  if (L.homogenizer >= 0) throw InputError("lazard_gb: layout is already homogenized");
  return Layout{L.pairs, L.params + 1, static_cast<int>(L.params)};
}

// Slot map from L into the homogenized layout H (h sits after the params).
Exponent lift(const Exponent& e, const Layout& L, const Layout& H) {
  Exponent out(H.size());
  for (unsigned i = 0; i < L.pairs; ++i) {
    out.set(H.x(i), e[L.x(i)]);
    out.set(H.xi(i), e[L.xi(i)]);
  }
  for (unsigned j = 0; j < L.params; ++j) out.set(H.param(j), e[L.param(j)]);
  return out;
}

Exponent drop(const Exponent& e, const Layout& L, const Layout& H) {
  Exponent out(L.size());
  for (unsigned i = 0; i < L.pairs; ++i) {
    out.set(L.x(i), e[H.x(i)]);
    out.set(L.xi(i), e[H.xi(i)]);
  }
  for (unsigned j = 0; j < L.params; ++j) out.set(L.param(j), e[H.param(j)]);
  return out;
}

DiffOp homogenize(const DiffOp& p, const Layout& H) {
  const unsigned d = p.symbol().max_total_degree();
  const unsigned h = H.param(static_cast<unsigned>(H.homogenizer));
  std::vector<Term> terms;
  for (const auto& t : p.symbol().terms()) {
    Exponent e = lift(t.exp, p.layout(), H);
    e.set(h, d - t.exp.total_degree());
    terms.push_back({std::move(e), t.coeff});
  }
  return DiffOp(H, SymbolPoly::from_terms(std::move(terms)));
}

DiffOp dehomogenize(const DiffOp& p, const Layout& L) {
  std::vector<Term> terms;
  for (const auto& t : p.symbol().terms()) terms.push_back({drop(t.exp, L, p.layout()), t.coeff});
  return DiffOp(L, SymbolPoly::from_terms(std::move(terms)));
}

}  // namespace

GroebnerBasis lazard_gb(std::span<const DiffOp> gens, TieOrder tie) {
  check_generators(gens, "lazard_gb");
  const Layout L = gens.front().layout();
  const Layout H = homogenized_layout(L);
  std::vector<DiffOp> hgens;
  for (const auto& g : gens) hgens.push_back(homogenize(g, H));
  const GroebnerBasis hgb = global_gb(hgens, MatrixOrder::homogenized(H, tie));

  const MatrixOrder order = MatrixOrder::weyl_local(L, tie);
  std::vector<DiffOp> basis;
  for (const auto& g : hgb.elements) {
    DiffOp d = dehomogenize(g, L);
    if (!d.is_zero()) basis.push_back(monic(d, order));
  }
  return {minimalize(basis, order), order, hgb.stats};
}

GroebnerBasis standard_basis(std::span<const DiffOp> gens, GbStrategy strategy, TieOrder tie) {
  return strategy == GbStrategy::Mora ? buchberger_mora(gens, tie) : lazard_gb(gens, tie);
}

bool mutually_reduce(std::span<const DiffOp> a, std::span<const DiffOp> b, const MatrixOrder& order) {
  for (const auto& p : a)
    if (!mora_div(p, b, order, false).remainder.is_zero()) return false;
  for (const auto& p : b)
    if (!mora_div(p, a, order, false).remainder.is_zero()) return false;
  return true;
}

}  // namespace bfunc
