#include "bfunc/diffop.hpp"

#include "bfunc/errors.hpp"

namespace bfunc {

unsigned e_weight(const Layout& layout, const Exponent& e) {
  unsigned w = 0;
  for (unsigned j = 0; j < layout.params; ++j)
    if (static_cast<int>(j) != layout.homogenizer) w += e[layout.param(j)];
  for (unsigned i = 0; i < layout.pairs; ++i) w += e[layout.xi(i)];
  return w;
}

DiffOp::DiffOp(Layout layout, SymbolPoly symbol) : layout_(layout), symbol_(std::move(symbol)) {
  for (const auto& t : symbol_.terms()) check_arity(t.exp, layout_.size());
}

DiffOp DiffOp::constant(Layout layout, const Rational& c) {
  return DiffOp(layout, SymbolPoly::constant(layout.size(), c));
}

DiffOp DiffOp::monomial(Layout layout, Exponent e, Rational c) {
  return DiffOp(layout, SymbolPoly::monomial(std::move(e), std::move(c)));
}

DiffOp DiffOp::x(Layout layout, unsigned i) {
  return DiffOp(layout, SymbolPoly::variable(layout.size(), layout.x(i)));
}

DiffOp DiffOp::d(Layout layout, unsigned i) {
  return DiffOp(layout, SymbolPoly::variable(layout.size(), layout.xi(i)));
}

DiffOp DiffOp::param(Layout layout, unsigned j) {
  return DiffOp(layout, SymbolPoly::variable(layout.size(), layout.param(j)));
}

DiffOp& DiffOp::operator+=(const DiffOp& other) {
  if (!other.is_zero() && is_zero()) layout_ = other.layout_;
  else if (!other.is_zero() && !(layout_ == other.layout_)) throw InputError("layout mismatch");
  symbol_ += other.symbol_;
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& other) {
  if (!other.is_zero() && is_zero()) layout_ = other.layout_;
  else if (!other.is_zero() && !(layout_ == other.layout_)) throw InputError("layout mismatch");
  symbol_ -= other.symbol_;
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) { return op_mul(a, b); }

DiffOp DiffOp::pow(unsigned k) const {
  DiffOp result = constant(layout_, Rational(1));
  for (unsigned i = 0; i < k; ++i) result = op_mul(result, *this);
  return result;
}

namespace {

// beta! gamma! / ((beta-nu)! (gamma-nu)! nu!) = C(beta,nu) C(gamma,nu) nu!
Integer leibniz_factor(unsigned beta, unsigned gamma, unsigned nu) {
  Integer b, g, f;
  mpz_bin_uiui(b.get_mpz_t(), beta, nu);
  mpz_bin_uiui(g.get_mpz_t(), gamma, nu);
  mpz_fac_ui(f.get_mpz_t(), nu);
  return b * g * f;
}

}  // namespace

DiffOp op_mul(const DiffOp& p, const DiffOp& q) {
  if (p.is_zero() || q.is_zero()) return DiffOp(p.is_zero() ? q.layout() : p.layout());
  if (!(p.layout() == q.layout())) throw InputError("op_mul: layout mismatch");
  const Layout& L = p.layout();
  const unsigned n = L.pairs;
  const int h = L.homogenizer < 0 ? -1 : static_cast<int>(L.param(L.homogenizer));

  std::vector<Term> acc;
  acc.reserve(p.symbol().term_count() * q.symbol().term_count());
  std::vector<unsigned> top(n), nu(n);
  for (const auto& tp : p.symbol().terms()) {
    for (const auto& tq : q.symbol().terms()) {
      const Exponent base = tp.exp + tq.exp;
      Rational c0 = tp.coeff * tq.coeff;
      bool overlap = false;
      for (unsigned i = 0; i < n; ++i) {
        top[i] = std::min(tp.exp[L.xi(i)], tq.exp[L.x(i)]);
        overlap |= top[i] > 0;
      }
      if (!overlap) {
        acc.push_back({base, std::move(c0)});
        continue;
      }
      std::fill(nu.begin(), nu.end(), 0u);
      while (true) {
        Integer factor(1);
        Exponent e = base;
        unsigned shift = 0;
        for (unsigned i = 0; i < n; ++i) {
          if (nu[i] == 0) continue;
          factor *= leibniz_factor(tp.exp[L.xi(i)], tq.exp[L.x(i)], nu[i]);
          e.set(L.x(i), e[L.x(i)] - nu[i]);
          e.set(L.xi(i), e[L.xi(i)] - nu[i]);
          shift += nu[i];
        }
        if (h >= 0) e.add_to(static_cast<unsigned>(h), 2 * shift);
        acc.push_back({std::move(e), c0 * factor});
        unsigned i = 0;
        while (i < n && nu[i] == top[i]) nu[i++] = 0;
        if (i == n) break;
        ++nu[i];
      }
    }
  }
  return DiffOp(L, SymbolPoly::from_terms(std::move(acc)));
}

unsigned ord_e(const DiffOp& p) {
  if (p.is_zero()) throw UndefinedLeadingTermError();
  unsigned m = 0;
  for (const auto& t : p.symbol().terms()) m = std::max(m, e_weight(p.layout(), t.exp));
  return m;
}

SymbolPoly in_e(const DiffOp& p) {
  return e_part(p, ord_e(p));
}

SymbolPoly e_part(const DiffOp& p, unsigned k, unsigned bound) {
  return p.symbol().filtered([&](const Term& t) {
    return e_weight(p.layout(), t.exp) == k && t.exp.total_degree() < bound;
  });
}

}  // namespace bfunc
