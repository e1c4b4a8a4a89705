#include "bfunc/poly.hpp"

#include <algorithm>

#include "bfunc/errors.hpp"

namespace bfunc {

void normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].exp == terms[i].exp) sum += terms[j++].coeff;
    if (sgn(sum) != 0) {
      if (out != i) terms[out].exp = terms[i].exp;
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

SymbolPoly SymbolPoly::constant(std::size_t arity, const Rational& c) {
  return monomial(Exponent(arity), c);
}

SymbolPoly SymbolPoly::monomial(Exponent e, Rational c) {
  SymbolPoly p;
  if (sgn(c) != 0) p.terms_.push_back({std::move(e), std::move(c)});
  return p;
}

SymbolPoly SymbolPoly::variable(std::size_t arity, std::size_t slot) {
  Exponent e(arity);
  e.set(slot, 1);
  return monomial(e);
}

SymbolPoly SymbolPoly::from_terms(std::vector<Term> terms) {
  SymbolPoly p;
  normalize_terms(terms);
  p.terms_ = std::move(terms);
  return p;
}

Rational SymbolPoly::coefficient(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return Rational(0);
}

SymbolPoly SymbolPoly::operator-() const {
  SymbolPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <bool Subtract>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back(b[j++]);
      if constexpr (Subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = Subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge<false>(terms_, other.terms_);
  return *this;
}

SymbolPoly& SymbolPoly::operator-=(const SymbolPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge<true>(terms_, other.terms_);
  return *this;
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
  std::vector<Term> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc.push_back({s.exp + t.exp, s.coeff * t.coeff});
  return SymbolPoly::from_terms(std::move(acc));
}

SymbolPoly SymbolPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  SymbolPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

SymbolPoly SymbolPoly::mul_term(const Exponent& e, const Rational& c) const {
  if (sgn(c) == 0) return {};
  SymbolPoly r;
  r.terms_.reserve(terms_.size());
  // Shifting by a fixed exponent preserves the raw lexicographic order.
  for (const auto& t : terms_) r.terms_.push_back({t.exp + e, t.coeff * c});
  return r;
}

SymbolPoly SymbolPoly::pow(unsigned k, std::size_t arity) const {
  SymbolPoly result = constant(arity, Rational(1)), base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

bool operator==(const SymbolPoly& a, const SymbolPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].exp == b.terms_[i].exp) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

const Term& SymbolPoly::leading_term(const MatrixOrder& order) const {
  if (terms_.empty()) throw UndefinedLeadingTermError();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.greater(t.exp, best->exp)) best = &t;
  return *best;
}

SymbolPoly SymbolPoly::rest(const MatrixOrder& order) const {
  if (terms_.empty()) return {};
  const Exponent lead = leading_exponent(order);
  return filtered([&](const Term& t) { return !(t.exp == lead); });
}

std::vector<Exponent> SymbolPoly::exps() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.exp);
  return out;
}

unsigned SymbolPoly::min_total_degree() const {
  unsigned d = kInfiniteDegree;
  for (const auto& t : terms_) d = std::min(d, t.exp.total_degree());
  return d;
}

unsigned SymbolPoly::max_total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp.total_degree());
  return d;
}

SymbolPoly SymbolPoly::truncated_below(unsigned degree) const {
  return filtered([degree](const Term& t) { return t.exp.total_degree() < degree; });
}

SymbolPoly SymbolPoly::derivative(std::size_t slot) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned k = t.exp[slot];
    if (k == 0) continue;
    Exponent e = t.exp;
    e.set(slot, k - 1);
    out.push_back({e, t.coeff * k});
  }
  SymbolPoly r;
  r.terms_ = std::move(out);  // lowering one slot keeps distinct exponents sorted
  return r;
}

SymbolPoly SymbolPoly::shifted(std::size_t slot, const Rational& c) const {
  if (terms_.empty()) return {};
  const std::size_t arity = terms_.front().exp.size();
  SymbolPoly v = variable(arity, slot) + constant(arity, c);
  return substituted(slot, v, arity);
}

SymbolPoly SymbolPoly::substituted(std::size_t slot, const SymbolPoly& value,
                                   std::size_t arity) const {
  unsigned top = 0;
  for (const auto& t : terms_) top = std::max(top, t.exp[slot]);
  std::vector<SymbolPoly> powers{constant(arity, Rational(1))};
  for (unsigned k = 1; k <= top; ++k) powers.push_back(powers.back() * value);
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Exponent e = t.exp;
    const unsigned k = e[slot];
    e.set(slot, 0);
    for (const auto& p : powers[k].terms_) acc.push_back({e + p.exp, t.coeff * p.coeff});
  }
  return from_terms(std::move(acc));
}

std::vector<Term> SymbolPoly::sorted_terms(const MatrixOrder& order) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.exp, b.exp); });
  return out;
}

}  // namespace bfunc
