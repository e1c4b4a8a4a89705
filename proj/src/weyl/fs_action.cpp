#include "bfunc/fs_action.hpp"

#include <map>

#include "bfunc/errors.hpp"

namespace bfunc {

namespace {

void check_base(const Layout& L, const SymbolPoly& f) {
  if (L.params != 1 || L.homogenizer >= 0)
    throw InputError("apply_to_fs: expects the main session layout (single parameter s)");
  if (f.is_zero()) throw InputError("apply_to_fs: f must be nonzero");
  for (const auto& t : f.terms()) {
    check_arity(t.exp, L.size());
    for (unsigned slot = L.pairs; slot < L.size(); ++slot)
      if (t.exp[slot] != 0) throw InputError("apply_to_fs: f must be a polynomial in x only");
  }
}

class DerivativeTable {
public:
  DerivativeTable(const Layout& L, const SymbolPoly& f, long shift) : L_(L), f_(f), shift_(shift) {
    for (unsigned i = 0; i < L.pairs; ++i) partials_.push_back(f.derivative(L.x(i)));
  }

  // d^beta applied to f^(s+shift); beta is read from the xi slots of `e`.
  const FsAction& get(const Exponent& e) {
    Exponent beta(L_.size());
    for (unsigned i = 0; i < L_.pairs; ++i) beta.set(L_.xi(i), e[L_.xi(i)]);
    return lookup(beta);
  }

private:
  const FsAction& lookup(const Exponent& beta) {
    if (auto it = memo_.find(beta); it != memo_.end()) return it->second;
    FsAction result;
    if (beta.is_zero()) {
      result.numerator = SymbolPoly::constant(L_.size(), Rational(1));
    } else {
      unsigned i = 0;
      while (beta[L_.xi(i)] == 0) ++i;
      Exponent prev = beta;
      prev.set(L_.xi(i), beta[L_.xi(i)] - 1);
      const FsAction g = lookup(prev);
      const long k = g.denom_power;
      SymbolPoly factor = SymbolPoly::variable(L_.size(), L_.param(0)) +
                          SymbolPoly::constant(L_.size(), Rational(shift_ - k));
      result.numerator = g.numerator.derivative(L_.x(i)) * f_ + factor * g.numerator * partials_[i];
      result.denom_power = g.denom_power + 1;
    }
    return memo_.emplace(beta, std::move(result)).first->second;
  }

  Layout L_;
  const SymbolPoly& f_;
  long shift_;
  std::vector<SymbolPoly> partials_;
  std::map<Exponent, FsAction> memo_;
};

}  // namespace

FsAction apply_to_fs(const DiffOp& p, const SymbolPoly& f, long shift) {
  const Layout& L = p.layout();
  check_base(L, f);
  if (p.is_zero()) return {};
  DerivativeTable table(L, f, shift);

  struct Piece {
    SymbolPoly numerator;
    unsigned k;
  };
  std::vector<Piece> pieces;
  unsigned kmax = 0;
  for (const auto& t : p.symbol().terms()) {
    const FsAction& base = table.get(t.exp);
    Exponent coeff_part(L.size());
    for (unsigned slot = 0; slot < L.pairs + L.params; ++slot) coeff_part.set(slot, t.exp[slot]);
    pieces.push_back({base.numerator.mul_term(coeff_part, t.coeff), base.denom_power});
    kmax = std::max(kmax, base.denom_power);
  }
  FsAction out;
  out.denom_power = kmax;
  for (const auto& piece : pieces)
    out.numerator += piece.numerator * f.pow(kmax - piece.k, L.size());
  if (out.numerator.is_zero()) out.denom_power = 0;
  return out;
}

bool same_action(const FsAction& a, const FsAction& b, const SymbolPoly& f) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const std::size_t arity = a.numerator.terms().front().exp.size();
  return a.numerator * f.pow(b.denom_power, arity) == b.numerator * f.pow(a.denom_power, arity);
}

bool satisfies_functional_equation(const DiffOp& p, const SymbolPoly& b, const SymbolPoly& f) {
  const FsAction lhs = apply_to_fs(p, f, 1);
  // lhs is (num / f^k) f^(s+1) = (num / f^(k-1)) f^s; compare num * f with b * f^k.
  if (lhs.is_zero()) return b.is_zero();
  const std::size_t arity = p.layout().size();
  return lhs.numerator * f == b * f.pow(lhs.denom_power, arity);
}

}  // namespace bfunc
