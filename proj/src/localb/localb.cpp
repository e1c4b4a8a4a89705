#include "bfunc/localb.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "bfunc/dhat_division.hpp"
#include "bfunc/errors.hpp"

namespace bfunc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_f(const SymbolPoly& f, const Layout& L) {
  if (f.is_zero()) throw InputError("f must be nonzero");
  for (const auto& t : f.terms()) {
    check_arity(t.exp, L.size());
    for (unsigned k = L.pairs; k < L.size(); ++k)
      if (t.exp[k] != 0) throw InputError("f must be a polynomial in the x variables only");
  }
}

// x-only polynomial of the main layout, moved into the auxiliary layout.
SymbolPoly lift_x(const SymbolPoly& f, const Layout& A) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Exponent e(A.size());
    for (unsigned i = 0; i < A.pairs - 1; ++i) e.set(A.x(i), t.exp[i]);
    out.push_back({e, t.coeff});
  }
  return SymbolPoly::from_terms(std::move(out));
}

// prod_{j<c} (-s-1-j) in the main layout
SymbolPoly theta_falling(unsigned c, const Layout& L) {
  const std::size_t k = L.size();
  SymbolPoly r = SymbolPoly::constant(k, Rational(1));
  const SymbolPoly s = SymbolPoly::variable(k, L.param(0));
  for (unsigned j = 0; j < c; ++j)
    r = r * (-s - SymbolPoly::constant(k, Rational(1 + j)));
  return r;
}

// Weight-zero element of D<t, dt> (no u, v) to D[s].
DiffOp to_s(const DiffOp& p, const Layout& A, const Layout& L) {
  const unsigned n = L.pairs, t = A.x(n), dt = A.xi(n);
  SymbolPoly out;
  std::map<unsigned, SymbolPoly> cache;
  for (const auto& term : p.symbol().terms()) {
    const unsigned c = term.exp[t];
    if (term.exp[dt] != c) throw std::logic_error("annihilator element is not t-homogeneous");
    Exponent e(L.size());
    for (unsigned i = 0; i < n; ++i) {
      e.set(L.x(i), term.exp[A.x(i)]);
      e.set(L.xi(i), term.exp[A.xi(i)]);
    }
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, theta_falling(c, L)).first;
    out += it->second.mul_term(e, term.coeff);
  }
  return DiffOp(L, out);
}

std::vector<Rational> normalized_last(std::vector<Rational> v) {
  const Rational last = v.back();
  for (auto& c : v) c /= last;
  return v;
}

std::vector<std::string> as_text(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

}  // namespace

std::vector<DiffOp> ann_fs(const SymbolPoly& f, const Layout& L, TieOrder tie) {
  check_f(f, L);
  if (L.params != 1 || L.homogenizer >= 0) throw InputError("ann_fs expects the main layout");
  const unsigned n = L.pairs;
  const Layout A{n + 1, 2, -1};
  const DiffOp u = DiffOp::param(A, 0), v = DiffOp::param(A, 1);
  const DiffOp dt = DiffOp::d(A, n);
  const DiffOp F(A, lift_x(f, A));

  std::vector<DiffOp> gens;
  gens.push_back(DiffOp::x(A, n) - u * F);
  for (unsigned i = 0; i < n; ++i) {
    const DiffOp fi(A, lift_x(f.derivative(L.x(i)), A));
    gens.push_back(DiffOp::d(A, i) + u * fi * dt);
  }
  gens.push_back(u * v - DiffOp::constant(A, Rational(1)));

  const GroebnerBasis gb = global_gb(gens, MatrixOrder::eliminate_params(A, tie));

  std::vector<DiffOp> out;
  for (const auto& g : gb.elements) {
    bool has_uv = false;
    for (const auto& t : g.symbol().terms())
      if (t.exp[A.param(0)] != 0 || t.exp[A.param(1)] != 0) has_uv = true;
    if (has_uv) continue;
    // Split by weight a - b of t^a dt^b; the ideal is homogeneous, so each
    // component lies in it.
    std::map<long, SymbolPoly> parts;
    for (const auto& t : g.symbol().terms()) {
      const long w = long(t.exp[A.x(n)]) - long(t.exp[A.xi(n)]);
      parts[w] += SymbolPoly::monomial(t.exp, t.coeff);
    }
    for (const auto& [w, sym] : parts) {
      DiffOp part(A, sym);
      if (w > 0) part = dt.pow(unsigned(w)) * part;
      else if (w < 0) part = DiffOp::x(A, n).pow(unsigned(-w)) * part;
      DiffOp conv = to_s(part, A, L);
      if (conv.is_zero()) continue;
      const Rational lc = conv.symbol().leading_term(MatrixOrder::weyl_local(L, tie)).coeff;
      conv = conv.scaled(1 / lc);
      if (std::find(out.begin(), out.end(), conv) == out.end()) out.push_back(std::move(conv));
    }
  }
  return out;
}

DiffOp approx_nf(const DiffOp& p, const GroebnerBasis& g, unsigned n) {
  return dhat_approx_div(p, g.elements, n, g.order.tie()).remainder;
}

std::vector<std::vector<Rational>> dependency_kernel(std::span<const DiffOp> nfs, unsigned n) {
  const std::size_t cols = nfs.size();
  std::map<Exponent, std::size_t> row_of;
  for (const auto& p : nfs)
    for (const auto& t : p.symbol().terms())
      if (t.exp.total_degree() < n) row_of.emplace(t.exp, 0);
  std::size_t r = 0;
  for (auto& [e, idx] : row_of) idx = r++;

  std::vector<std::vector<Rational>> m(row_of.size(), std::vector<Rational>(cols));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& t : nfs[j].symbol().terms())
      if (t.exp.total_degree() < n) m[row_of.at(t.exp)][j] = t.coeff;

  // reduced row echelon form
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational k = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

const DiffOp& NFTable::get(unsigned i, unsigned n) {
  const auto key = std::make_pair(i, n);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const Layout& L = g_.elements.front().layout();
  const DiffOp si = DiffOp::param(L, 0).pow(i);
  return memo_.emplace(key, approx_nf(si, g_, n)).first->second;
}

DiffOp univariate_op(std::span<const Rational> ascending, const Layout& L) {
  DiffOp r(L);
  for (std::size_t j = 0; j < ascending.size(); ++j) {
    if (ascending[j] == 0) continue;
    Exponent e(L.size());
    e.set(L.param(0), unsigned(j));
    r += DiffOp::monomial(L, e, ascending[j]);
  }
  return r;
}

GeneratorResult find_generator(const GroebnerBasis& g, unsigned n0, unsigned nmax) {
  if (g.elements.empty()) throw InputError("empty standard basis");
  if (n0 == 0) throw InputError("N must be positive");
  const Layout& L = g.elements.front().layout();
  NFTable table(g);
  GeneratorResult res;
  std::vector<Rational> last;
  unsigned d = 0;
  for (unsigned n = n0;; ++n) {
    if (n > nmax)
      throw ResourceLimitError("no certified generator up to N = " + std::to_string(nmax),
                               as_text(last), n - 1);
    std::vector<DiffOp> nfs;
    for (unsigned i = 0; i < d; ++i) nfs.push_back(table.get(i, n));
    for (unsigned i = d;; ++i) {
      nfs.push_back(table.get(i, n));
      const auto ker = dependency_kernel(nfs, n);
      if (ker.empty()) {
        res.trace.push_back({n, i, {}, false});
        continue;
      }
      // The kernel is one-dimensional here since the one at i - 1 is trivial.
      last = normalized_last(ker.front());
      const DiffOp cand = univariate_op(last, L);
      const bool ok = mora_div(cand, g.elements, g.order, false).remainder.is_zero();
      res.trace.push_back({n, i, last, ok});
      if (ok) {
        res.b = last;
        res.n_final = n;
        return res;
      }
      d = i;
      break;
    }
  }
}

RootsResult rational_roots(std::span<const Rational> monic) {
  if (monic.empty() || monic.back() == 0) throw InputError("zero polynomial has no root set");
  std::vector<Rational> p(monic.begin(), monic.end());
  for (auto& c : p) c /= monic.back();
  RootsResult out;
  std::map<Rational, unsigned> mult;

  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (std::size_t j = p.size(); j-- > 0;) acc = acc * x + p[j];
    return acc;
  };
  auto deflate = [&](const Rational& x) {
    // p = (s - x) q
    std::vector<Rational> q(p.size() - 1);
    Rational carry = 0;
    for (std::size_t j = p.size(); j-- > 1;) {
      carry = carry * x + p[j];
      q[j - 1] = carry;
    }
    p = std::move(q);
  };

  while (p.size() > 1 && p.front() == 0) {
    p.erase(p.begin());
    ++mult[Rational(0)];
  }
  for (bool found = true; found && p.size() > 1;) {
    found = false;
    mpz_class den = 1;
    for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    const mpz_class a0 = abs(mpz_class(p.front() * den));
    const mpz_class an = abs(mpz_class(p.back() * den));
    auto divisors = [](const mpz_class& v) {
      std::vector<mpz_class> ds;
      for (mpz_class k = 1; k * k <= v; ++k)
        if (v % k == 0) {
          ds.push_back(k);
          if (k * k != v) ds.push_back(v / k);
        }
      return ds;
    };
    for (const auto& num : divisors(a0)) {
      for (const auto& dn : divisors(an)) {
        for (int sign : {-1, 1}) {
          Rational x(mpz_class(sign * num), dn);
          x.canonicalize();
          if (eval(x) != 0) continue;
          deflate(x);
          ++mult[x];
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  for (const auto& [r, m] : mult) out.roots.push_back({r, m});
  out.cofactor = p;
  return out;
}

BFunctionResult local_b_function(const SymbolPoly& f, const Layout& L, const LocalBOptions& opt) {
  const auto t0 = Clock::now();
  check_f(f, L);
  BFunctionResult res;
  res.gb_strategy = opt.gb;
  const std::size_t k = L.size();
  const DiffOp F(L, f);

  if (f.coefficient(Exponent(k)) != 0) {
    // f is a unit of the local ring
    res.b = {Rational(1)};
    res.basis = {F};
    res.certificate = mora_div(DiffOp::constant(L, Rational(1)), res.basis, opt.tie);
    res.roots.cofactor = {Rational(1)};
    res.timings.total_ms = ms_since(t0);
    return res;
  }

  auto t = Clock::now();
  res.annihilator = opt.annihilator.empty() ? ann_fs(f, L, opt.tie) : opt.annihilator;
  res.timings.ann_ms = ms_since(t);

  t = Clock::now();
  std::vector<DiffOp> gens = res.annihilator;
  gens.push_back(F);
  const GroebnerBasis gb = standard_basis(gens, opt.gb, opt.tie);
  res.basis = gb.elements;
  res.timings.gb_ms = ms_since(t);

  t = Clock::now();
  const unsigned n0 = opt.n0.value_or(2 * (2 * L.pairs + 1));
  GeneratorResult gen = find_generator(gb, n0, opt.nmax);
  res.timings.nf_ms = ms_since(t);
  res.b = std::move(gen.b);
  res.n_final = gen.n_final;
  res.trace = std::move(gen.trace);
  res.certificate = mora_div(univariate_op(res.b, L), gb.elements, gb.order);
  res.roots = rational_roots(res.b);
  res.timings.total_ms = ms_since(t0);
  return res;
}

}  // namespace bfunc
