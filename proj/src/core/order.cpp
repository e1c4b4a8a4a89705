#include "bfunc/order.hpp"

#include <numeric>

#include "bfunc/errors.hpp"

namespace bfunc {

TieOrder parse_tie_order(std::string_view name) {
  if (name == "grevlex") return TieOrder::Grevlex;
  if (name == "deglex") return TieOrder::Deglex;
  if (name == "lex") return TieOrder::Lex;
  throw InputError("unknown tie order '" + std::string(name) + "' (grevlex|deglex|lex)");
}

std::string_view tie_order_name(TieOrder tie) {
  switch (tie) {
    case TieOrder::Grevlex: return "grevlex";
    case TieOrder::Deglex: return "deglex";
    case TieOrder::Lex: return "lex";
  }
  return "?";
}

MatrixOrder::MatrixOrder(std::size_t arity, std::vector<std::vector<int>> rows, TieOrder tie,
                         std::vector<unsigned> tie_vars)
    : arity_(arity), rows_(std::move(rows)), tie_(tie), tie_vars_(std::move(tie_vars)) {
  for (const auto& row : rows_)
    if (row.size() != arity_) throw InputError("weight row has wrong length");
  if (tie_vars_.empty()) {
    tie_vars_.resize(arity_);
    std::iota(tie_vars_.begin(), tie_vars_.end(), 0u);
  }
  if (tie_vars_.size() != arity_) throw InputError("tie variable list must be a permutation");
}

MatrixOrder MatrixOrder::weyl_local(const Layout& layout, TieOrder tie) {
  const unsigned k = layout.size();
  const long h = layout.homogenizer < 0
                     ? -1
                     : static_cast<long>(layout.param(static_cast<unsigned>(layout.homogenizer)));
  std::vector<int> e(k, 0), xdeg(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (layout.is_x(i)) xdeg[i] = -1;
    else if (static_cast<long>(i) != h) e[i] = 1;
  }
  return MatrixOrder(k, {e, xdeg}, tie);
}

MatrixOrder MatrixOrder::series_local(const Layout& layout, TieOrder tie) {
  return MatrixOrder(layout.size(), {std::vector<int>(layout.size(), -1)}, tie);
}

MatrixOrder MatrixOrder::homogenized(const Layout& layout, TieOrder tie) {
  if (layout.homogenizer < 0) throw InputError("homogenized order needs a homogenizer slot");
  const unsigned k = layout.size();
  const unsigned h = layout.param(static_cast<unsigned>(layout.homogenizer));
  std::vector<int> deg(k, 1), e(k, 0), xdeg(k, 0);
  std::vector<unsigned> tie_vars;
  for (unsigned i = 0; i < k; ++i) {
    if (layout.is_x(i)) xdeg[i] = -1;
    else if (i != h) e[i] = 1;
    if (i != h) tie_vars.push_back(i);
  }
  tie_vars.push_back(h);
  return MatrixOrder(k, {deg, e, xdeg}, tie, tie_vars);
}

MatrixOrder MatrixOrder::eliminate_params(const Layout& layout, TieOrder tie) {
  const unsigned k = layout.size();
  std::vector<int> elim(k, 0), deg(k, 1);
  for (unsigned i = 0; i < k; ++i)
    if (layout.is_param(i)) elim[i] = 1;
  return MatrixOrder(k, {elim, deg}, tie);
}

long MatrixOrder::weight(std::size_t row, const Exponent& a) const {
  long w = 0;
  const auto& r = rows_[row];
  for (std::size_t i = 0; i < arity_; ++i) w += static_cast<long>(r[i]) * a[i];
  return w;
}

std::strong_ordering MatrixOrder::compare(const Exponent& a, const Exponent& b) const {
  check_arity(a, arity_);
  check_arity(b, arity_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const long wa = weight(r, a), wb = weight(r, b);
    if (wa != wb) return wa <=> wb;
  }
  return compare_tie(a, b);
}

std::strong_ordering MatrixOrder::compare_tie(const Exponent& a, const Exponent& b) const {
  if (tie_ != TieOrder::Lex) {
    unsigned da = 0, db = 0;
    for (unsigned v : tie_vars_) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da <=> db;
  }
  if (tie_ == TieOrder::Grevlex) {
    for (auto it = tie_vars_.rbegin(); it != tie_vars_.rend(); ++it)
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    return std::strong_ordering::equal;
  }
  for (unsigned v : tie_vars_)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

}  // namespace bfunc
