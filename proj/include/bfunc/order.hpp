#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bfunc/exponent.hpp"

namespace bfunc {

enum class TieOrder { Grevlex, Deglex, Lex };

TieOrder parse_tie_order(std::string_view name);
std::string_view tie_order_name(TieOrder tie);

// Monomial order given by integer weight rows compared lexicographically,
// with a term order breaking the remaining ties. The tie order runs over
// `tie_vars` (a permutation of the slots; identity by default).
class MatrixOrder {
public:
  MatrixOrder(std::size_t arity, std::vector<std::vector<int>> rows, TieOrder tie,
              std::vector<unsigned> tie_vars = {});

  // The order < on D[s]: e-weight (s and xi weigh 1) first, then lower
  // x-degree is larger, then the tie order.
  static MatrixOrder weyl_local(const Layout& layout, TieOrder tie = TieOrder::Grevlex);
  // The order <_r: lower total degree is larger, then the tie order.
  static MatrixOrder series_local(const Layout& layout, TieOrder tie = TieOrder::Grevlex);
  // Degree-first refinement of weyl_local for a layout carrying a
  // homogenizer parameter; the tie order sees h as its last variable.
  static MatrixOrder homogenized(const Layout& layout, TieOrder tie = TieOrder::Grevlex);
  // Global order eliminating every parameter slot, then total degree.
  static MatrixOrder eliminate_params(const Layout& layout, TieOrder tie = TieOrder::Grevlex);

  std::size_t arity() const { return arity_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  TieOrder tie() const { return tie_; }

  // Throws InputError on arity mismatch. Equal only when a == b.
  std::strong_ordering compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }
  bool greater(const Exponent& a, const Exponent& b) const { return compare(a, b) > 0; }

  long weight(std::size_t row, const Exponent& a) const;

private:
  std::strong_ordering compare_tie(const Exponent& a, const Exponent& b) const;

  std::size_t arity_;
  std::vector<std::vector<int>> rows_;
  TieOrder tie_;
  std::vector<unsigned> tie_vars_;
};

}  // namespace bfunc
