#include "bfunc/expr.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <set>
#include <sstream>

#include "bfunc/errors.hpp"

namespace bfunc {

namespace {

struct Token {
  enum Kind { Number, Ident, Op, End } kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    std::size_t j = i;
    if (std::isdigit(c)) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Number, std::string(src.substr(i, j - i)), line, column});
    } else if (std::isalpha(c) || c == '_') {
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Token::Ident, std::string(src.substr(i, j - i)), line, column});
    } else if (std::string_view("+-*/^()").find(static_cast<char>(c)) != std::string_view::npos) {
      j = i + 1;
      out.push_back({Token::Op, std::string(1, static_cast<char>(c)), line, column});
    } else {
      std::ostringstream msg;
      msg << "syntax error at line " << line << ", column " << column << ": unexpected character '"
          << static_cast<char>(c) << "'";
      throw InputError(msg.str());
    }
    advance(j - i);
  }
  out.push_back({Token::End, "", line, column});
  return out;
}

[[noreturn]] void fail_at(const Token& t, const std::string& what) {
  std::ostringstream msg;
  msg << "syntax error at line " << t.line << ", column " << t.column << ": " << what;
  throw InputError(msg.str());
}

// Names an identifier: a variable slot, its derivation, or s.
struct Atom {
  enum Kind { Var, Deriv, Param } kind;
  unsigned index = 0;
};

Atom resolve(const Token& t, std::span<const std::string> vars) {
  if (t.text == "s") return {Atom::Param, 0};
  for (unsigned i = 0; i < vars.size(); ++i)
    if (t.text == vars[i]) return {Atom::Var, i};
  if (t.text.size() > 1 && t.text[0] == 'd')
    for (unsigned i = 0; i < vars.size(); ++i)
      if (t.text.compare(1, std::string::npos, vars[i]) == 0) return {Atom::Deriv, i};
  std::ostringstream msg;
  msg << "unknown variable '" << t.text << "' at line " << t.line << ", column " << t.column;
  throw InputError(msg.str());
}

// Ring operations used while lowering the parse tree.
struct PolyRing {
  Layout layout;
  using Value = SymbolPoly;
  Value constant(const Rational& c) const { return SymbolPoly::constant(layout.size(), c); }
  Value atom(const Atom& a) const {
    switch (a.kind) {
      case Atom::Var: return SymbolPoly::variable(layout.size(), layout.x(a.index));
      case Atom::Deriv: return SymbolPoly::variable(layout.size(), layout.xi(a.index));
      case Atom::Param: return SymbolPoly::variable(layout.size(), layout.param(0));
    }
    return {};
  }
  Value mul(const Value& a, const Value& b) const { return a * b; }
};

struct OpRing {
  Layout layout;
  using Value = DiffOp;
  Value constant(const Rational& c) const { return DiffOp::constant(layout, c); }
  Value atom(const Atom& a) const {
    switch (a.kind) {
      case Atom::Var: return DiffOp::x(layout, a.index);
      case Atom::Deriv: return DiffOp::d(layout, a.index);
      case Atom::Param: return DiffOp::param(layout, 0);
    }
    return DiffOp(layout);
  }
  Value mul(const Value& a, const Value& b) const { return op_mul(a, b); }
};

template <class Ring>
class Parser {
public:
  using Value = typename Ring::Value;

  Parser(std::string_view src, std::span<const std::string> vars, Ring ring)
      : tokens_(tokenize(src)), vars_(vars), ring_(ring) {}

  Value parse() {
    if (peek().kind == Token::End) fail_at(peek(), "empty expression");
    Value v = expr();
    if (peek().kind != Token::End) fail_at(peek(), "unexpected '" + peek().text + "'");
    return v;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(const char* op) {
    if (peek().kind == Token::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (accept("+")) v += term();
      else if (accept("-")) v -= term();
      else return v;
    }
  }

  Value term() {
    Value v = unary();
    while (true) {
      if (accept("*")) {
        v = ring_.mul(v, unary());
      } else if (peek().kind == Token::Op && peek().text == "/") {
        const Token& at = next();
        Value d = unary();
        const auto& terms = d.is_zero() ? std::span<const Term>() : constant_terms(d);
        if (terms.size() != 1 || !terms.front().exp.is_zero())
          fail_at(at, "division by a non-constant or zero expression");
        v = v.scaled(Rational(1) / terms.front().coeff);
      } else {
        return v;
      }
    }
  }

  static std::span<const Term> constant_terms(const SymbolPoly& p) { return p.terms(); }
  static std::span<const Term> constant_terms(const DiffOp& p) { return p.symbol().terms(); }

  Value unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept("^")) return base;
    const Token& at = peek();
    if (accept("-")) fail_at(at, "negative exponent");
    bool paren = accept("(");
    if (paren && accept("-")) fail_at(at, "negative exponent");
    if (peek().kind != Token::Number) fail_at(peek(), "expected a natural exponent");
    const Token& num = next();
    if (paren && !accept(")")) fail_at(peek(), "expected ')'");
    if (num.text.size() > 6) fail_at(num, "exponent too large");
    const unsigned k = static_cast<unsigned>(std::stoul(num.text));
    Value result = ring_.constant(Rational(1));
    for (unsigned i = 0; i < k; ++i) result = ring_.mul(result, base);
    return result;
  }

  Value primary() {
    const Token& t = next();
    switch (t.kind) {
      case Token::Number: return ring_.constant(Rational(Integer(t.text)));
      case Token::Ident: return ring_.atom(resolve(t, vars_));
      case Token::Op:
        if (t.text == "(") {
          Value v = expr();
          if (!accept(")")) fail_at(peek(), "expected ')'");
          return v;
        }
        fail_at(t, "unexpected '" + t.text + "'");
      case Token::End: fail_at(t, "unexpected end of input");
    }
    fail_at(t, "unexpected token");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::span<const std::string> vars_;
  Ring ring_;
};

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

std::string monomial_text(const Exponent& e, const Layout& L, std::span<const std::string> vars) {
  std::string out;
  auto factor = [&](const std::string& name, unsigned k) {
    if (k == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (k > 1) out += "^" + std::to_string(k);
  };
  for (unsigned i = 0; i < L.pairs; ++i) factor(vars[i], e[L.x(i)]);
  factor("s", e[L.param(0)]);
  for (unsigned i = 0; i < L.pairs; ++i) factor("d" + vars[i], e[L.xi(i)]);
  return out;
}

std::string format_terms(const SymbolPoly& f, const Layout& L, std::span<const std::string> vars,
                         TieOrder tie) {
  if (f.is_zero()) return "0";
  const MatrixOrder order = MatrixOrder::weyl_local(L, tie);
  std::string out;
  bool first = true;
  for (const auto& t : f.sorted_terms(order)) {
    const bool negative = sgn(t.coeff) < 0;
    const Rational mag = abs(t.coeff);
    const std::string mono = monomial_text(t.exp, L, vars);
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

Layout layout_for(std::span<const std::string> vars) {
  validate_variables(vars);
  return Layout::weyl(static_cast<unsigned>(vars.size()));
}

}  // namespace

void validate_variables(std::span<const std::string> vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw InputError("invalid variable name '" + v + "'");
    if (v == "s") throw InputError("'s' is reserved for the parameter");
    if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
  }
  for (const auto& v : vars)
    if (v.size() > 1 && v[0] == 'd' && seen.count(v.substr(1)))
      throw InputError("variable '" + v + "' clashes with the derivation of '" + v.substr(1) + "'");
  if (2 * vars.size() + 1 > kMaxVariables) throw InputError("too many variables");
}

std::vector<std::string> infer_variables(std::span<const std::string> sources) {
  std::set<std::string> names;
  for (const auto& src : sources)
    for (const auto& t : tokenize(src)) {
      if (t.kind != Token::Ident || t.text == "s") continue;
      if (t.text.size() > 1 && t.text[0] == 'd') names.insert(t.text.substr(1));
      else names.insert(t.text);
    }
  return {names.begin(), names.end()};
}

SymbolPoly parse_poly(std::string_view src, std::span<const std::string> vars) {
  return Parser<PolyRing>(src, vars, PolyRing{layout_for(vars)}).parse();
}

DiffOp parse_op(std::string_view src, std::span<const std::string> vars) {
  const Layout L = layout_for(vars);
  DiffOp p = Parser<OpRing>(src, vars, OpRing{L}).parse();
  if (p.is_zero()) return DiffOp(L);
  return p;
}

std::string format_poly(const SymbolPoly& f, std::span<const std::string> vars, TieOrder tie) {
  return format_terms(f, Layout::weyl(static_cast<unsigned>(vars.size())), vars, tie);
}

std::string format_op(const DiffOp& p, std::span<const std::string> vars, TieOrder tie) {
  return format_terms(p.symbol(), Layout::weyl(static_cast<unsigned>(vars.size())), vars, tie);
}

std::string format_univariate(std::span<const Rational> ascending, std::string_view var) {
  std::string out;
  for (std::size_t k = ascending.size(); k-- > 0;) {
    const Rational& c = ascending[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    std::string mono;
    if (k >= 1) mono = std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace bfunc
