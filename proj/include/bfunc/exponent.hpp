#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

namespace bfunc {

inline constexpr std::size_t kMaxVariables = 24;

// Variable layout of a computation session.
//
// Exponent slots are ordered x_1..x_n, then the central parameters, then
// xi_1..xi_n, where xi_i is the commutative stand-in for d/dx_i. The main
// session has a single parameter s. Auxiliary computations (annihilators,
// homogenized bases) use extra parameters; `homogenizer` names the parameter
// h for which d_i x_i = x_i d_i + h^2.
struct Layout {
  unsigned pairs = 0;
  unsigned params = 1;
  int homogenizer = -1;

  static Layout weyl(unsigned n) { return Layout{n, 1, -1}; }

  unsigned size() const { return 2 * pairs + params; }
  unsigned x(unsigned i) const { return i; }
  unsigned param(unsigned j) const { return pairs + j; }
  unsigned xi(unsigned i) const { return pairs + params + i; }
  bool is_x(unsigned slot) const { return slot < pairs; }
  bool is_param(unsigned slot) const { return slot >= pairs && slot < pairs + params; }
  bool is_xi(unsigned slot) const { return slot >= pairs + params && slot < size(); }

  friend bool operator==(const Layout&, const Layout&) = default;
};

// A point of Z_{>=0}^k with k fixed per session.
class Exponent {
public:
  Exponent() = default;
  explicit Exponent(std::size_t size);
  Exponent(std::initializer_list<unsigned> entries);
  explicit Exponent(std::span<const unsigned> entries);

  std::size_t size() const { return size_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned value);
  void add_to(std::size_t i, unsigned value) { set(i, e_[i] + value); }

  unsigned total_degree() const;
  // Componentwise <=.
  bool divides(const Exponent& other) const;

  Exponent operator+(const Exponent& other) const;
  // Requires divides(other) from the right-hand side: other <= *this.
  Exponent operator-(const Exponent& other) const;
  Exponent lcm(const Exponent& other) const;

  bool is_zero() const { return total_degree() == 0; }

  // Raw lexicographic comparison; canonical storage order only, not a
  // monomial order.
  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.size_ == b.size_ && std::equal(a.e_.begin(), a.e_.begin() + a.size_, b.e_.begin());
  }
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    for (std::size_t i = 0; i < a.size_; ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    return std::strong_ordering::equal;
  }

  std::size_t hash() const;
  std::string to_string() const;

private:
  std::array<std::uint16_t, kMaxVariables> e_{};
  std::uint8_t size_ = 0;
};

void check_arity(const Exponent& a, std::size_t expected);

}  // namespace bfunc

template <>
struct std::hash<bfunc::Exponent> {
  std::size_t operator()(const bfunc::Exponent& e) const noexcept { return e.hash(); }
};
