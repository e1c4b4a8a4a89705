#include "bfunc/exponent.hpp"

#include <limits>
#include <numeric>

#include "bfunc/errors.hpp"

namespace bfunc {

Exponent::Exponent(std::size_t size) {
  if (size > kMaxVariables)
    throw InputError("too many variables (at most " + std::to_string(kMaxVariables) + ")");
  size_ = static_cast<std::uint8_t>(size);
}

Exponent::Exponent(std::initializer_list<unsigned> entries)
    : Exponent(std::span<const unsigned>(entries.begin(), entries.size())) {}

Exponent::Exponent(std::span<const unsigned> entries) : Exponent(entries.size()) {
  for (std::size_t i = 0; i < entries.size(); ++i) set(i, entries[i]);
}

void Exponent::set(std::size_t i, unsigned value) {
  if (value > std::numeric_limits<std::uint16_t>::max())
    throw InputError("exponent overflow");
  e_[i] = static_cast<std::uint16_t>(value);
}

unsigned Exponent::total_degree() const {
  return std::accumulate(e_.begin(), e_.begin() + size_, 0u);
}

bool Exponent::divides(const Exponent& other) const {
  for (std::size_t i = 0; i < size_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Exponent Exponent::operator+(const Exponent& other) const {
  check_arity(other, size_);
  Exponent r(size_);
  for (std::size_t i = 0; i < size_; ++i) r.set(i, unsigned(e_[i]) + other.e_[i]);
  return r;
}

Exponent Exponent::operator-(const Exponent& other) const {
  check_arity(other, size_);
  Exponent r(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    if (other.e_[i] > e_[i]) throw InputError("exponent subtraction would go negative");
    r.e_[i] = static_cast<std::uint16_t>(e_[i] - other.e_[i]);
  }
  return r;
}

Exponent Exponent::lcm(const Exponent& other) const {
  check_arity(other, size_);
  Exponent r(size_);
  for (std::size_t i = 0; i < size_; ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  return r;
}

std::size_t Exponent::hash() const {
  std::size_t h = size_;
  for (std::size_t i = 0; i < size_; ++i) h = h * 1000003u ^ e_[i];
  return h;
}

std::string Exponent::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) s += ',';
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

void check_arity(const Exponent& a, std::size_t expected) {
  if (a.size() != expected)
    throw InputError("arity mismatch: expected " + std::to_string(expected) + " slots, got " +
                     std::to_string(a.size()));
}

}  // namespace bfunc
