#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bfunc {

// Malformed input: arity mismatch, zero divisor, syntax error, ...
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Asked for LM/LT/LE/ord_e of the zero element.
class UndefinedLeadingTermError : public std::domain_error {
public:
  UndefinedLeadingTermError() : std::domain_error("leading data of the zero element is undefined") {}
};

// A search ran past its configured limit. Carries the last candidate
// (coefficients in ascending powers of s, as text) and the N reached.
class ResourceLimitError : public std::runtime_error {
public:
  ResourceLimitError(const std::string& what, std::vector<std::string> last_candidate,
                     unsigned last_n)
      : std::runtime_error(what), last_candidate_(std::move(last_candidate)), last_n_(last_n) {}

  const std::vector<std::string>& last_candidate() const { return last_candidate_; }
  unsigned last_n() const { return last_n_; }

private:
  std::vector<std::string> last_candidate_;
  unsigned last_n_;
};

}  // namespace bfunc
