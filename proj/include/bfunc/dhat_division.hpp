#pragma once

#include <span>
#include <vector>

#include "bfunc/diffop.hpp"

namespace bfunc {

struct BoundStep {
  unsigned k = 0;
  unsigned m_k = 0;
  unsigned bound_before = 0;
};

struct DhatDivisionResult {
  std::vector<DiffOp> quotients;
  DiffOp remainder;
  unsigned requested_n = 0;
  unsigned initial_bound = 0;
  // One entry per e-level, in processing order (k = m0 down to 0).
  std::vector<BoundStep> bound_schedule;
};

// Accuracy loss per e-level:
//   M_k = max { |LE_<(P_i)| + 2 (k - ord_e(P_i)) : ord_e(P_i) <= k },
// and M_k = 0 when no divisor qualifies. Returns M_0..M_m0.
std::vector<unsigned> mk_schedule(std::span<const DiffOp> divisors, unsigned m0,
                                  TieOrder tie = TieOrder::Grevlex);

// Approximate division in D-hat[s]: P = sum Q_i P_i + R exactly, and the
// quotient terms of degree < N - |LE_<(P_i)| and remainder terms of degree
// < N agree with the exact (non-terminating) division.
DhatDivisionResult dhat_approx_div(const DiffOp& p, std::span<const DiffOp> divisors, unsigned n,
                                   TieOrder tie = TieOrder::Grevlex);

}  // namespace bfunc
