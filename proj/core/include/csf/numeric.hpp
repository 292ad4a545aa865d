#pragma once

#include "csf/index.hpp"
#include "csf/poly.hpp"

namespace csf {

struct TruncationParams {
  long M = 100000;   // summation cutoff, >= 10
  double safety = 10.0;  // tail-bound multiplier, >= 1

  TruncationParams() = default;
  TruncationParams(long M_, double safety_ = 10.0);
};

struct NumericResult {
  double value = 0.0;
  double tail_bound = 0.0;  // heuristic truncation-error envelope, not a theorem
  long M_used = 0;
};

// Truncated nested sum over strictly decreasing m_1 > ... > m_l > 0 of
// 1/(m_1^{k_1} .. m_l^{k_l}), by dynamic programming over the nesting
// depth with compensated accumulation. Throws DivergentIndex unless the
// index is nonempty with first part >= 2.
NumericResult zeta_num(const Index& idx, const TruncationParams& params = {});

// Same with weakly decreasing m_1 >= ... >= m_l > 0 (zeta-star).
NumericResult zeta_star_num(const Index& idx, const TruncationParams& params = {});

// Q-linear extension of zeta over x*H*y words (unit -> 1). Throws
// NonAdmissibleWord naming the first offending term.
NumericResult evaluate_Z(const Poly& p, const TruncationParams& params = {});

// Q-linear extension of zeta-star over the same domain.
NumericResult evaluate_Z_bar(const Poly& p, const TruncationParams& params = {});

enum class ZetaVariant { MZV, MZSV };

// Assembles the cyclic sum formula for the index directly from the series
// (not through rho) and compares both sides numerically:
//   MZV : sum_{j,i} zeta(k_j-i+1, rot_j, i) = sum_j zeta(k_j+1, rot_j)
//   MZSV: sum_{j,i} zeta*(k_j-i+1, rot_j, i) = k zeta(k+1)
// Requires some part > 1; throws PreconditionViolation otherwise.
struct CsfNumericReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};
CsfNumericReport csf_numeric_check(const Index& ks, ZetaVariant variant,
                                   const TruncationParams& params = {});

}  // namespace csf
