#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csf/index.hpp"
#include "csf/linear.hpp"
#include "csf/poly.hpp"

namespace csf {

enum class HarmonicVariant { Star, StarBar };

// The linear Kawashima span at the given output weight (>= 3):
//   Star    : rows x * phi(u * v)
//   StarBar : rows x * alpha~(u *b v)
// over unordered pairs of nonempty words u, v ending in y with
// deg u + deg v = weight - 1; zero rows are dropped.
LinearSystem kawashima_span(int weight, HarmonicVariant variant);

// Both sides of the key harmonic-product identity for rho_n on the
// A-basis differences, evaluated symbolically:
//   lhs = phi L_x^{-1} rho_n(A_{k1+..+kl-n+1} - A_{k1-n+1} A_{k2} .. A_{kl})
//   rhs = sum_{m=2}^{l} (-1)^{l-m}/m  sum_j sum_{compositions a of l into m}
//         H(j, a), subscripts cyclic mod l.
// Requires k1 >= n >= 1; throws PreconditionViolation otherwise.
struct KeyPropResult {
  Poly lhs;
  Poly rhs;
  bool equal = false;
};
KeyPropResult key_prop_check(int n, const Index& ks);

// The closed form of the lhs above:
//   z_{k1+...+kl} + (-1)^l sum_j z_{k_j}..z_{k_l} z_{k_1}..z_{k_{j-1}}.
Poly key_prop_lhs_closed_form(int n, const Index& ks);

// Materializes the ordered set partitions U of the l exponent labels and
// the subsets I_i (label i's block strictly left of label i+1's block,
// cyclically), then verifies
//   (7) sum over U of the component words equals z_{k1} * ... * z_{kl}
//   (8) U minus the one-block partition equals the union of the I_i.
// Requires l <= 6.
struct PartitionOracleReport {
  int l = 0;
  std::size_t u_size = 0;               // ordered set partitions (Fubini number)
  std::vector<std::size_t> i_sizes;     // |I_1|, ..., |I_l|
  bool sum_identity_ok = false;         // (7)
  bool cover_identity_ok = false;       // (8)
  bool ok() const { return sum_identity_ok && cover_identity_ok; }
};
PartitionOracleReport partition_tuple_oracle(const Index& ks);

// rho_n(z_k) = L_x phi(A_{k-1} * z_n), its expansion
// A_{k-1} * z_n = sum_{i=1}^{k} A_{k-i} x^(n-1) A_i, and the corollary
// rho_n(y z_k) = L_x phi(A_{k-1} * z_{n+1} - A_k * z_n).
bool prop4_check(int n, int k);
bool harmonic_a_expansion_check(int n, int k);
bool cor3_check(int n, int k);

// The word-level cyclic sum expansion of an index:
//   sum_{j,i} z_{k_j-i+1} z_{k_{j+1}}..z_{k_{j-1}} z_i - sum_j x z_{k_{j+1}}..z_{k_j}.
// Equals both rho_1 of the encoded word and (CBar_w - C_w)(1).
Poly cyclic_sum_expansion(const Index& ks);

// The two explicit weight-homogeneous evaluations of rho_1 / rho_bar_1 on
// z-encoded indexes (the word-level cyclic sum formulas).
bool special_evaluations_check(const Index& ks);

// The degree-d elements A_{k1+..+kl} - A_{k1}..A_{kl} (l >= 2) number
// 2^(d-1) - 1 and form a basis of the degree-d part of check-H1.
// Verified by a leading-word certificate; cross-checked by elimination
// for d <= 9. Requires 2 <= d <= 12.
bool lemma2_basis_check(int d);

// dim of the span of { rho_n(w) : w in check-H1, deg w = weight - n }
// for every weight in [3, max_weight] and n in [1, weight-2].
struct DimTable {
  std::map<std::pair<int, int>, long long> entries;  // (weight, n) -> dim

  std::string to_text() const;        // aligned table, one row per n
  std::string to_json() const;        // {"entries":[{"weight":..,"n":..,"dim":..},...]}
};
DimTable dims_table(int max_weight);

// Necklace count minus 2: the closed form for the n=1 dimension at input
// degree d (output weight d+1). Requires d >= 2.
long long totient_dimension(int d);

// Every rho_{n+1} image of a degree-d check-H1 word lies in the span of the
// rho_n images of degree-(d+1) check-H1 words.
bool prop5_check(int n, int d);

// Rank of the union over n >= 1 of all rho_n images at fixed output weight
// equals the n = 1 rank alone (the nesting of the spans).
bool fixed_weight_saturation_check(int weight);

}  // namespace csf
