#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csf/poly.hpp"

namespace csf {

// A list of homogeneous generator polys of one weight, flattened against
// the ordered column basis of the words appearing in them. Rows keep their
// provenance labels so membership certificates are readable.
struct LinearSystem {
  int weight = 0;
  std::vector<Word> columns;  // canonical monomial order, deduplicated
  std::vector<Poly> generators;
  std::vector<std::string> labels;

  std::size_t row_count() const noexcept { return generators.size(); }

  // Validates that every generator is homogeneous of the given weight
  // (zero generators are dropped) and builds the column basis.
  static LinearSystem build(int weight, std::vector<std::pair<std::string, Poly>> rows);
};

struct MembershipCertificate {
  bool member = false;
  // When member: the exact combination of generators reproducing the query,
  // re-expanded and verified before being returned.
  std::vector<std::pair<std::string, Rat>> combination;
};

// Rank over Q by exact integer echelon elimination (content-stripped,
// fraction-free rows), cross-checked against the rank modulo at least two
// random primes > 2^30. Disagreement throws InternalInconsistency.
// `check_primes` overrides the random primes (used by tests).
long long exact_rank(const LinearSystem& sys);
long long exact_rank(const LinearSystem& sys, const std::vector<std::uint64_t>& check_primes);

// Rank of the same system over Z/p.
long long modular_rank(const LinearSystem& sys, std::uint64_t p);

// Reduced row basis over Q with combination tracking, reusable across many
// membership queries against one span.
class SpanSolver {
 public:
  explicit SpanSolver(const LinearSystem& sys);

  long long rank() const noexcept { return static_cast<long long>(rows_.size()); }

  // Throws WeightMismatch if q is nonzero and not homogeneous of the
  // system weight. The zero poly is a member with the empty combination.
  MembershipCertificate solve(const Poly& q) const;

 private:
  struct TrackedRow {
    std::vector<std::pair<int, Rat>> v;     // sparse, sorted by column
    std::vector<std::pair<int, Rat>> comb;  // combination over generators
    int lead = -1;
  };

  LinearSystem sys_;
  std::map<Word, int, WordOrder> col_of_;
  std::vector<TrackedRow> rows_;  // insertion order
  std::vector<int> lead_row_;     // column -> row index or -1
};

MembershipCertificate membership(const LinearSystem& sys, const Poly& q);

}  // namespace csf
