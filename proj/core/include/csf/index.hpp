#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "csf/word.hpp"

namespace csf {

// A composition (k_1,...,k_l) of positive integers: the argument list of
// zeta / zeta-star. Empty indexes are allowed and encode the unit word.
struct Index {
  std::vector<int> parts;

  Index() = default;
  explicit Index(std::vector<int> p);  // validates parts >= 1

  int weight() const noexcept;
  int depth() const noexcept { return static_cast<int>(parts.size()); }
  bool empty() const noexcept { return parts.empty(); }

  // Convergent series: empty, or first part >= 2.
  bool admissible() const noexcept { return parts.empty() || parts.front() >= 2; }

  friend bool operator==(const Index&, const Index&) = default;
  friend bool operator<(const Index& a, const Index& b) { return a.parts < b.parts; }
};

// z_{k_1} ... z_{k_l} with z_k = x^(k-1) y; empty index -> unit word.
Word word_from_index(const Index& idx);

// Inverse of word_from_index on Q + H*y monomials; throws NotInH1 otherwise.
Index index_from_word(const Word& w);

// Comma-separated positive integers, e.g. "2,1".
Index parse_index(std::string_view text);
std::string to_string(const Index& idx);

// All compositions of the given weight (weight >= 0; weight 0 -> just the
// empty composition), in lexicographic order.
std::vector<Index> compositions_of(int weight);

}  // namespace csf
