#pragma once

#include <vector>

#include "csf/word.hpp"

namespace csf {

// Membership of a word in the graded subspaces of Q<x,y> used throughout:
//   h1       : Q + H*y           (empty word or ends in y)
//   h0       : Q + x*H*y         (empty word, or starts with x and ends in y)
//   check_h1 : words of h1 that are not powers of y
//   check_h  : words that are neither powers of x nor powers of y
struct SubspaceFlags {
  bool in_h1 = false;
  bool in_h0 = false;
  bool in_check_h1 = false;
  bool in_check_h = false;
};

SubspaceFlags classify(const Word& w);

enum class WordSpace { H, H1, H0, CheckH1, CheckH };

// All degree-d words of the space, in lexicographic order (x < y).
std::vector<Word> enumerate_words(int degree, WordSpace space);

// Lexicographically least rotation of w; rotation-invariant and idempotent.
Word cyclic_canonical(const Word& w);

// Number of rotation classes of degree-d binary words:
// (1/d) * sum_{m|d} phi(d/m) * 2^m.
long long count_cyclic_classes(int d);

// Euler's totient.
long long euler_phi(long long n);

}  // namespace csf
