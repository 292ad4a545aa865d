#pragma once

#include "csf/index.hpp"
#include "csf/poly.hpp"

namespace csf {

// The harmonic (quasi-shuffle, "stuffle") product on Q + H*y, modeling
// series multiplication of multiple zeta values:
//   1 * w = w * 1 = w
//   z_p w * z_q w' = z_p (w * z_q w') + z_q (z_p w * w') + z_{p+q} (w * w')
// Commutative, associative, weight-additive. Throws NotInH1 if an input
// term lies outside Q + H*y. Memoized on word pairs.
Poly star(const Poly& p, const Poly& q);

// The zeta-star variant: same recursion with a minus sign on the merge term,
//   z_p w *b z_q w' = z_p (w *b z_q w') + z_q (z_p w *b w') - z_{p+q} (w *b w').
Poly star_bar(const Poly& p, const Poly& q);

// Independent brute-force oracle for star: enumerates every interleaving-
// with-merges of the two exponent sequences and re-encodes them as words.
// Deliberately shares no code with star (no memo, index-level recursion).
Poly stuffle_oracle(const Index& a, const Index& b);

}  // namespace csf
