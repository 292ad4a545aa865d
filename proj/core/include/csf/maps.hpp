#pragma once

#include "csf/poly.hpp"

namespace csf {

// Multiplicative substitutions on Q<x,y>:
//   Gamma:    x -> x,   y -> x+y
//   GammaInv: x -> x,   y -> y-x
//   Phi:      x -> x+y, y -> -y      (an involution)
//   Alpha:    x -> y,   y -> x
enum class Automorphism { Gamma, GammaInv, Phi, Alpha };

Poly apply_automorphism(Automorphism a, const Poly& p);

// x + y as a Poly.
const Poly& z_element();

// The linear map w*y -> gamma(w)*y on Q + H*y (unit fixed).
// Throws NotInH1 on terms outside Q + H*y.
Poly apply_d(const Poly& p);

// Inverse of apply_d: w*y -> gamma^{-1}(w)*y.
Poly apply_d_inverse(const Poly& p);

// The linear map w*y -> alpha(w)*y on Q + H*y (unit fixed).
Poly apply_alpha_tilde(const Poly& p);

// Left multiplication by x.
Poly left_mul_x(const Poly& p);

// Removes a leading x from every term; throws NotLeftDivisible if some
// term starts with y or is the unit.
Poly strip_left_x(const Poly& p);

// A_0 = 1 and A_j = (x+y)^(j-1) * y for j >= 1, fully expanded.
Poly a_element(int j);

}  // namespace csf
