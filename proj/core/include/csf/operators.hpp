#pragma once

#include <cstddef>
#include <functional>

#include "csf/poly.hpp"

namespace csf {

// The cyclic sum operator rho_n (n >= 1). Per word u_1...u_l:
//   sum_j sgn(u_j) * x * u_{j+1}..u_l * (x+y)^(n-1) * u_1..u_{j-1} * y,
// sgn(x) = +1, sgn(y) = -1. Raises degree by exactly n; constants map to 0.
// Agrees with multiply_out(cyclic_tensor(n, p)) (tested, not assumed).
Poly rho(int n, const Poly& p);

// The zeta-star counterpart: per word,
//   sum_j sgn(u_j) * x * g(u_{j+1}..u_l) * y^(n-1) * g(u_1..u_{j-1}) * y
// with g = gamma^{-1}. Agrees with the cyclic_tensor_mzsv path.
Poly rho_bar(int n, const Poly& p);

// The derivation del_n: del_n(x) = x (x+y)^(n-1) y = -del_n(y), extended by
//   del_n(w w') = del_n(w) w' + w del_n(w').
Poly derivation(int n, const Poly& p);

enum class CyclicVariant { C, CBar };

// The Hoffman-Ohno cyclic derivative: the operator-valued map determined by
//   f_{w1 w2}(W) = f_{w1}(w2 W) + f_{w2}(W w1)
// with base cases  C: x -> 0, y -> (W -> x W y)  and  CBar: roles swapped.
// The result does not depend on where the word is split (property-tested);
// this entry point always splits after the first letter.
Poly cyclic_derivative(CyclicVariant variant, const Word& w, const Poly& arg);

// Same evaluation but the split position for each recursive step is chosen
// by `chooser(length)`, which must return a cut in [1, length-1]. Used to
// test split-independence.
Poly cyclic_derivative_with_splits(CyclicVariant variant, const Word& w, const Poly& arg,
                                   const std::function<std::size_t(std::size_t)>& chooser);

}  // namespace csf
