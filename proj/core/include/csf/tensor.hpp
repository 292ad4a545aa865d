#pragma once

#include <map>
#include <string>
#include <vector>

#include "csf/poly.hpp"

namespace csf {

// A Q-linear combination of (n+1)-tuples of Words: an element of the
// (n+1)-fold tensor power of Q<x,y>. Every stored tuple has exactly
// `rank` slots and a nonzero coefficient.
class Tensor {
 public:
  using Slots = std::vector<Word>;
  struct SlotsOrder {
    bool operator()(const Slots& a, const Slots& b) const noexcept {
      for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (!(a[i] == b[i])) return word_less(a[i], b[i]);
      }
      return a.size() < b.size();
    }
  };
  using Terms = std::map<Slots, Rat, SlotsOrder>;

  explicit Tensor(int rank);

  int rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Slots& slots, const Rat& c);

  Tensor& operator+=(const Tensor& rhs);
  Tensor& operator*=(const Rat& c);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  int rank_;
  Terms terms_;
};

// Inner bimodule action: a acts on the last slot from the left,
// b acts on the first slot from the right.
Tensor diamond_left(const Poly& a, const Tensor& t);
Tensor diamond_right(const Tensor& t, const Poly& b);

// Outer bimodule action: a acts on the first slot from the left,
// b acts on the last slot from the right.
Tensor outer_left(const Poly& a, const Tensor& t);
Tensor outer_right(const Tensor& t, const Poly& b);

// Concatenates the slots of every term, linearly.
Poly multiply_out(const Tensor& t);

// The tensor-valued cyclic map behind rho_n: sends both letters to
// +/- (x (x+y)^{x(n-1)} y) and extends by the inner-action Leibniz rule
//   T(w w') = T(w) <> w'  +  w <> T(w').
// Constants map to zero. This is the reference path; rho() is the fast path.
Tensor cyclic_tensor(int n, const Poly& p);

// Variant behind rho_bar_n: letters map to +/- (x y^{xn}) and the Leibniz
// rule twists both outer factors by gamma^{-1}.
Tensor cyclic_tensor_mzsv(int n, const Poly& p);

// Variant behind the derivation del_n: same letter values as cyclic_tensor
// but the Leibniz rule uses the outer action.
Tensor derivation_tensor(int n, const Poly& p);

}  // namespace csf
