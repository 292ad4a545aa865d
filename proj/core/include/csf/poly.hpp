#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "csf/word.hpp"

namespace csf {

// Exact rational coefficients. mpq_class values are kept canonical
// (reduced, positive denominator) by normalizing on construction.
using Rat = mpq_class;

// An element of Q<x,y>: a finite Q-linear combination of Words.
// Zero coefficients are never stored; terms iterate in canonical
// monomial order (degree, then lex with x < y).
class Poly {
 public:
  using Terms = std::map<Word, Rat, WordOrder>;

  Poly() = default;
  explicit Poly(const Word& w) { terms_.emplace(w, 1); }
  Poly(const Word& w, Rat c);

  static const Poly& zero();
  static const Poly& unit();

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Coefficient of w (zero if absent).
  Rat coeff(const Word& w) const;

  // Degree shared by every term, if the poly is homogeneous (zero counts
  // as homogeneous of any degree and reports nullopt).
  std::optional<std::size_t> homogeneous_degree() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rat& c);

  void add_term(const Word& w, const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);

  // Concatenation (ring) product, the bilinear extension of word concatenation.
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

Poly concat_product(const Poly& a, const Poly& b);

// Canonical text form: signed sum "c*w" with c as "p/q" (q=1 omitted),
// terms in canonical monomial order; the zero poly prints "0".
std::string to_string(const Poly& p);

// Parses the canonical form plus obvious variants ("xy", "-xy + 2*yy", "3*1").
Poly parse_poly(std::string_view text);

}  // namespace csf
