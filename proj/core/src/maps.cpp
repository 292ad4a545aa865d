#include "csf/maps.hpp"

#include "csf/enumeration.hpp"
#include "csf/error.hpp"

namespace csf {

namespace {

const Word kX{std::string("x")};
const Word kY{std::string("y")};

// letter images per automorphism
void letter_image(Automorphism a, char c, Poly& out) {
  switch (a) {
    case Automorphism::Gamma:
      if (c == 'x') out = Poly(kX);
      else { out = Poly(kX); out += Poly(kY); }
      break;
    case Automorphism::GammaInv:
      if (c == 'x') out = Poly(kX);
      else { out = Poly(kY); out -= Poly(kX); }
      break;
    case Automorphism::Phi:
      if (c == 'x') { out = Poly(kX); out += Poly(kY); }
      else out = Poly(kY, Rat(-1));
      break;
    case Automorphism::Alpha:
      out = Poly(c == 'x' ? kY : kX);
      break;
  }
}

Poly apply_to_word(Automorphism a, const Word& w) {
  Poly result = Poly::unit();
  Poly img;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    letter_image(a, w.at(i), img);
    result = result * img;
  }
  return result;
}

// shared body of d / alpha~: wy -> f(w)y with f multiplicative
Poly tail_twist(const Poly& p, Automorphism a, const char* who) {
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) {
      out.add_term(w, c);
      continue;
    }
    if (!w.ends_with('y'))
      fail(Errc::NotInH1, std::string(who) + ": term '" + w.text() + "' does not end in y");
    Poly head = apply_to_word(a, w.subword(0, w.degree() - 1));
    for (const auto& [hw, hc] : head.terms()) out.add_term(hw.concat(kY), Rat(hc * c));
  }
  return out;
}

}  // namespace

Poly apply_automorphism(Automorphism a, const Poly& p) {
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    Poly img = apply_to_word(a, w);
    img *= c;
    out += img;
  }
  return out;
}

const Poly& z_element() {
  static const Poly z = [] {
    Poly p(kX);
    p += Poly(kY);
    return p;
  }();
  return z;
}

Poly apply_d(const Poly& p) { return tail_twist(p, Automorphism::Gamma, "d"); }

Poly apply_d_inverse(const Poly& p) { return tail_twist(p, Automorphism::GammaInv, "d^-1"); }

Poly apply_alpha_tilde(const Poly& p) { return tail_twist(p, Automorphism::Alpha, "alpha~"); }

Poly left_mul_x(const Poly& p) {
  Poly out;
  for (const auto& [w, c] : p.terms()) out.add_term(kX.concat(w), c);
  return out;
}

Poly strip_left_x(const Poly& p) {
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    if (!w.starts_with('x'))
      fail(Errc::NotLeftDivisible, "term '" + w.text() + "' does not start with x");
    out.add_term(w.subword(1, w.degree() - 1), c);
  }
  return out;
}

Poly a_element(int j) {
  if (j < 0) fail(Errc::PreconditionViolation, "a_element requires j >= 0");
  if (j == 0) return Poly::unit();
  // (x+y)^(j-1) y: every word of degree j ending in y, coefficient 1
  Poly out;
  for (const Word& w : enumerate_words(j - 1, WordSpace::H)) out.add_term(w.concat(kY), Rat(1));
  return out;
}

}  // namespace csf
