#include "csf/operators.hpp"

#include "csf/enumeration.hpp"
#include "csf/error.hpp"
#include "csf/maps.hpp"

namespace csf {

namespace {

void require_n(int n) {
  if (n < 1) fail(Errc::PreconditionViolation, "operator order n must be >= 1");
}

const Word kX{std::string("x")};
const Word kY{std::string("y")};

Poly rho_word(int n, const Word& w) {
  Poly out;
  if (w.empty()) return out;
  // middle factor (x+y)^(n-1), expanded once
  std::vector<Word> middles = enumerate_words(n - 1, WordSpace::H);
  const std::size_t l = w.degree();
  for (std::size_t j = 0; j < l; ++j) {
    Rat sign(w.at(j) == 'x' ? 1 : -1);
    Word head = kX.concat(w.subword(j + 1, l - j - 1));
    Word tail = w.subword(0, j).concat(kY);
    for (const Word& m : middles) out.add_term(head.concat(m).concat(tail), sign);
  }
  return out;
}

Poly rho_bar_word(int n, const Word& w) {
  Poly out;
  if (w.empty()) return out;
  const Word mid = letter_power('y', static_cast<std::size_t>(n - 1));
  const std::size_t l = w.degree();
  for (std::size_t j = 0; j < l; ++j) {
    Rat sign(w.at(j) == 'x' ? 1 : -1);
    Poly after = apply_automorphism(Automorphism::GammaInv, Poly(w.subword(j + 1, l - j - 1)));
    Poly before = apply_automorphism(Automorphism::GammaInv, Poly(w.subword(0, j)));
    for (const auto& [aw, ac] : after.terms())
      for (const auto& [bw, bc] : before.terms())
        out.add_term(kX.concat(aw).concat(mid).concat(bw).concat(kY), Rat(sign * ac * bc));
  }
  return out;
}

}  // namespace

Poly rho(int n, const Poly& p) {
  require_n(n);
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    Poly img = rho_word(n, w);
    img *= c;
    out += img;
  }
  return out;
}

Poly rho_bar(int n, const Poly& p) {
  require_n(n);
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    Poly img = rho_bar_word(n, w);
    img *= c;
    out += img;
  }
  return out;
}

Poly derivation(int n, const Poly& p) {
  require_n(n);
  // del_n(x) = x (x+y)^(n-1) y, del_n(y) = -that, Leibniz over each word
  Poly image_of_x;
  for (const Word& m : enumerate_words(n - 1, WordSpace::H))
    image_of_x.add_term(kX.concat(m).concat(kY), Rat(1));

  Poly out;
  for (const auto& [w, c] : p.terms()) {
    const std::size_t l = w.degree();
    for (std::size_t j = 0; j < l; ++j) {
      Rat sign(w.at(j) == 'x' ? 1 : -1);
      Word before = w.subword(0, j);
      Word after = w.subword(j + 1, l - j - 1);
      for (const auto& [mw, mc] : image_of_x.terms())
        out.add_term(before.concat(mw).concat(after), Rat(c * sign * mc));
    }
  }
  return out;
}

namespace {

Poly cderiv_rec(CyclicVariant variant, const Word& w, const Poly& arg,
                const std::function<std::size_t(std::size_t)>& chooser) {
  if (w.empty()) return Poly::zero();
  if (w.degree() == 1) {
    const bool active =
        (variant == CyclicVariant::C) ? (w.at(0) == 'y') : (w.at(0) == 'x');
    if (!active) return Poly::zero();
    // W -> x W y
    Poly out;
    const Word x{std::string("x")};
    const Word y{std::string("y")};
    for (const auto& [aw, ac] : arg.terms()) out.add_term(x.concat(aw).concat(y), ac);
    return out;
  }
  std::size_t cut = chooser(w.degree());
  if (cut < 1 || cut >= w.degree())
    fail(Errc::PreconditionViolation, "cyclic derivative split out of range");
  Word w1 = w.subword(0, cut);
  Word w2 = w.subword(cut, w.degree() - cut);
  return cderiv_rec(variant, w1, Poly(w2) * arg, chooser) +
         cderiv_rec(variant, w2, arg * Poly(w1), chooser);
}

}  // namespace

Poly cyclic_derivative_with_splits(CyclicVariant variant, const Word& w, const Poly& arg,
                                   const std::function<std::size_t(std::size_t)>& chooser) {
  return cderiv_rec(variant, w, arg, chooser);
}

Poly cyclic_derivative(CyclicVariant variant, const Word& w, const Poly& arg) {
  return cderiv_rec(variant, w, arg, [](std::size_t) { return std::size_t{1}; });
}

}  // namespace csf
