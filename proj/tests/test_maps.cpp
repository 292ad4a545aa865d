#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csf/enumeration.hpp"
#include "csf/error.hpp"
#include "csf/harmonic.hpp"
#include "csf/index.hpp"
#include "csf/maps.hpp"

using namespace csf;

namespace {

Word W(const char* s) { return parse_word(s); }
Poly P(const char* s) { return parse_poly(s); }

Word random_h1_word(std::mt19937_64& rng, int max_degree) {
  int d = static_cast<int>(rng() % (max_degree + 1));
  std::string s;
  for (int i = 0; i < d; ++i) s += (rng() & 1) ? 'y' : 'x';
  if (!s.empty()) s.back() = 'y';
  return Word(s);
}

}  // namespace

TEST_CASE("automorphism letter images") {
  CHECK(apply_automorphism(Automorphism::Gamma, Poly(W("y"))) == P("x + y"));
  CHECK(apply_automorphism(Automorphism::Gamma, Poly(W("x"))) == P("x"));
  CHECK(apply_automorphism(Automorphism::GammaInv, Poly(W("y"))) == P("-x + y"));
  CHECK(apply_automorphism(Automorphism::Phi, Poly(W("xy"))) == P("-xy - yy"));
  CHECK(apply_automorphism(Automorphism::Alpha, Poly(W("xy"))) == P("yx"));
}

TEST_CASE("automorphism structure") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    Poly p;
    for (int k = 0; k < 3; ++k) p.add_term(random_h1_word(rng, 6), Rat(1 + (rng() % 5)));
    // gamma and gamma-inv are mutually inverse
    CHECK(apply_automorphism(Automorphism::GammaInv,
                             apply_automorphism(Automorphism::Gamma, p)) == p);
    CHECK(apply_automorphism(Automorphism::Gamma,
                             apply_automorphism(Automorphism::GammaInv, p)) == p);
    // phi is an involution
    CHECK(apply_automorphism(Automorphism::Phi, apply_automorphism(Automorphism::Phi, p)) == p);
    // degree is preserved
    if (auto d = p.homogeneous_degree())
      CHECK(apply_automorphism(Automorphism::Gamma, p).homogeneous_degree() == d);
  }
}

TEST_CASE("d and alpha~") {
  CHECK(apply_d(P("xy")) == P("xy"));
  CHECK(apply_d(P("yy")) == P("xy + yy"));
  CHECK_THROWS_AS(apply_d(P("yx")), Error);
  CHECK(apply_d(Poly::unit()) == Poly::unit());

  CHECK(apply_alpha_tilde(P("xy")) == P("yy"));
  CHECK(apply_alpha_tilde(P("xxy")) == P("yyy"));
  CHECK(apply_alpha_tilde(P("yy")) == P("xy"));
  CHECK_THROWS_AS(apply_alpha_tilde(P("yx")), Error);

  // d maps H*y bijectively onto itself; the inverse twists by gamma^{-1}
  for (int d = 1; d <= 8; ++d)
    for (const Word& w : enumerate_words(d, WordSpace::H1)) {
      Poly img = apply_d(Poly(w));
      for (const auto& [iw, ic] : img.terms()) CHECK(iw.ends_with('y'));
      CHECK(apply_d_inverse(img) == Poly(w));
      CHECK(apply_d(apply_d_inverse(Poly(w))) == Poly(w));
    }
}

TEST_CASE("left x multiplication and strip") {
  CHECK(left_mul_x(P("yy")) == P("xyy"));
  CHECK(strip_left_x(P("xyy - xxy")) == P("yy - xy"));
  CHECK_THROWS_AS(strip_left_x(P("yx")), Error);
  try {
    strip_left_x(P("yx"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotLeftDivisible);
  }
  CHECK_THROWS_AS(strip_left_x(Poly::unit()), Error);
  CHECK(strip_left_x(left_mul_x(P("xy + 3*yy"))) == P("xy + 3*yy"));
  CHECK(strip_left_x(Poly::zero()) == Poly::zero());
}

TEST_CASE("a_element") {
  CHECK(a_element(0) == Poly::unit());
  CHECK(a_element(1) == P("y"));
  CHECK(a_element(2) == P("xy + yy"));
  CHECK(a_element(3) == P("xxy + xyy + yxy + yyy"));

  // (x+y) A_j = A_{j+1} for j >= 1; for j = 0 the product is A_1 + x
  for (int j = 1; j <= 7; ++j) CHECK(z_element() * a_element(j) == a_element(j + 1));
  CHECK(z_element() * a_element(0) == a_element(1) + P("x"));
}

TEST_CASE("star product basics") {
  CHECK(star(P("y"), P("y")) == P("2*yy + xy"));
  CHECK(star(P("xy"), P("y")) == P("xyy + yxy + xxy"));
  CHECK(star(Poly::unit(), P("xy")) == P("xy"));
  CHECK(star(P("xy"), Poly::unit()) == P("xy"));
  CHECK_THROWS_AS(star(P("yx"), P("y")), Error);
}

TEST_CASE("star_bar product basics") {
  CHECK(star_bar(P("y"), P("y")) == P("2*yy - xy"));
  CHECK(star_bar(P("xy"), P("y")) == P("xyy + yxy - xxy"));
  CHECK(star_bar(Poly::unit(), P("xyy")) == P("xyy"));
  CHECK_THROWS_AS(star_bar(P("yx"), P("y")), Error);
}

TEST_CASE("stuffle oracle") {
  CHECK(stuffle_oracle(Index({1}), Index({1})) == P("2*yy + xy"));
  CHECK(stuffle_oracle(Index({2}), Index({1})) == P("xyy + yxy + xxy"));
  CHECK(stuffle_oracle(Index({4}), Index()) == Poly(z_word(4)));

  // star agrees with the independent interleaving oracle on all index
  // pairs of total weight <= 8
  for (int wa = 0; wa <= 8; ++wa)
    for (const Index& a : compositions_of(wa))
      for (int wb = 0; wa + wb <= 8; ++wb)
        for (const Index& b : compositions_of(wb)) {
          Poly via_star = star(Poly(word_from_index(a)), Poly(word_from_index(b)));
          CHECK(via_star == stuffle_oracle(a, b));
        }
}

TEST_CASE("harmonic products are commutative and associative") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    Poly a{random_h1_word(rng, 3)};
    Poly b{random_h1_word(rng, 3)};
    Poly c{random_h1_word(rng, 2)};
    CHECK(star(a, b) == star(b, a));
    CHECK(star(star(a, b), c) == star(a, star(b, c)));
    CHECK(star_bar(a, b) == star_bar(b, a));
    CHECK(star_bar(star_bar(a, b), c) == star_bar(a, star_bar(b, c)));
  }
}

TEST_CASE("harmonic products add weights") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 40; ++t) {
    Word a = random_h1_word(rng, 4);
    Word b = random_h1_word(rng, 4);
    Poly prod = star(Poly(a), Poly(b));
    if (!prod.is_zero()) CHECK(prod.homogeneous_degree() == a.degree() + b.degree());
    Poly prod_bar = star_bar(Poly(a), Poly(b));
    if (!prod_bar.is_zero()) CHECK(prod_bar.homogeneous_degree() == a.degree() + b.degree());
  }
}

// (x+y)w * z_q w' = (x+y)(w * z_q w') + z_q((x+y)w * w')
TEST_CASE("left-factor recursion of star") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    int q = 1 + static_cast<int>(rng() % 4);
    Word w = random_h1_word(rng, 5);
    if (w.empty()) w = W("y");
    Word wp = random_h1_word(rng, 4);
    Poly zw = z_element() * Poly(w);
    Poly zqwp{z_word(q).concat(wp)};
    CHECK(star(zw, zqwp) ==
          z_element() * star(Poly(w), zqwp) + Poly(z_word(q)) * star(zw, Poly(wp)));
  }
}

// phi d = -d alpha~ on H*y, and d intertwines the two harmonic products
TEST_CASE("exchange identities between the two products") {
  for (int d = 1; d <= 6; ++d)
    for (const Word& w : enumerate_words(d, WordSpace::H1))
      CHECK(apply_automorphism(Automorphism::Phi, apply_d(Poly(w))) ==
            -apply_d(apply_alpha_tilde(Poly(w))));

  std::vector<Word> h1{Word::unit()};
  for (int d = 1; d <= 5; ++d)
    for (const Word& w : enumerate_words(d, WordSpace::H1)) h1.push_back(w);
  for (const Word& u : h1)
    for (const Word& v : h1) {
      if (u.degree() + v.degree() > 6) continue;
      CHECK(apply_d(star_bar(Poly(u), Poly(v))) == star(apply_d(Poly(u)), apply_d(Poly(v))));
    }
}
