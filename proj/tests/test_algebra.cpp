#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "csf/enumeration.hpp"
#include "csf/error.hpp"
#include "csf/index.hpp"
#include "csf/poly.hpp"
#include "csf/word.hpp"

using namespace csf;

namespace {

Word W(const char* s) { return parse_word(s); }

Word random_word(std::mt19937_64& rng, int max_degree) {
  int d = static_cast<int>(rng() % (max_degree + 1));
  std::string s;
  for (int i = 0; i < d; ++i) s += (rng() & 1) ? 'y' : 'x';
  return Word(s);
}

Poly random_poly(std::mt19937_64& rng, int max_degree, int max_terms) {
  Poly p;
  int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 7);
    Rat c(num, den);
    c.canonicalize();
    p.add_term(random_word(rng, max_degree), c);
  }
  return p;
}

}  // namespace

TEST_CASE("word basics and ordering") {
  CHECK(Word::unit().empty());
  CHECK(Word::unit().text() == "1");
  CHECK(W("xyy").degree() == 3);
  CHECK(W("xyy").y_degree() == 2);
  CHECK(W("yy").is_power_of('y'));
  CHECK_FALSE(W("xy").is_power_of('y'));
  CHECK(word_less(W("y"), W("xx")));     // degree first
  CHECK(word_less(W("xxy"), W("xyy")));  // then lex with x < y
  CHECK_THROWS_AS(Word(std::string("xz")), Error);
}

TEST_CASE("index <-> word encoding") {
  CHECK(word_from_index(Index({2, 1})) == W("xyy"));
  CHECK(word_from_index(Index({3})) == W("xxy"));
  CHECK(word_from_index(Index()) == Word::unit());
  CHECK(index_from_word(W("xyy")) == Index({2, 1}));
  CHECK(index_from_word(Word::unit()) == Index());
  CHECK_THROWS_AS(index_from_word(W("xyx")), Error);
  try {
    index_from_word(W("xyx"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInH1);
  }

  // round trips both ways
  for (int weight = 0; weight <= 8; ++weight)
    for (const Index& idx : compositions_of(weight))
      CHECK(index_from_word(word_from_index(idx)) == idx);
  for (int d = 1; d <= 8; ++d)
    for (const Word& w : enumerate_words(d, WordSpace::H1))
      CHECK(word_from_index(index_from_word(w)) == w);
}

TEST_CASE("concatenation product") {
  CHECK(Poly(W("xy")) * Poly(W("y")) == Poly(W("xyy")));
  CHECK((Poly(W("x")) - Poly(W("y"))) * Poly(W("y")) == Poly(W("xy")) - Poly(W("yy")));
  CHECK(Poly(W("xy"), Rat(2)) * Poly(W("y"), Rat(3)) == Poly(W("xyy"), Rat(6)));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    Poly p = random_poly(rng, 4, 4);
    Poly q = random_poly(rng, 4, 4);
    Poly r = random_poly(rng, 4, 4);
    CHECK(p * (q * r) == (p * q) * r);
    CHECK(Poly::unit() * p == p);
    CHECK(p * Poly::unit() == p);
  }
}

TEST_CASE("classify") {
  SubspaceFlags f = classify(W("xy"));
  CHECK(f.in_h1);
  CHECK(f.in_h0);
  CHECK(f.in_check_h1);
  CHECK(f.in_check_h);

  f = classify(W("yy"));
  CHECK(f.in_h1);
  CHECK_FALSE(f.in_h0);
  CHECK_FALSE(f.in_check_h1);
  CHECK_FALSE(f.in_check_h);

  f = classify(W("xx"));
  CHECK_FALSE(f.in_h1);
  CHECK_FALSE(f.in_h0);
  CHECK_FALSE(f.in_check_h1);
  CHECK_FALSE(f.in_check_h);

  f = classify(W("yx"));
  CHECK_FALSE(f.in_h1);
  CHECK(f.in_check_h);

  f = classify(Word::unit());
  CHECK(f.in_h1);
  CHECK(f.in_h0);
  CHECK_FALSE(f.in_check_h1);
  CHECK_FALSE(f.in_check_h);

  // the subspace implications hold on every word up to degree 8
  for (int d = 0; d <= 8; ++d)
    for (const Word& w : enumerate_words(d, WordSpace::H)) {
      SubspaceFlags g = classify(w);
      if (g.in_h0) CHECK(g.in_h1);
      if (g.in_check_h1) CHECK(g.in_h1);
    }
}

TEST_CASE("cyclic canonical form") {
  CHECK(cyclic_canonical(W("yx")) == W("xy"));
  CHECK(cyclic_canonical(W("yxy")) == W("xyy"));
  CHECK(cyclic_canonical(W("xyxy")) == W("xyxy"));

  for (int d = 1; d <= 10; ++d)
    for (const Word& w : enumerate_words(d, WordSpace::H)) {
      Word c = cyclic_canonical(w);
      CHECK(cyclic_canonical(c) == c);  // idempotent
      for (std::size_t k = 0; k < w.degree(); ++k)
        CHECK(cyclic_canonical(w.rotated_left(k)) == c);
    }
}

TEST_CASE("enumerate_words") {
  std::vector<Word> v = enumerate_words(3, WordSpace::CheckH1);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == W("xxy"));
  CHECK(v[1] == W("xyy"));
  CHECK(v[2] == W("yxy"));

  CHECK(enumerate_words(1, WordSpace::CheckH1).empty());
  std::vector<Word> h1 = enumerate_words(2, WordSpace::H1);
  REQUIRE(h1.size() == 2);
  CHECK(h1[0] == W("xy"));
  CHECK(h1[1] == W("yy"));

  for (int d = 1; d <= 10; ++d) {
    CHECK(enumerate_words(d, WordSpace::H).size() == (1u << d));
    CHECK(enumerate_words(d, WordSpace::H1).size() == (1u << (d - 1)));
    if (d >= 2) CHECK(enumerate_words(d, WordSpace::CheckH1).size() == (1u << (d - 1)) - 1);
  }

  // lexicographic order
  for (int d = 1; d <= 6; ++d) {
    std::vector<Word> all = enumerate_words(d, WordSpace::H);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].letters() < all[i].letters());
  }
}

TEST_CASE("necklace counts") {
  CHECK(count_cyclic_classes(1) == 2);
  CHECK(count_cyclic_classes(2) == 3);
  CHECK(count_cyclic_classes(3) == 4);

  // against brute-force bucketing under the canonical rotation
  for (int d = 1; d <= 14; ++d) {
    std::set<std::string> classes;
    for (const Word& w : enumerate_words(d, WordSpace::H))
      classes.insert(cyclic_canonical(w).letters());
    CHECK(count_cyclic_classes(d) == static_cast<long long>(classes.size()));
  }
}

TEST_CASE("poly normalization and homogeneity") {
  Poly p;
  p.add_term(W("xy"), Rat(1));
  p.add_term(W("xy"), Rat(-1));
  CHECK(p.is_zero());
  CHECK(to_string(p) == "0");

  Poly q(W("xy"));
  q.add_term(W("yy"), Rat(1, 2));
  CHECK(q.homogeneous_degree() == 2);
  q.add_term(W("y"), Rat(1));
  CHECK_FALSE(q.homogeneous_degree().has_value());
}

TEST_CASE("poly text format round trip") {
  Poly p = Poly(W("xyy")) - Poly(W("xxy"));
  CHECK(to_string(p) == "-1*xxy + 1*xyy");
  CHECK(parse_poly(to_string(p)) == p);

  Poly with_unit = Poly(Word::unit(), Rat(3)) + Poly(W("xy"), Rat(-2, 3));
  CHECK(to_string(with_unit) == "3*1 - 2/3*xy");
  CHECK(parse_poly(to_string(with_unit)) == with_unit);

  CHECK(parse_poly("0") == Poly::zero());
  CHECK(parse_poly("xy") == Poly(W("xy")));
  CHECK(parse_poly("-xy + 2*yy") == Poly(W("yy"), Rat(2)) - Poly(W("xy")));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Poly r = random_poly(rng, 6, 6);
    CHECK(parse_poly(to_string(r)) == r);
  }

  CHECK_THROWS_AS(parse_poly("2*"), Error);
  CHECK_THROWS_AS(parse_poly("xy +"), Error);
  CHECK_THROWS_AS(parse_poly("xz"), Error);
}

TEST_CASE("index parsing") {
  CHECK(parse_index("2,1") == Index({2, 1}));
  CHECK(parse_index("7") == Index({7}));
  CHECK_THROWS_AS(parse_index(""), Error);
  CHECK_THROWS_AS(parse_index("2,0"), Error);
  CHECK_THROWS_AS(parse_index("2,"), Error);
  CHECK_THROWS_AS(parse_index("a"), Error);
  CHECK(to_string(Index({2, 1})) == "2,1");

  Index idx({3, 1, 2});
  CHECK(idx.weight() == 6);
  CHECK(idx.depth() == 3);
  CHECK(idx.admissible());
  CHECK_FALSE(Index({1, 2}).admissible());
  CHECK(Index().admissible());
}

TEST_CASE("compositions_of") {
  CHECK(compositions_of(0).size() == 1);
  CHECK(compositions_of(3).size() == 4);
  CHECK(compositions_of(7).size() == 64);
}
