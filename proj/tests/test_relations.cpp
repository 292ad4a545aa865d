#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csf/enumeration.hpp"
#include "csf/error.hpp"
#include "csf/harmonic.hpp"
#include "csf/maps.hpp"
#include "csf/operators.hpp"
#include "csf/relations.hpp"

using namespace csf;

namespace {

Poly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST_CASE("key proposition small instances") {
  KeyPropResult r = key_prop_check(1, Index({1, 1}));
  CHECK(r.equal);
  CHECK(r.lhs == P("xy + 2*yy"));
  CHECK(r.rhs == P("xy + 2*yy"));

  // depth 1: both sides vanish
  for (int k = 1; k <= 5; ++k) {
    KeyPropResult single = key_prop_check(1, Index({k}));
    CHECK(single.equal);
    CHECK(single.lhs == Poly::zero());
    CHECK(single.rhs == Poly::zero());
  }

  CHECK(key_prop_check(2, Index({2, 1})).equal);
  CHECK(key_prop_check(1, Index({2, 1})).equal);
  CHECK(key_prop_check(3, Index({3, 1, 2})).equal);
}

TEST_CASE("key proposition preconditions") {
  CHECK_THROWS_AS(key_prop_check(2, Index({1, 1})), Error);  // k_1 < n
  CHECK_THROWS_AS(key_prop_check(0, Index({1})), Error);
  CHECK_THROWS_AS(key_prop_check(1, Index()), Error);
  try {
    key_prop_check(2, Index({1, 1}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionViolation);
  }
}

TEST_CASE("key proposition closed form") {
  CHECK(key_prop_lhs_closed_form(1, Index({1, 1})) == P("xy + 2*yy"));
  CHECK(key_prop_lhs_closed_form(1, Index({2})) == Poly::zero());
  // z_3 + z_2 z_1 + z_1 z_2
  CHECK(key_prop_lhs_closed_form(1, Index({2, 1})) == P("xxy + xyy + yxy"));

  for (int weight = 1; weight <= 6; ++weight)
    for (const Index& ks : compositions_of(weight))
      for (int n = 1; n <= std::min(ks.parts.front(), 3); ++n)
        CHECK(key_prop_lhs_closed_form(n, ks) == key_prop_check(n, ks).lhs);
}

TEST_CASE("partition oracle counts match the worked examples") {
  PartitionOracleReport r2 = partition_tuple_oracle(Index({1, 2}));
  CHECK(r2.u_size == 3);
  REQUIRE(r2.i_sizes.size() == 2);
  CHECK(r2.i_sizes[0] == 1);
  CHECK(r2.i_sizes[1] == 1);
  CHECK(r2.ok());

  PartitionOracleReport r3 = partition_tuple_oracle(Index({1, 2, 4}));
  CHECK(r3.u_size == 13);
  REQUIRE(r3.i_sizes.size() == 3);
  CHECK(r3.i_sizes[0] == 5);
  CHECK(r3.i_sizes[1] == 5);
  CHECK(r3.i_sizes[2] == 5);
  CHECK(r3.ok());

  PartitionOracleReport r4 = partition_tuple_oracle(Index({1, 2, 4, 8}));
  CHECK(r4.u_size == 75);  // ordered set partitions of 4 labels
  CHECK(r4.ok());

  CHECK_THROWS_AS(partition_tuple_oracle(Index({1, 1, 1, 1, 1, 1, 1})), Error);
}

TEST_CASE("partition oracle handles repeated parts") {
  // formal labels keep colliding values apart
  PartitionOracleReport rep = partition_tuple_oracle(Index({1, 1}));
  CHECK(rep.u_size == 3);
  CHECK(rep.ok());
  CHECK(partition_tuple_oracle(Index({2, 2, 2})).ok());
}

TEST_CASE("harmonic expansion of rho_n on single exponents") {
  // k = 1 collapses both sides to the single word
  for (int n = 1; n <= 5; ++n) {
    CHECK(prop4_check(n, 1));
    CHECK(rho(n, Poly(z_word(1))) == Poly(z_word(n + 1)));
  }
  // y * z_1 expansion by hand
  CHECK(star(a_element(1), Poly(z_word(1))) == P("2*yy + xy"));
  CHECK(prop4_check(1, 2));
  CHECK(harmonic_a_expansion_check(1, 2));
  CHECK(cor3_check(1, 2));

  for (int n = 1; n <= 4; ++n)
    for (int k = 1; n + k <= 8; ++k) {
      CHECK(prop4_check(n, k));
      CHECK(harmonic_a_expansion_check(n, k));
      CHECK(cor3_check(n, k));
    }
}

TEST_CASE("special evaluations") {
  // rho_bar_1(gamma(xy) - xx) = z_2 z_1 - 2 z_3
  Poly arg = apply_automorphism(Automorphism::Gamma, P("xy")) - P("xx");
  CHECK(rho_bar(1, arg) == P("xyy - 2*xxy"));

  CHECK(special_evaluations_check(Index({2})));
  CHECK(special_evaluations_check(Index({2, 1})));
  CHECK(special_evaluations_check(Index({1, 1, 1})));
  for (int weight = 1; weight <= 6; ++weight)
    for (const Index& ks : compositions_of(weight)) CHECK(special_evaluations_check(ks));
}

TEST_CASE("cyclic sum expansion of an index") {
  CHECK(cyclic_sum_expansion(Index({2})) == P("xyy - xxy"));
  for (int weight = 1; weight <= 7; ++weight)
    for (const Index& ks : compositions_of(weight))
      CHECK(cyclic_sum_expansion(ks) == rho(1, Poly(word_from_index(ks))));
}

TEST_CASE("A-difference basis") {
  CHECK(lemma2_basis_check(2));
  CHECK(lemma2_basis_check(3));
  CHECK(lemma2_basis_check(4));
  CHECK(lemma2_basis_check(8));
  CHECK(lemma2_basis_check(10));  // certificate-only path
  CHECK_THROWS_AS(lemma2_basis_check(1), Error);
  CHECK_THROWS_AS(lemma2_basis_check(13), Error);

  // d = 2: the single element is A_2 - A_1 A_1 = xy
  Poly e = a_element(2) - a_element(1) * a_element(1);
  CHECK(e == P("xy"));
}

TEST_CASE("dimension table against the published values up to weight 8") {
  DimTable t = dims_table(8);
  const std::map<std::pair<int, int>, long long> expected{
      {{3, 1}, 1},  {{4, 1}, 2},  {{4, 2}, 1},  {{5, 1}, 4},  {{5, 2}, 3},  {{5, 3}, 1},
      {{6, 1}, 6},  {{6, 2}, 5},  {{6, 3}, 3},  {{6, 4}, 1},  {{7, 1}, 12}, {{7, 2}, 11},
      {{7, 3}, 7},  {{7, 4}, 3},  {{7, 5}, 1},  {{8, 1}, 18}, {{8, 2}, 17}, {{8, 3}, 13},
      {{8, 4}, 7},  {{8, 5}, 3},  {{8, 6}, 1},
  };
  CHECK(t.entries == expected);
  CHECK_THROWS_AS(dims_table(2), Error);
}

TEST_CASE("dim table text and json formats") {
  DimTable t = dims_table(4);
  CHECK(t.to_json() ==
        "{\"entries\":[{\"weight\":3,\"n\":1,\"dim\":1},{\"weight\":4,\"n\":1,\"dim\":2},"
        "{\"weight\":4,\"n\":2,\"dim\":1}]}");
  std::string text = t.to_text();
  CHECK(text.find("weight") == 0);
  CHECK(text.find("n=1") != std::string::npos);
  CHECK(text.find("n=2") != std::string::npos);
}

TEST_CASE("necklace closed form matches the n=1 column") {
  DimTable t = dims_table(9);
  for (int d = 2; d <= 8; ++d) CHECK(totient_dimension(d) == t.entries.at({d + 1, 1}));
  CHECK(totient_dimension(2) == 1);
  CHECK(totient_dimension(4) == 4);
  CHECK(totient_dimension(7) == 18);
  CHECK_THROWS_AS(totient_dimension(1), Error);
}

TEST_CASE("span nesting") {
  CHECK(prop5_check(1, 2));
  CHECK(prop5_check(2, 3));
  CHECK(prop5_check(1, 5));
}

TEST_CASE("fixed output weight saturation") {
  for (int weight = 3; weight <= 10; ++weight) CHECK(fixed_weight_saturation_check(weight));
}
