#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "csf/enumeration.hpp"
#include "csf/error.hpp"
#include "csf/maps.hpp"
#include "csf/numeric.hpp"
#include "csf/operators.hpp"

using namespace csf;

namespace {

Poly P(const char* s) { return parse_poly(s); }
const TruncationParams kDefault{100000};

}  // namespace

TEST_CASE("zeta(2) against pi^2/6") {
  NumericResult r = zeta_num(Index({2}), kDefault);
  const double pi = 3.14159265358979323846;
  CHECK(std::abs(r.value - pi * pi / 6) < 1e-5);
  CHECK(std::abs(r.value - pi * pi / 6) < r.tail_bound);
  CHECK(r.M_used == 100000);
}

TEST_CASE("divergent indexes are rejected") {
  CHECK_THROWS_AS(zeta_num(Index({1}), kDefault), Error);
  CHECK_THROWS_AS(zeta_num(Index(), kDefault), Error);
  CHECK_THROWS_AS(zeta_star_num(Index({1, 2}), kDefault), Error);
  try {
    zeta_num(Index({1}), kDefault);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivergentIndex);
  }
}

TEST_CASE("depth-1 star and plain sums coincide") {
  for (int k = 2; k <= 5; ++k) {
    NumericResult a = zeta_num(Index({k}), kDefault);
    NumericResult b = zeta_star_num(Index({k}), kDefault);
    CHECK(a.value == b.value);
  }
}

TEST_CASE("classic depth-2 identities") {
  double z3 = zeta_num(Index({3}), kDefault).value;
  CHECK(std::abs(zeta_num(Index({2, 1}), kDefault).value - z3) < 1e-3);
  CHECK(std::abs(zeta_star_num(Index({2, 1}), kDefault).value - 2 * z3) < 1e-3);

  // zeta*(3,1) = zeta(3,1) + zeta(4)
  double lhs = zeta_star_num(Index({3, 1}), kDefault).value;
  double rhs = zeta_num(Index({3, 1}), kDefault).value + zeta_num(Index({4}), kDefault).value;
  CHECK(std::abs(lhs - rhs) < 1e-6);
}

TEST_CASE("monotonicity and convergence in M") {
  double v3 = zeta_num(Index({2, 1}), TruncationParams(1000)).value;
  double v4 = zeta_num(Index({2, 1}), TruncationParams(10000)).value;
  double v5 = zeta_num(Index({2, 1}), TruncationParams(100000)).value;
  CHECK(v3 <= v4);
  CHECK(v4 <= v5);

  NumericResult a = zeta_num(Index({2}), TruncationParams(100000));
  NumericResult b = zeta_num(Index({2}), TruncationParams(200000));
  CHECK(std::abs(a.value - b.value) < a.tail_bound);
}

TEST_CASE("truncation params validation") {
  CHECK_THROWS_AS(TruncationParams(5), Error);
  CHECK_THROWS_AS(TruncationParams(1000, 0.5), Error);
}

TEST_CASE("evaluate_Z on relation vectors") {
  NumericResult r = evaluate_Z(P("xyy - xxy"), kDefault);
  CHECK(std::abs(r.value) < 1e-3);
  NumericResult r2 = evaluate_Z(P("xyyy - xxxy"), kDefault);
  CHECK(std::abs(r2.value) < 1e-3);

  CHECK_THROWS_AS(evaluate_Z(P("yxy"), kDefault), Error);
  try {
    evaluate_Z(P("xy + yxy"), kDefault);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonAdmissibleWord);
    CHECK(std::string(e.what()).find("yxy") != std::string::npos);
  }

  // unit contributes exactly 1
  NumericResult u = evaluate_Z(Poly::unit(), kDefault);
  CHECK(u.value == 1.0);
  CHECK(u.tail_bound == 0.0);
}

TEST_CASE("evaluate_Z_bar") {
  // rho_bar_1(xy): zeta*(2,1) - 2 zeta*(3) = 0
  NumericResult r = evaluate_Z_bar(P("xyy - 2*xxy"), kDefault);
  CHECK(std::abs(r.value) < 1e-3);

  double z3 = zeta_num(Index({3}), kDefault).value;
  CHECK(evaluate_Z_bar(P("xxy"), kDefault).value == z3);
}

TEST_CASE("Z-bar equals Z after d on admissible words") {
  for (int weight = 3; weight <= 6; ++weight)
    for (const Word& w : enumerate_words(weight, WordSpace::H0)) {
      NumericResult zb = evaluate_Z_bar(Poly(w), kDefault);
      NumericResult zd = evaluate_Z(apply_d(Poly(w)), kDefault);
      CHECK(std::abs(zb.value - zd.value) < std::max(1e-3, zb.tail_bound + zd.tail_bound));
    }
}

TEST_CASE("numeric annihilation of operator images") {
  for (int n = 1; n <= 2; ++n)
    for (int d = 2; d + n <= 6; ++d)
      for (const Word& w : enumerate_words(d, WordSpace::CheckH1)) {
        NumericResult z = evaluate_Z(rho(n, Poly(w)), kDefault);
        CHECK(std::abs(z.value) < std::max(1e-3, z.tail_bound));
        NumericResult zb = evaluate_Z_bar(rho_bar(n, Poly(w)), kDefault);
        CHECK(std::abs(zb.value) < std::max(1e-3, zb.tail_bound));
      }
}

TEST_CASE("direct numeric cyclic sum checks") {
  CsfNumericReport mzv = csf_numeric_check(Index({2}), ZetaVariant::MZV, kDefault);
  CHECK(mzv.pass);
  CHECK(mzv.diff < 1e-3);

  CsfNumericReport mzsv = csf_numeric_check(Index({2}), ZetaVariant::MZSV, kDefault);
  CHECK(mzsv.pass);

  CHECK(csf_numeric_check(Index({2, 1}), ZetaVariant::MZV, kDefault).pass);
  CHECK(csf_numeric_check(Index({2, 1}), ZetaVariant::MZSV, kDefault).pass);
  CHECK(csf_numeric_check(Index({3, 1, 2}), ZetaVariant::MZV, kDefault).pass);

  CHECK_THROWS_AS(csf_numeric_check(Index({1, 1}), ZetaVariant::MZV, kDefault), Error);
  try {
    csf_numeric_check(Index({1, 1}), ZetaVariant::MZV, kDefault);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionViolation);
  }
}
