#include "csf/verify.hpp"

#include <cmath>
#include <map>
#include <random>

#include "csf/enumeration.hpp"
#include "csf/error.hpp"
#include "csf/harmonic.hpp"
#include "csf/maps.hpp"
#include "csf/numeric.hpp"
#include "csf/operators.hpp"
#include "csf/relations.hpp"
#include "csf/tensor.hpp"

namespace csf {

namespace {

struct Checker {
  SuiteReport rep;
  explicit Checker(std::string name) { rep.suite = std::move(name); }
  void check(bool ok, const std::string& label) {
    ++rep.cases;
    if (!ok) {
      ++rep.failures;
      if (rep.first_counterexample.empty()) rep.first_counterexample = label;
    }
  }
};

int pick(int def, int override_) { return override_ > 0 ? override_ : def; }
long pickl(long def, long override_) { return override_ > 0 ? override_ : def; }

std::vector<Word> all_words_up_to(int max_degree) {
  std::vector<Word> out;
  for (int d = 0; d <= max_degree; ++d)
    for (Word& w : enumerate_words(d, WordSpace::H)) out.push_back(std::move(w));
  return out;
}

// rho_1 is constant on rotation classes
SuiteReport suite_lemma1(const SuiteOptions& o) {
  Checker ck("lemma1");
  const int max_degree = pick(10, o.max_degree);
  for (int d = 1; d <= max_degree; ++d) {
    std::map<Word, Poly, WordOrder> by_class;
    for (const Word& w : enumerate_words(d, WordSpace::H)) {
      Word canon = cyclic_canonical(w);
      auto it = by_class.find(canon);
      if (it == by_class.end()) it = by_class.emplace(canon, rho(1, Poly(canon))).first;
      ck.check(rho(1, Poly(w)) == it->second, "rho_1 differs across rotations of " + w.text());
    }
  }
  return ck.rep;
}

// rho_n = d o rho_bar_n
SuiteReport suite_lemma3(const SuiteOptions& o) {
  Checker ck("lemma3");
  const int max_degree = pick(8, o.max_degree);
  const int max_n = pick(3, o.max_n);
  for (const Word& w : all_words_up_to(max_degree))
    for (int n = 1; n <= max_n; ++n)
      ck.check(rho(n, Poly(w)) == apply_d(rho_bar(n, Poly(w))),
               "d(rho_bar_" + std::to_string(n) + ") != rho_" + std::to_string(n) + " at " +
                   w.text());
  return ck.rep;
}

// (x+y)w * z_q w' = (x+y)(w * z_q w') + z_q((x+y)w * w')
SuiteReport suite_lemma4(const SuiteOptions& o) {
  Checker ck("lemma4");
  const int instances = pick(200, o.instances);
  std::mt19937_64 rng(o.seed);
  auto random_word = [&](int degree, bool force_tail_y) {
    std::string s;
    for (int i = 0; i < degree; ++i) s += (rng() & 1) ? 'y' : 'x';
    if (force_tail_y && !s.empty()) s.back() = 'y';
    return Word(std::move(s));
  };
  for (int t = 0; t < instances; ++t) {
    int q = static_cast<int>(rng() % 4) + 1;
    Word w = random_word(static_cast<int>(rng() % 5) + 1, true);    // in H*y
    Word wp = random_word(static_cast<int>(rng() % 5), true);       // in Q + H*y
    Poly zw = z_element() * Poly(w);
    Poly zqwp{z_word(q).concat(wp)};
    Poly lhs = star(zw, zqwp);
    Poly rhs = z_element() * star(Poly(w), zqwp) + Poly(z_word(q)) * star(zw, Poly(wp));
    ck.check(lhs == rhs, "q=" + std::to_string(q) + " w=" + w.text() + " w'=" + wp.text());
  }
  return ck.rep;
}

// phi d = -d alpha~ on H*y
SuiteReport suite_eq10(const SuiteOptions& o) {
  Checker ck("eq10");
  const int max_weight = pick(7, o.max_weight);
  for (int d = 1; d <= max_weight; ++d)
    for (const Word& w : enumerate_words(d, WordSpace::H1)) {
      Poly lhs = apply_automorphism(Automorphism::Phi, apply_d(Poly(w)));
      Poly rhs = -apply_d(apply_alpha_tilde(Poly(w)));
      ck.check(lhs == rhs, "phi(d(w)) != -d(alpha~(w)) at " + w.text());
    }
  return ck.rep;
}

// d(u *b v) = d(u) * d(v)
SuiteReport suite_eq11(const SuiteOptions& o) {
  Checker ck("eq11");
  const int max_weight = pick(7, o.max_weight);
  std::vector<Word> h1;
  h1.push_back(Word::unit());
  for (int d = 1; d <= max_weight; ++d)
    for (Word& w : enumerate_words(d, WordSpace::H1)) h1.push_back(std::move(w));
  for (std::size_t i = 0; i < h1.size(); ++i)
    for (std::size_t j = i; j < h1.size(); ++j) {
      const Word& u = h1[i];
      const Word& v = h1[j];
      if (static_cast<int>(u.degree() + v.degree()) > max_weight) continue;
      ck.check(apply_d(star_bar(Poly(u), Poly(v))) == star(apply_d(Poly(u)), apply_d(Poly(v))),
               "d(u *b v) != d(u) * d(v) at u=" + u.text() + " v=" + v.text());
    }
  return ck.rep;
}

// rho_n((x+y)w) = rho_{n+1}(w)
SuiteReport suite_eq13(const SuiteOptions& o) {
  Checker ck("eq13");
  const int max_degree = pick(8, o.max_degree);
  const int max_n = pick(3, o.max_n);
  for (const Word& w : all_words_up_to(max_degree))
    for (int n = 1; n <= max_n; ++n)
      ck.check(rho(n, z_element() * Poly(w)) == rho(n + 1, Poly(w)),
               "rho_" + std::to_string(n) + "((x+y)w) != rho_" + std::to_string(n + 1) +
                   "(w) at " + w.text());
  return ck.rep;
}

// rho_1(w) = (CBar_w - C_w)(1)
SuiteReport suite_prop1(const SuiteOptions& o) {
  Checker ck("prop1");
  const int max_weight = pick(8, o.max_weight);
  for (const Word& w : all_words_up_to(max_weight)) {
    Poly rhs = cyclic_derivative(CyclicVariant::CBar, w, Poly::unit()) -
               cyclic_derivative(CyclicVariant::C, w, Poly::unit());
    ck.check(rho(1, Poly(w)) == rhs, "rho_1 != (CBar - C)(1) at " + w.text());
  }
  return ck.rep;
}

// rho_n images lie in the Kawashima star span (with verified certificates)
SuiteReport suite_kawashima_impl(const char* name, HarmonicVariant variant,
                                 const SuiteOptions& o) {
  Checker ck(name);
  const int max_weight = pick(9, o.max_weight);
  const int max_n = pick(3, o.max_n);
  std::map<int, SpanSolver> solver_by_weight;
  for (int n = 1; n <= max_n; ++n) {
    for (int d = 2; d + n <= max_weight; ++d) {
      const int weight = d + n;
      auto it = solver_by_weight.find(weight);
      if (it == solver_by_weight.end())
        it = solver_by_weight.emplace(weight, SpanSolver(kawashima_span(weight, variant))).first;
      for (const Word& w : enumerate_words(d, WordSpace::CheckH1)) {
        Poly image = variant == HarmonicVariant::Star ? rho(n, Poly(w)) : rho_bar(n, Poly(w));
        ck.check(it->second.solve(image).member,
                 std::string(variant == HarmonicVariant::Star ? "rho_" : "rho_bar_") +
                     std::to_string(n) + "(" + w.text() + ") not in span");
      }
    }
  }
  return ck.rep;
}

SuiteReport suite_prop4(const SuiteOptions& o) {
  Checker ck("prop4");
  const int max_sum = pick(9, o.max_weight);
  for (int n = 1; n < max_sum; ++n)
    for (int k = 1; n + k <= max_sum; ++k) {
      std::string at = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
      ck.check(prop4_check(n, k), "rho_n(z_k) != L_x phi(A_{k-1} * z_n)" + at);
      ck.check(harmonic_a_expansion_check(n, k), "A_{k-1} * z_n expansion" + at);
      ck.check(cor3_check(n, k), "rho_n(y z_k) corollary" + at);
    }
  return ck.rep;
}

SuiteReport suite_prop5(const SuiteOptions& o) {
  Checker ck("prop5");
  const int max_d = pick(7, o.max_degree);
  const int max_n = pick(3, o.max_n);
  for (int n = 1; n <= max_n; ++n)
    for (int d = 2; d <= max_d; ++d)
      ck.check(prop5_check(n, d),
               "span nesting fails at n=" + std::to_string(n) + " d=" + std::to_string(d));
  return ck.rep;
}

SuiteReport suite_keyprop(const SuiteOptions& o) {
  Checker ck("keyprop");
  const int max_weight = pick(7, o.max_weight);
  const int max_n = pick(3, o.max_n);
  for (int weight = 1; weight <= max_weight; ++weight)
    for (const Index& ks : compositions_of(weight))
      for (int n = 1; n <= std::min(ks.parts.front(), max_n); ++n) {
        KeyPropResult r = key_prop_check(n, ks);
        std::string at = " at n=" + std::to_string(n) + " ks=(" + to_string(ks) + ")";
        ck.check(r.equal, "key identity" + at);
        ck.check(key_prop_lhs_closed_form(n, ks) == r.lhs, "closed form of lhs" + at);
      }
  return ck.rep;
}

// (CBar_w - C_w)(1) equals the explicit double-sum expansion
SuiteReport suite_eq6(const SuiteOptions& o) {
  Checker ck("eq6");
  const int max_weight = pick(8, o.max_weight);
  for (int weight = 1; weight <= max_weight; ++weight)
    for (const Index& ks : compositions_of(weight)) {
      Word w = word_from_index(ks);
      Poly lhs = cyclic_derivative(CyclicVariant::CBar, w, Poly::unit()) -
                 cyclic_derivative(CyclicVariant::C, w, Poly::unit());
      ck.check(lhs == cyclic_sum_expansion(ks), "expansion differs at ks=(" + to_string(ks) + ")");
    }
  return ck.rep;
}

SuiteReport suite_eq7eq8(const SuiteOptions& o) {
  Checker ck("eq7eq8");
  const int max_l = pick(4, o.max_degree);
  // distinct parts so the set-partition reading is faithful to symbols
  std::vector<int> symbolic{1, 2, 4, 8, 16, 32};
  for (int l = 1; l <= max_l; ++l) {
    Index ks(std::vector<int>(symbolic.begin(), symbolic.begin() + l));
    PartitionOracleReport rep = partition_tuple_oracle(ks);
    ck.check(rep.sum_identity_ok, "partition sum identity fails at l=" + std::to_string(l));
    ck.check(rep.cover_identity_ok, "partition cover identity fails at l=" + std::to_string(l));
  }
  return ck.rep;
}

SuiteReport suite_special(const SuiteOptions& o) {
  Checker ck("special");
  const int max_weight = pick(7, o.max_weight);
  for (int weight = 1; weight <= max_weight; ++weight)
    for (const Index& ks : compositions_of(weight))
      ck.check(special_evaluations_check(ks), "special evaluation at ks=(" + to_string(ks) + ")");
  return ck.rep;
}

SuiteReport suite_lemma2(const SuiteOptions& o) {
  Checker ck("lemma2");
  const int max_d = pick(12, o.max_degree);
  for (int d = 2; d <= max_d; ++d)
    ck.check(lemma2_basis_check(d), "A-difference basis fails at d=" + std::to_string(d));
  return ck.rep;
}

SuiteReport suite_numeric(const SuiteOptions& o) {
  Checker ck("numeric");
  const int max_weight = pick(7, o.max_weight);
  const int max_n = pick(2, o.max_n);
  TruncationParams params(pickl(100000, o.M));

  // rho_n images annihilate Z, rho_bar_n images annihilate Z-bar
  for (int n = 1; n <= max_n; ++n)
    for (int d = 2; d + n <= max_weight; ++d)
      for (const Word& w : enumerate_words(d, WordSpace::CheckH1)) {
        NumericResult z = evaluate_Z(rho(n, Poly(w)), params);
        ck.check(std::abs(z.value) < std::max(1e-3, z.tail_bound),
                 "Z(rho_" + std::to_string(n) + "(" + w.text() + ")) = " +
                     std::to_string(z.value));
        NumericResult zb = evaluate_Z_bar(rho_bar(n, Poly(w)), params);
        ck.check(std::abs(zb.value) < std::max(1e-3, zb.tail_bound),
                 "Zbar(rho_bar_" + std::to_string(n) + "(" + w.text() + ")) = " +
                     std::to_string(zb.value));
      }

  // spot checks: zeta(2,1) = zeta(3), zeta*(2,1) = 2 zeta(3)
  double z3 = zeta_num(Index({3}), params).value;
  ck.check(std::abs(zeta_num(Index({2, 1}), params).value - z3) < 1e-3, "zeta(2,1) vs zeta(3)");
  ck.check(std::abs(zeta_star_num(Index({2, 1}), params).value - 2 * z3) < 1e-3,
           "zeta*(2,1) vs 2 zeta(3)");
  ck.check(csf_numeric_check(Index({2}), ZetaVariant::MZV, params).pass, "cyclic sum of (2)");
  ck.check(csf_numeric_check(Index({2}), ZetaVariant::MZSV, params).pass,
           "star cyclic sum of (2)");

  // Zbar = Z o d on admissible words
  for (int weight = 3; weight <= std::min(max_weight, 6); ++weight)
    for (const Word& w : enumerate_words(weight, WordSpace::H0)) {
      NumericResult zb = evaluate_Z_bar(Poly(w), params);
      NumericResult zd = evaluate_Z(apply_d(Poly(w)), params);
      ck.check(std::abs(zb.value - zd.value) <
                   std::max(1e-3, zb.tail_bound + zd.tail_bound),
               "Zbar vs Z(d(.)) at " + w.text());
    }
  return ck.rep;
}

}  // namespace

SuiteReport tensor_equivalence_suite(int max_degree, int max_n) {
  Checker ck("tensorpath");
  for (const Word& w : all_words_up_to(max_degree))
    for (int n = 1; n <= max_n; ++n) {
      ck.check(rho(n, Poly(w)) == multiply_out(cyclic_tensor(n, Poly(w))),
               "rho_" + std::to_string(n) + " fast path differs at " + w.text());
      ck.check(rho_bar(n, Poly(w)) == multiply_out(cyclic_tensor_mzsv(n, Poly(w))),
               "rho_bar_" + std::to_string(n) + " fast path differs at " + w.text());
    }
  return ck.rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "lemma1", "lemma3", "lemma4", "eq10",    "eq11",   "eq13",
      "prop1",  "prop3",  "prop4",  "prop5",   "keyprop", "eq6",
      "eq7eq8", "special", "lemma2", "kawashima", "numeric"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "lemma1") return suite_lemma1(opts);
  if (name == "lemma3") return suite_lemma3(opts);
  if (name == "lemma4") return suite_lemma4(opts);
  if (name == "eq10") return suite_eq10(opts);
  if (name == "eq11") return suite_eq11(opts);
  if (name == "eq13") return suite_eq13(opts);
  if (name == "prop1") return suite_prop1(opts);
  if (name == "prop3") return suite_kawashima_impl("prop3", HarmonicVariant::StarBar, opts);
  if (name == "prop4") return suite_prop4(opts);
  if (name == "prop5") return suite_prop5(opts);
  if (name == "keyprop") return suite_keyprop(opts);
  if (name == "eq6") return suite_eq6(opts);
  if (name == "eq7eq8") return suite_eq7eq8(opts);
  if (name == "special") return suite_special(opts);
  if (name == "lemma2") return suite_lemma2(opts);
  if (name == "kawashima")
    return suite_kawashima_impl("kawashima", HarmonicVariant::Star, opts);
  if (name == "numeric") return suite_numeric(opts);
  fail(Errc::UnknownSuite, "unknown suite '" + name + "'");
}

}  // namespace csf
