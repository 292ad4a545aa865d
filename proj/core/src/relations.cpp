#include "csf/relations.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "csf/enumeration.hpp"
#include "csf/error.hpp"
#include "csf/harmonic.hpp"
#include "csf/maps.hpp"
#include "csf/operators.hpp"
#include "csf/parallel.hpp"

namespace csf {

LinearSystem kawashima_span(int weight, HarmonicVariant variant) {
  if (weight < 3) fail(Errc::PreconditionViolation, "kawashima_span requires weight >= 3");
  std::vector<std::pair<std::string, Poly>> rows;
  const int total = weight - 1;  // deg u + deg v
  for (int du = 1; du <= total - 1; ++du) {
    int dv = total - du;
    if (dv < du) break;  // unordered pairs: the product is symmetric
    std::vector<Word> us = enumerate_words(du, WordSpace::H1);
    std::vector<Word> vs = enumerate_words(dv, WordSpace::H1);
    for (const Word& u : us)
      for (const Word& v : vs) {
        if (du == dv && word_less(v, u)) continue;
        Poly g;
        std::string label;
        if (variant == HarmonicVariant::Star) {
          g = left_mul_x(apply_automorphism(Automorphism::Phi, star(Poly(u), Poly(v))));
          label = "x*phi(" + u.text() + " * " + v.text() + ")";
        } else {
          g = left_mul_x(apply_alpha_tilde(star_bar(Poly(u), Poly(v))));
          label = "x*alpha~(" + u.text() + " *b " + v.text() + ")";
        }
        if (g.is_zero()) continue;
        rows.emplace_back(std::move(label), std::move(g));
      }
  }
  return LinearSystem::build(weight, std::move(rows));
}

namespace {

void require_key_prop_args(int n, const Index& ks) {
  if (n < 1) fail(Errc::PreconditionViolation, "key proposition requires n >= 1");
  if (ks.depth() < 1) fail(Errc::PreconditionViolation, "key proposition requires l >= 1");
  if (ks.parts.front() < n)
    fail(Errc::PreconditionViolation, "key proposition requires k_1 >= n");
}

// z_{k_{j+off}} ... z_{k_{j+off+len-1}}, subscripts cyclic in the index
Word cyclic_block(const Index& ks, int j, int off, int len) {
  const int l = ks.depth();
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(len));
  for (int s = 0; s < len; ++s) parts.push_back(ks.parts[static_cast<std::size_t>((j + off + s) % l)]);
  return word_from_index(Index(std::move(parts)));
}

}  // namespace

KeyPropResult key_prop_check(int n, const Index& ks) {
  require_key_prop_args(n, ks);
  const int l = ks.depth();
  const int K = ks.weight();

  Poly arg = a_element(K - n + 1);
  Poly prod = a_element(ks.parts.front() - n + 1);
  for (int i = 1; i < l; ++i) prod = prod * a_element(ks.parts[static_cast<std::size_t>(i)]);
  arg -= prod;

  KeyPropResult res;
  res.lhs = apply_automorphism(Automorphism::Phi, strip_left_x(rho(n, arg)));

  for (int m = 2; m <= l; ++m) {
    Rat coeff((l - m) % 2 == 0 ? 1 : -1, m);
    std::vector<Index> comps;
    for (const Index& c : compositions_of(l))
      if (c.depth() == m) comps.push_back(c);
    for (int j = 0; j < l; ++j) {
      for (const Index& alpha : comps) {
        Poly h = Poly::unit();
        int off = 0;
        for (int t = 0; t < m; ++t) {
          int len = alpha.parts[static_cast<std::size_t>(t)];
          h = star(h, Poly(cyclic_block(ks, j, off, len)));
          off += len;
        }
        h *= coeff;
        res.rhs += h;
      }
    }
  }
  res.equal = res.lhs == res.rhs;
  return res;
}

Poly key_prop_lhs_closed_form(int n, const Index& ks) {
  require_key_prop_args(n, ks);
  const int l = ks.depth();
  Poly out(z_word(ks.weight()));
  Rat sign(l % 2 == 0 ? 1 : -1);
  for (int j = 0; j < l; ++j) out.add_term(cyclic_block(ks, j, 0, l), sign);
  return out;
}

PartitionOracleReport partition_tuple_oracle(const Index& ks) {
  const int l = ks.depth();
  if (l < 1) fail(Errc::PreconditionViolation, "partition oracle requires l >= 1");
  if (l > 6) fail(Errc::PreconditionViolation, "partition oracle limited to l <= 6");

  PartitionOracleReport rep;
  rep.l = l;
  rep.i_sizes.assign(static_cast<std::size_t>(l), 0);

  // U as ordered set partitions of the labels {0..l-1}: enumerate surjections
  // onto {0..m-1} for every block count m. Components take value sums.
  Poly u_sum;
  bool cover_ok = true;
  std::vector<int> block_of(static_cast<std::size_t>(l), 0);
  for (int m = 1; m <= l; ++m) {
    auto rec = [&](auto&& self, int label) -> void {
      if (label == l) {
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        for (int i = 0; i < l; ++i) used[static_cast<std::size_t>(block_of[static_cast<std::size_t>(i)])] = true;
        if (std::find(used.begin(), used.end(), false) != used.end()) return;  // not surjective
        ++rep.u_size;

        std::vector<int> component(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < l; ++i)
          component[static_cast<std::size_t>(block_of[static_cast<std::size_t>(i)])] +=
              ks.parts[static_cast<std::size_t>(i)];
        u_sum.add_term(word_from_index(Index(std::move(component))), Rat(1));

        bool in_some_i = false;
        for (int i = 0; i < l; ++i) {
          if (block_of[static_cast<std::size_t>(i)] <
              block_of[static_cast<std::size_t>((i + 1) % l)]) {
            ++rep.i_sizes[static_cast<std::size_t>(i)];
            in_some_i = true;
          }
        }
        // U minus the one-block partition must be exactly the union of the I_i
        if ((m != 1) != in_some_i) cover_ok = false;
        return;
      }
      for (int b = 0; b < m; ++b) {
        block_of[static_cast<std::size_t>(label)] = b;
        self(self, label + 1);
      }
    };
    rec(rec, 0);
  }

  Poly star_prod = Poly::unit();
  for (int k : ks.parts) star_prod = star(star_prod, Poly(z_word(k)));

  rep.sum_identity_ok = u_sum == star_prod;
  rep.cover_identity_ok = cover_ok;
  return rep;
}

bool prop4_check(int n, int k) {
  if (n < 1 || k < 1) fail(Errc::PreconditionViolation, "prop4_check requires n, k >= 1");
  Poly lhs = rho(n, Poly(z_word(k)));
  Poly rhs = left_mul_x(
      apply_automorphism(Automorphism::Phi, star(a_element(k - 1), Poly(z_word(n)))));
  return lhs == rhs;
}

bool harmonic_a_expansion_check(int n, int k) {
  if (n < 1 || k < 1)
    fail(Errc::PreconditionViolation, "harmonic_a_expansion_check requires n, k >= 1");
  Poly lhs = star(a_element(k - 1), Poly(z_word(n)));
  Poly rhs;
  Poly xpow{letter_power('x', static_cast<std::size_t>(n - 1))};
  for (int i = 1; i <= k; ++i) rhs += a_element(k - i) * xpow * a_element(i);
  return lhs == rhs;
}

bool cor3_check(int n, int k) {
  if (n < 1 || k < 1) fail(Errc::PreconditionViolation, "cor3_check requires n, k >= 1");
  Poly lhs = rho(n, Poly(Word(std::string("y")).concat(z_word(k))));
  Poly inner = star(a_element(k - 1), Poly(z_word(n + 1)));
  inner -= star(a_element(k), Poly(z_word(n)));
  Poly rhs = left_mul_x(apply_automorphism(Automorphism::Phi, inner));
  return lhs == rhs;
}

namespace {

// sum_{j,i} z_{k_j - i + 1} (rotation past j) z_i
Poly rotation_double_sum(const Index& ks) {
  const int l = ks.depth();
  Poly out;
  for (int j = 0; j < l; ++j) {
    int kj = ks.parts[static_cast<std::size_t>(j)];
    Word rot = cyclic_block(ks, j, 1, l - 1);  // z_{k_{j+1}} .. z_{k_{j-1}}
    for (int i = 1; i <= kj - 1; ++i)
      out.add_term(z_word(kj - i + 1).concat(rot).concat(z_word(i)), Rat(1));
  }
  return out;
}

}  // namespace

Poly cyclic_sum_expansion(const Index& ks) {
  const int l = ks.depth();
  if (l < 1) fail(Errc::PreconditionViolation, "cyclic_sum_expansion requires l >= 1");
  Poly out = rotation_double_sum(ks);
  const Word x{std::string("x")};
  for (int j = 0; j < l; ++j) out.add_term(x.concat(cyclic_block(ks, j, 1, l)), Rat(-1));
  return out;
}

bool special_evaluations_check(const Index& ks) {
  const int l = ks.depth();
  if (l < 1) fail(Errc::PreconditionViolation, "special evaluations require l >= 1");
  const int K = ks.weight();
  const Word w = word_from_index(ks);

  Poly double_sum = rotation_double_sum(ks);

  // rho_1(w) = double_sum - sum_j x z_{k_{j+1}} .. z_{k_j}
  bool ok_a = rho(1, Poly(w)) == cyclic_sum_expansion(ks);

  // rho_bar_1(gamma(w) - x^K) = double_sum - K z_{K+1}
  Poly arg = apply_automorphism(Automorphism::Gamma, Poly(w));
  arg -= Poly(letter_power('x', static_cast<std::size_t>(K)));
  Poly rhs_b = double_sum;
  rhs_b.add_term(z_word(K + 1), Rat(-K));
  bool ok_b = rho_bar(1, arg) == rhs_b;

  return ok_a && ok_b;
}

bool lemma2_basis_check(int d) {
  if (d < 2 || d > 12) fail(Errc::PreconditionViolation, "lemma2_basis_check requires 2 <= d <= 12");

  const Poly a_top = a_element(d);
  const long long expected = (1LL << (d - 1)) - 1;

  // Leading-word certificate: the lex-least word of A_{k_1}..A_{k_l} is the
  // z-encoding of (k_1..k_l) with coefficient 1, so the products carry
  // pairwise distinct leading words and are linearly independent.
  std::set<std::string> leads;
  long long e_count = 0;
  bool ok = true;
  std::vector<std::pair<std::string, Poly>> e_rows;
  for (const Index& comp : compositions_of(d)) {
    Poly prod = Poly::unit();
    for (int k : comp.parts) prod = prod * a_element(k);
    const auto& [lead_word, lead_coeff] = *prod.terms().begin();
    if (!(lead_word == word_from_index(comp)) || lead_coeff != 1) ok = false;
    if (!leads.insert(lead_word.letters()).second) ok = false;

    if (comp.depth() < 2) continue;
    Poly e = prod - a_top;
    ++e_count;
    if (e.is_zero()) ok = false;
    for (const auto& [ew, ec] : e.terms())
      if (!classify(ew).in_check_h1) ok = false;
    if (d <= 9) e_rows.emplace_back("A-diff(" + to_string(comp) + ")", std::move(e));
  }
  if (e_count != expected) ok = false;

  // elimination cross-check on desk-scale degrees
  if (ok && d <= 9) {
    long long r = exact_rank(LinearSystem::build(d, std::move(e_rows)));
    if (r != expected) ok = false;
  }
  return ok;
}

DimTable dims_table(int max_weight) {
  if (max_weight < 3) fail(Errc::PreconditionViolation, "dims_table requires max_weight >= 3");
  std::vector<std::pair<int, int>> tasks;
  for (int weight = 3; weight <= max_weight; ++weight)
    for (int n = 1; n <= weight - 2; ++n) tasks.emplace_back(weight, n);

  std::vector<long long> dims(tasks.size(), 0);
  parallel_for(tasks.size(), [&](std::size_t t) {
    auto [weight, n] = tasks[t];
    const int d = weight - n;
    std::vector<std::pair<std::string, Poly>> rows;
    for (const Word& w : enumerate_words(d, WordSpace::CheckH1))
      rows.emplace_back("rho_" + std::to_string(n) + "(" + w.text() + ")", rho(n, Poly(w)));
    dims[t] = exact_rank(LinearSystem::build(weight, std::move(rows)));
  });

  DimTable table;
  for (std::size_t t = 0; t < tasks.size(); ++t) table.entries[tasks[t]] = dims[t];
  return table;
}

std::string DimTable::to_text() const {
  if (entries.empty()) return "";
  int max_weight = 0, max_n = 0;
  for (const auto& [key, dim] : entries) {
    max_weight = std::max(max_weight, key.first);
    max_n = std::max(max_n, key.second);
  }
  std::ostringstream os;
  os << std::left << std::setw(8) << "weight";
  for (int w = 3; w <= max_weight; ++w) os << std::right << std::setw(6) << w;
  os << "\n";
  for (int n = 1; n <= max_n; ++n) {
    os << std::left << std::setw(8) << ("n=" + std::to_string(n));
    for (int w = 3; w <= max_weight; ++w) {
      auto it = entries.find({w, n});
      if (it == entries.end())
        os << std::right << std::setw(6) << "";
      else
        os << std::right << std::setw(6) << it->second;
    }
    os << "\n";
  }
  return os.str();
}

std::string DimTable::to_json() const {
  std::ostringstream os;
  os << "{\"entries\":[";
  bool first = true;
  for (const auto& [key, dim] : entries) {
    if (!first) os << ",";
    first = false;
    os << "{\"weight\":" << key.first << ",\"n\":" << key.second << ",\"dim\":" << dim << "}";
  }
  os << "]}";
  return os.str();
}

long long totient_dimension(int d) {
  if (d < 2) fail(Errc::PreconditionViolation, "totient_dimension requires d >= 2");
  return count_cyclic_classes(d) - 2;
}

bool prop5_check(int n, int d) {
  if (n < 1 || d < 2) fail(Errc::PreconditionViolation, "prop5_check requires n >= 1, d >= 2");
  const int weight = d + 1 + n;
  std::vector<std::pair<std::string, Poly>> rows;
  for (const Word& v : enumerate_words(d + 1, WordSpace::CheckH1))
    rows.emplace_back("rho_" + std::to_string(n) + "(" + v.text() + ")", rho(n, Poly(v)));
  SpanSolver solver(LinearSystem::build(weight, std::move(rows)));
  for (const Word& w : enumerate_words(d, WordSpace::CheckH1))
    if (!solver.solve(rho(n + 1, Poly(w))).member) return false;
  return true;
}

bool fixed_weight_saturation_check(int weight) {
  if (weight < 3) fail(Errc::PreconditionViolation, "saturation check requires weight >= 3");
  std::vector<std::pair<std::string, Poly>> rows1;
  for (const Word& w : enumerate_words(weight - 1, WordSpace::CheckH1))
    rows1.emplace_back("rho_1(" + w.text() + ")", rho(1, Poly(w)));
  long long rank1 = exact_rank(LinearSystem::build(weight, std::move(rows1)));

  std::vector<std::pair<std::string, Poly>> rows_all;
  for (int n = 1; n <= weight - 2; ++n)
    for (const Word& w : enumerate_words(weight - n, WordSpace::CheckH1))
      rows_all.emplace_back("rho_" + std::to_string(n) + "(" + w.text() + ")", rho(n, Poly(w)));
  long long rank_all = exact_rank(LinearSystem::build(weight, std::move(rows_all)));
  return rank1 == rank_all;
}

}  // namespace csf
