#include "csf/harmonic.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "csf/error.hpp"

namespace csf {

namespace {

// w = z_p * rest for a nonempty word of Q + H*y
std::pair<int, Word> split_head(const Word& w) {
  std::size_t i = 0;
  while (i < w.degree() && w.at(i) == 'x') ++i;
  // i points at the first y; guaranteed to exist for H1 words
  return {static_cast<int>(i) + 1, w.subword(i + 1, w.degree() - i - 1)};
}

void require_h1(const Word& w, const char* who) {
  if (!w.empty() && !w.ends_with('y'))
    fail(Errc::NotInH1, std::string(who) + ": term '" + w.text() + "' does not end in y");
}

Poly prepend_z(int k, const Poly& p) {
  Word zk = z_word(k);
  Poly out;
  for (const auto& [w, c] : p.terms()) out.add_term(zk.concat(w), c);
  return out;
}

// merge_sign = +1 for the MZV product, -1 for the MZSV product
template <int merge_sign>
Poly star_words(const Word& a, const Word& b) {
  static std::map<std::pair<Word, Word>, Poly, bool (*)(const std::pair<Word, Word>&,
                                                        const std::pair<Word, Word>&)>
      memo([](const auto& l, const auto& r) {
        if (!(l.first == r.first)) return word_less(l.first, r.first);
        return word_less(l.second, r.second);
      });
  static std::mutex memo_mutex;

  if (a.empty()) return Poly(b);
  if (b.empty()) return Poly(a);

  const bool swapped = word_less(b, a);  // the product is commutative
  std::pair<Word, Word> key = swapped ? std::make_pair(b, a) : std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  auto [p, u] = split_head(key.first);
  auto [q, v] = split_head(key.second);
  Poly result = prepend_z(p, star_words<merge_sign>(u, key.second));
  result += prepend_z(q, star_words<merge_sign>(key.first, v));
  Poly merged = prepend_z(p + q, star_words<merge_sign>(u, v));
  if constexpr (merge_sign > 0)
    result += merged;
  else
    result -= merged;

  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

template <int merge_sign>
Poly star_impl(const Poly& p, const Poly& q, const char* who) {
  for (const auto& [w, c] : p.terms()) require_h1(w, who);
  for (const auto& [w, c] : q.terms()) require_h1(w, who);
  Poly out;
  for (const auto& [wa, ca] : p.terms())
    for (const auto& [wb, cb] : q.terms()) {
      Poly prod = star_words<merge_sign>(wa, wb);
      prod *= Rat(ca * cb);
      out += prod;
    }
  return out;
}

}  // namespace

Poly star(const Poly& p, const Poly& q) { return star_impl<+1>(p, q, "star"); }

Poly star_bar(const Poly& p, const Poly& q) { return star_impl<-1>(p, q, "star_bar"); }

namespace {

// all quasi-shuffles of two exponent sequences, as a multiset of sequences
void stuffle_rec(const std::vector<int>& a, std::size_t ia, const std::vector<int>& b,
                 std::size_t ib, std::vector<int>& acc, Poly& out) {
  if (ia == a.size() && ib == b.size()) {
    out.add_term(word_from_index(Index(acc)), Rat(1));
    return;
  }
  if (ia < a.size()) {
    acc.push_back(a[ia]);
    stuffle_rec(a, ia + 1, b, ib, acc, out);
    acc.pop_back();
  }
  if (ib < b.size()) {
    acc.push_back(b[ib]);
    stuffle_rec(a, ia, b, ib + 1, acc, out);
    acc.pop_back();
  }
  if (ia < a.size() && ib < b.size()) {
    acc.push_back(a[ia] + b[ib]);
    stuffle_rec(a, ia + 1, b, ib + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

Poly stuffle_oracle(const Index& a, const Index& b) {
  Poly out;
  std::vector<int> acc;
  stuffle_rec(a.parts, 0, b.parts, 0, acc, out);
  return out;
}

}  // namespace csf
