#include "csf/enumeration.hpp"

#include "csf/error.hpp"

namespace csf {

SubspaceFlags classify(const Word& w) {
  SubspaceFlags f;
  f.in_h1 = w.empty() || w.ends_with('y');
  f.in_h0 = w.empty() || (w.starts_with('x') && w.ends_with('y'));
  f.in_check_h1 = f.in_h1 && !w.empty() && !w.is_power_of('y');
  f.in_check_h = !w.empty() && !w.is_power_of('x') && !w.is_power_of('y');
  return f;
}

std::vector<Word> enumerate_words(int degree, WordSpace space) {
  if (degree < 0) fail(Errc::PreconditionViolation, "enumerate_words requires degree >= 0");
  std::vector<Word> out;
  const std::size_t d = static_cast<std::size_t>(degree);
  // counting in binary with x=0 < y=1 yields lexicographic order
  for (unsigned long long bits = 0; bits < (1ULL << d); ++bits) {
    std::string s(d, 'x');
    for (std::size_t i = 0; i < d; ++i)
      if (bits >> (d - 1 - i) & 1ULL) s[i] = 'y';
    Word w(std::move(s));
    SubspaceFlags f = classify(w);
    bool keep = false;
    switch (space) {
      case WordSpace::H: keep = true; break;
      case WordSpace::H1: keep = f.in_h1; break;
      case WordSpace::H0: keep = f.in_h0; break;
      case WordSpace::CheckH1: keep = f.in_check_h1; break;
      case WordSpace::CheckH: keep = f.in_check_h; break;
    }
    if (keep) out.push_back(std::move(w));
  }
  return out;
}

Word cyclic_canonical(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.degree(); ++k) {
    Word r = w.rotated_left(k);
    if (r.letters() < best.letters()) best = std::move(r);
  }
  return best;
}

long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

long long count_cyclic_classes(int d) {
  if (d < 1) fail(Errc::PreconditionViolation, "count_cyclic_classes requires d >= 1");
  long long sum = 0;
  for (int m = 1; m <= d; ++m) {
    if (d % m) continue;
    sum += euler_phi(d / m) * (1LL << m);
  }
  return sum / d;
}

}  // namespace csf
