#include "csf/numeric.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "csf/error.hpp"

namespace csf {

TruncationParams::TruncationParams(long M_, double safety_) : M(M_), safety(safety_) {
  if (M < 10) fail(Errc::PreconditionViolation, "truncation cutoff M must be >= 10");
  if (safety < 1.0) fail(Errc::PreconditionViolation, "safety factor must be >= 1");
}

namespace {

double inv_pow(double inv, int k) {
  double r = inv;
  for (int i = 1; i < k; ++i) r *= inv;
  return r;
}

struct Kahan {
  double sum = 0.0;
  double comp = 0.0;
  void add(double term) {
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

void require_convergent(const Index& idx) {
  if (idx.empty()) fail(Errc::DivergentIndex, "empty index has no convergent series");
  if (idx.parts.front() < 2)
    fail(Errc::DivergentIndex, "leading exponent 1 gives a divergent series");
}

double tail_envelope(const Index& idx, const TruncationParams& params) {
  // heuristic harmonic-tail envelope: safety * (1+ln M)^(depth-1) * M^(1-k1) / (k1-1)
  const int k1 = idx.parts.front();
  const double M = static_cast<double>(params.M);
  return params.safety * std::pow(1.0 + std::log(M), idx.depth() - 1) *
         std::pow(M, 1.0 - k1) / (k1 - 1);
}

// Nested-sum dynamic programming. Level j accumulates
//   strict:  S_j(m) = S_j(m-1) + m^(-k_j) S_{j+1}(m-1)
//   weak:    S_j(m) = S_j(m-1) + m^(-k_j) S_{j+1}(m)
// with S_{depth}(m) == 1, using compensated accumulation per level.
double nested_sum(const Index& idx, long M, bool strict) {
  const int depth = idx.depth();
  std::vector<Kahan> level(static_cast<std::size_t>(depth));
  auto value = [&](int j) { return j == depth ? 1.0 : level[static_cast<std::size_t>(j)].sum; };
  for (long m = 1; m <= M; ++m) {
    const double inv = 1.0 / static_cast<double>(m);
    if (strict) {
      // ascending j reads S_{j+1} before its update this round: value at m-1
      for (int j = 0; j < depth; ++j)
        level[static_cast<std::size_t>(j)].add(inv_pow(inv, idx.parts[static_cast<std::size_t>(j)]) * value(j + 1));
    } else {
      // descending j reads S_{j+1} already updated to m
      for (int j = depth - 1; j >= 0; --j)
        level[static_cast<std::size_t>(j)].add(inv_pow(inv, idx.parts[static_cast<std::size_t>(j)]) * value(j + 1));
    }
  }
  return level[0].sum;
}

// process-wide memo of raw sums, keyed by (parts, M, strictness)
double nested_sum_cached(const Index& idx, long M, bool strict) {
  using Key = std::tuple<std::vector<int>, long, bool>;
  static std::map<Key, double> cache;
  static std::mutex cache_mutex;
  Key key{idx.parts, M, strict};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  double v = nested_sum(idx, M, strict);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(std::move(key), v).first->second;
}

NumericResult eval_series(const Index& idx, const TruncationParams& params, bool strict) {
  require_convergent(idx);
  NumericResult r;
  r.value = nested_sum_cached(idx, params.M, strict);
  r.tail_bound = tail_envelope(idx, params);
  r.M_used = params.M;
  return r;
}

NumericResult eval_linear(const Poly& p, const TruncationParams& params, bool strict) {
  NumericResult out;
  out.M_used = params.M;
  for (const auto& [w, c] : p.terms()) {
    const double cd = c.get_d();
    if (w.empty()) {
      out.value += cd;  // Z(1) = 1, exact
      continue;
    }
    if (!(w.starts_with('x') && w.ends_with('y')))
      fail(Errc::NonAdmissibleWord, "word '" + w.text() + "' is not admissible (not in x*H*y)");
    NumericResult term = eval_series(index_from_word(w), params, strict);
    out.value += cd * term.value;
    out.tail_bound += std::abs(cd) * term.tail_bound;
  }
  return out;
}

}  // namespace

NumericResult zeta_num(const Index& idx, const TruncationParams& params) {
  return eval_series(idx, params, /*strict=*/true);
}

NumericResult zeta_star_num(const Index& idx, const TruncationParams& params) {
  return eval_series(idx, params, /*strict=*/false);
}

NumericResult evaluate_Z(const Poly& p, const TruncationParams& params) {
  return eval_linear(p, params, /*strict=*/true);
}

NumericResult evaluate_Z_bar(const Poly& p, const TruncationParams& params) {
  return eval_linear(p, params, /*strict=*/false);
}

CsfNumericReport csf_numeric_check(const Index& ks, ZetaVariant variant,
                                   const TruncationParams& params) {
  const int l = ks.depth();
  if (l < 1) fail(Errc::PreconditionViolation, "cyclic sum check requires a nonempty index");
  bool some_big = false;
  for (int k : ks.parts) some_big |= k > 1;
  if (!some_big)
    fail(Errc::PreconditionViolation, "cyclic sum formula requires some part > 1");

  const bool strict = variant == ZetaVariant::MZV;
  const int K = ks.weight();

  CsfNumericReport rep;
  double tail = 0.0;

  // LHS: sum over j and 1 <= i <= k_j - 1 of the rotated index
  // (k_j - i + 1, k_{j+1}, ..., k_{j-1}, i)
  for (int j = 0; j < l; ++j) {
    const int kj = ks.parts[static_cast<std::size_t>(j)];
    for (int i = 1; i <= kj - 1; ++i) {
      std::vector<int> parts{kj - i + 1};
      for (int s = 1; s < l; ++s) parts.push_back(ks.parts[static_cast<std::size_t>((j + s) % l)]);
      parts.push_back(i);
      NumericResult term = eval_series(Index(std::move(parts)), params, strict);
      rep.lhs += term.value;
      tail += term.tail_bound;
    }
  }

  // RHS
  if (variant == ZetaVariant::MZV) {
    for (int j = 0; j < l; ++j) {
      std::vector<int> parts{ks.parts[static_cast<std::size_t>(j)] + 1};
      for (int s = 1; s < l; ++s) parts.push_back(ks.parts[static_cast<std::size_t>((j + s) % l)]);
      NumericResult term = zeta_num(Index(std::move(parts)), params);
      rep.rhs += term.value;
      tail += term.tail_bound;
    }
  } else {
    NumericResult term = zeta_num(Index(std::vector<int>{K + 1}), params);
    rep.rhs = K * term.value;
    tail += K * term.tail_bound;
  }

  rep.diff = std::abs(rep.lhs - rep.rhs);
  rep.tolerance = std::max(1e-3, tail);
  rep.pass = rep.diff < rep.tolerance;
  return rep;
}

}  // namespace csf
