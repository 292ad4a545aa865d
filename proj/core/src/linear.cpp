#include "csf/linear.hpp"

#include <algorithm>
#include <random>

#include "csf/error.hpp"

namespace csf {

LinearSystem LinearSystem::build(int weight, std::vector<std::pair<std::string, Poly>> rows) {
  LinearSystem sys;
  sys.weight = weight;
  std::map<Word, int, WordOrder> col_of;
  for (auto& [label, p] : rows) {
    if (p.is_zero()) continue;
    auto deg = p.homogeneous_degree();
    if (!deg || static_cast<int>(*deg) != weight)
      fail(Errc::WeightMismatch,
           "generator '" + label + "' is not homogeneous of weight " + std::to_string(weight));
    for (const auto& [w, c] : p.terms()) col_of.emplace(w, 0);
    sys.generators.push_back(std::move(p));
    sys.labels.push_back(std::move(label));
  }
  sys.columns.reserve(col_of.size());
  for (auto& [w, idx] : col_of) {
    idx = static_cast<int>(sys.columns.size());
    sys.columns.push_back(w);
  }
  return sys;
}

namespace {

// ---- exact integer echelon ---------------------------------------------

using IntRow = std::vector<std::pair<int, mpz_class>>;  // sorted by column

void strip_content(IntRow& r) {
  if (r.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(r.front().second) < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

const mpz_class* find_col(const IntRow& r, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it == r.end() || it->first != col) return nullptr;
  return &it->second;
}

// r := (pc/g) * r - (rc/g) * p, sorted-merge; caller strips content after
void eliminate(IntRow& r, const IntRow& p, int col, IntRow& scratch) {
  const mpz_class* pcp = find_col(p, col);
  const mpz_class* rcp = find_col(r, col);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), pcp->get_mpz_t(), rcp->get_mpz_t());
  mpz_class a = *pcp / g;  // multiplier on r
  mpz_class b = *rcp / g;  // multiplier on p
  scratch.clear();
  scratch.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  mpz_class v;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      scratch.emplace_back(r[i].first, mpz_class(a * r[i].second));
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      scratch.emplace_back(p[j].first, mpz_class(-b * p[j].second));
      ++j;
    } else {
      v = a * r[i].second - b * p[j].second;
      if (v != 0) scratch.emplace_back(r[i].first, v);
      ++i;
      ++j;
    }
  }
  r.swap(scratch);
  strip_content(r);
}

struct IntEchelon {
  int ncols;
  std::vector<IntRow> pivots;       // in insertion order
  std::vector<int> pivot_col;       // per pivot row
  std::vector<int> pivot_of_col;    // column -> pivot index or -1
  std::vector<int> occupancy;       // column -> #basis rows touching it

  explicit IntEchelon(int ncols_)
      : ncols(ncols_), pivot_of_col(static_cast<std::size_t>(ncols_), -1),
        occupancy(static_cast<std::size_t>(ncols_), 0) {}

  // Reduces the row against the basis (earliest-inserted pivot first, which
  // terminates because every basis row was fully reduced on insertion) and
  // installs it as a new pivot when nonzero. Returns true if rank grew.
  bool insert(IntRow row, IntRow& scratch) {
    strip_content(row);
    while (!row.empty()) {
      int best = -1;
      int best_col = -1;
      for (const auto& [c, v] : row) {
        int pi = pivot_of_col[static_cast<std::size_t>(c)];
        if (pi >= 0 && (best < 0 || pi < best)) {
          best = pi;
          best_col = c;
        }
      }
      if (best < 0) break;
      eliminate(row, pivots[static_cast<std::size_t>(best)], best_col, scratch);
    }
    if (row.empty()) return false;

    // pivot column choice: prefer unit entries (no growth in later rows),
    // then rarely-occupied columns, then the smallest column id
    int chosen = -1;
    long best_key_unit = 2;
    int best_key_occ = 0;
    for (const auto& [c, v] : row) {
      long unit = (v == 1 || v == -1) ? 0 : 1;
      int occ = occupancy[static_cast<std::size_t>(c)];
      if (chosen < 0 || unit < best_key_unit ||
          (unit == best_key_unit && (occ < best_key_occ || (occ == best_key_occ && c < chosen)))) {
        chosen = c;
        best_key_unit = unit;
        best_key_occ = occ;
      }
    }
    for (const auto& [c, v] : row) ++occupancy[static_cast<std::size_t>(c)];
    pivot_of_col[static_cast<std::size_t>(chosen)] = static_cast<int>(pivots.size());
    pivot_col.push_back(chosen);
    pivots.push_back(std::move(row));
    return true;
  }
};

IntRow int_row_of(const Poly& p, const std::map<Word, int, WordOrder>& col_of) {
  // clear denominators: multiply by the lcm
  mpz_class lcm = 1;
  for (const auto& [w, c] : p.terms())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  IntRow row;
  row.reserve(p.term_count());
  for (const auto& [w, c] : p.terms())
    row.emplace_back(col_of.at(w), mpz_class(c.get_num() * (lcm / c.get_den())));
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

std::map<Word, int, WordOrder> column_map(const LinearSystem& sys) {
  std::map<Word, int, WordOrder> col_of;
  for (std::size_t i = 0; i < sys.columns.size(); ++i)
    col_of.emplace(sys.columns[i], static_cast<int>(i));
  return col_of;
}

long long int_rank(const LinearSystem& sys) {
  auto col_of = column_map(sys);
  IntEchelon ech(static_cast<int>(sys.columns.size()));
  IntRow scratch;
  long long rank = 0;
  for (const Poly& g : sys.generators)
    if (ech.insert(int_row_of(g, col_of), scratch)) ++rank;
  return rank;
}

// ---- modular echelon -----------------------------------------------------

using ModRow = std::vector<std::pair<int, std::uint64_t>>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

struct ModEchelon {
  std::uint64_t p;
  std::vector<ModRow> pivots;
  std::vector<int> pivot_of_col;

  ModEchelon(int ncols, std::uint64_t p_)
      : p(p_), pivot_of_col(static_cast<std::size_t>(ncols), -1) {}

  bool insert(ModRow row, ModRow& scratch) {
    while (!row.empty()) {
      int best = -1;
      int best_col = -1;
      std::uint64_t best_val = 0;
      for (const auto& [c, v] : row) {
        int pi = pivot_of_col[static_cast<std::size_t>(c)];
        if (pi >= 0 && (best < 0 || pi < best)) {
          best = pi;
          best_col = c;
          best_val = v;
        }
      }
      if (best < 0) break;
      // row -= val * pivot (pivot normalized to 1 at its column)
      const ModRow& pr = pivots[static_cast<std::size_t>(best)];
      scratch.clear();
      scratch.reserve(row.size() + pr.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < pr.size()) {
        if (j == pr.size() || (i < row.size() && row[i].first < pr[j].first)) {
          scratch.push_back(row[i]);
          ++i;
        } else if (i == row.size() || pr[j].first < row[i].first) {
          scratch.emplace_back(pr[j].first, p - mulmod(best_val, pr[j].second, p));
          ++j;
        } else {
          std::uint64_t v = (row[i].second + p - mulmod(best_val, pr[j].second, p)) % p;
          if (v) scratch.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
      (void)best_col;
    }
    if (row.empty()) return false;
    // normalize at the first column
    std::uint64_t inv = invmod(row.front().second, p);
    for (auto& [c, v] : row) v = mulmod(v, inv, p);
    pivot_of_col[static_cast<std::size_t>(row.front().first)] =
        static_cast<int>(pivots.size());
    pivots.push_back(std::move(row));
    return true;
  }
};

ModRow mod_row_of(const Poly& poly, const std::map<Word, int, WordOrder>& col_of,
                  std::uint64_t p) {
  ModRow row;
  row.reserve(poly.term_count());
  for (const auto& [w, c] : poly.terms()) {
    std::uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
    std::uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
    if (den == 0) fail(Errc::InternalInconsistency, "modular rank: denominator divisible by prime");
    std::uint64_t v = mulmod(num, invmod(den, p), p);
    if (v) row.emplace_back(col_of.at(w), v);
  }
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::uint64_t> random_large_primes(std::size_t count) {
  std::random_device rd;
  std::mt19937_64 rng(static_cast<std::uint64_t>(rd()) << 32 ^ rd());
  std::uniform_int_distribution<std::uint64_t> dist(1ULL << 30, (1ULL << 31) - 1);
  std::vector<std::uint64_t> primes;
  while (primes.size() < count) {
    std::uint64_t candidate = dist(rng) | 1ULL;
    while (!is_prime_u64(candidate)) candidate += 2;
    if (std::find(primes.begin(), primes.end(), candidate) == primes.end())
      primes.push_back(candidate);
  }
  return primes;
}

}  // namespace

long long modular_rank(const LinearSystem& sys, std::uint64_t p) {
  auto col_of = column_map(sys);
  ModEchelon ech(static_cast<int>(sys.columns.size()), p);
  ModRow scratch;
  long long rank = 0;
  for (const Poly& g : sys.generators)
    if (ech.insert(mod_row_of(g, col_of, p), scratch)) ++rank;
  return rank;
}

long long exact_rank(const LinearSystem& sys, const std::vector<std::uint64_t>& check_primes) {
  long long rank = int_rank(sys);
  std::vector<std::uint64_t> primes =
      check_primes.empty() ? random_large_primes(2) : check_primes;
  for (std::uint64_t p : primes) {
    long long mr = modular_rank(sys, p);
    if (mr != rank)
      fail(Errc::InternalInconsistency,
           "rank over Q is " + std::to_string(rank) + " but rank mod " + std::to_string(p) +
               " is " + std::to_string(mr));
  }
  return rank;
}

long long exact_rank(const LinearSystem& sys) { return exact_rank(sys, {}); }

// ---- rational span solver with combination tracking ----------------------

namespace {

using RatRow = std::vector<std::pair<int, Rat>>;

void axpy(RatRow& r, const Rat& mult, const RatRow& p, RatRow& scratch) {
  // r := r - mult * p
  scratch.clear();
  scratch.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      scratch.push_back(r[i]);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      scratch.emplace_back(p[j].first, Rat(-mult * p[j].second));
      ++j;
    } else {
      Rat v(r[i].second - mult * p[j].second);
      if (v != 0) scratch.emplace_back(r[i].first, v);
      ++i;
      ++j;
    }
  }
  r.swap(scratch);
}

}  // namespace

SpanSolver::SpanSolver(const LinearSystem& sys)
    : sys_(sys), col_of_(column_map(sys)), lead_row_(sys.columns.size(), -1) {
  RatRow scratch, cscratch;
  for (std::size_t g = 0; g < sys_.generators.size(); ++g) {
    TrackedRow row;
    for (const auto& [w, c] : sys_.generators[g].terms()) row.v.emplace_back(col_of_.at(w), c);
    std::sort(row.v.begin(), row.v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    row.comb.emplace_back(static_cast<int>(g), Rat(1));

    // reduce against existing pivots, earliest first
    while (!row.v.empty()) {
      int best = -1;
      for (const auto& [c, v] : row.v) {
        int pi = lead_row_[static_cast<std::size_t>(c)];
        if (pi >= 0 && (best < 0 || pi < best)) best = pi;
      }
      if (best < 0) break;
      const TrackedRow& piv = rows_[static_cast<std::size_t>(best)];
      const mpq_class* rv = nullptr;
      for (const auto& [c, v] : row.v)
        if (c == piv.lead) {
          rv = &v;
          break;
        }
      Rat mult(*rv);  // pivot rows are normalized to 1 at their lead
      axpy(row.v, mult, piv.v, scratch);
      axpy(row.comb, mult, piv.comb, cscratch);
    }
    if (row.v.empty()) continue;

    row.lead = row.v.front().first;
    Rat inv(1 / row.v.front().second);
    for (auto& [c, v] : row.v) v *= inv;
    for (auto& [c, v] : row.comb) v *= inv;
    lead_row_[static_cast<std::size_t>(row.lead)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
  }
}

MembershipCertificate SpanSolver::solve(const Poly& q) const {
  MembershipCertificate cert;
  if (q.is_zero()) {
    cert.member = true;
    return cert;
  }
  auto deg = q.homogeneous_degree();
  if (!deg || static_cast<int>(*deg) != sys_.weight)
    fail(Errc::WeightMismatch, "query is not homogeneous of weight " +
                                   std::to_string(sys_.weight));

  RatRow vec;
  for (const auto& [w, c] : q.terms()) {
    auto it = col_of_.find(w);
    if (it == col_of_.end()) {
      cert.member = false;  // support outside the span's column set
      return cert;
    }
    vec.emplace_back(it->second, c);
  }
  std::sort(vec.begin(), vec.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  RatRow scratch;
  std::map<int, Rat> gen_coeffs;
  while (!vec.empty()) {
    int best = -1;
    for (const auto& [c, v] : vec) {
      int pi = lead_row_[static_cast<std::size_t>(c)];
      if (pi >= 0 && (best < 0 || pi < best)) best = pi;
    }
    if (best < 0) break;
    const TrackedRow& piv = rows_[static_cast<std::size_t>(best)];
    Rat mult;
    for (const auto& [c, v] : vec)
      if (c == piv.lead) {
        mult = v;
        break;
      }
    axpy(vec, mult, piv.v, scratch);
    for (const auto& [g, c] : piv.comb) {
      Rat& slot = gen_coeffs[g];
      slot += mult * c;
      if (slot == 0) gen_coeffs.erase(g);
    }
  }
  if (!vec.empty()) {
    cert.member = false;
    return cert;
  }

  // verify the certificate by exact re-expansion before returning it
  Poly rebuilt;
  for (const auto& [g, c] : gen_coeffs) {
    Poly t = sys_.generators[static_cast<std::size_t>(g)];
    t *= c;
    rebuilt += t;
  }
  if (!(rebuilt == q))
    fail(Errc::InternalInconsistency, "membership certificate failed re-expansion");
  cert.member = true;
  for (const auto& [g, c] : gen_coeffs)
    cert.combination.emplace_back(sys_.labels[static_cast<std::size_t>(g)], c);
  return cert;
}

MembershipCertificate membership(const LinearSystem& sys, const Poly& q) {
  return SpanSolver(sys).solve(q);
}

}  // namespace csf
