#include "heis/linalg.hpp"

#include <algorithm>

namespace heis {

SparseRow to_sparse(const DenseVector& v) {
  SparseRow r;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) r.emplace_back(i, v[i]);
  return r;
}

DenseVector to_dense(const SparseRow& r, int ncols) {
  DenseVector v(ncols, Rational(0));
  for (const auto& [c, x] : r) v[c] = x;
  return v;
}

namespace {

/// a*r - b*s for sparse rows of any ring element type.
template <typename T>
std::vector<std::pair<int, T>> combine(const T& a,
                                       const std::vector<std::pair<int, T>>& r,
                                       const T& b,
                                       const std::vector<std::pair<int, T>>& s) {
  std::vector<std::pair<int, T>> out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || s[j].first < r[i].first) {
      out.emplace_back(s[j].first, -b * s[j].second);
      ++j;
    } else {
      T v = a * r[i].second - b * s[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

using IntRow = std::vector<std::pair<int, Integer>>;

void make_primitive(IntRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const SparseRow& row) {
  Integer l = 1;
  for (const auto& [c, v] : row)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    Integer n = v.get_num() * (l / v.get_den());
    out.emplace_back(c, std::move(n));
  }
  make_primitive(out);
  return out;
}

}  // namespace

bool FractionFreeEchelon::add_row(const SparseRow& row) {
  IntRow r = to_integer_row(row);
  while (!r.empty()) {
    auto it = pivots_.find(r.front().first);
    if (it == pivots_.end()) {
      int lead = r.front().first;
      pivots_.emplace(lead, std::move(r));
      return true;
    }
    const IntRow& p = it->second;
    Integer a = p.front().second, b = r.front().second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    r = combine(a, r, b, p);
    make_primitive(r);
  }
  return false;
}

std::vector<SparseRow> FractionFreeEchelon::reduced() const {
  std::vector<SparseRow> rows;
  std::vector<int> lead;
  for (const auto& [c, r] : pivots_) {
    SparseRow q;
    Rational inv = Rational(1) / Rational(r.front().second);
    for (const auto& [col, v] : r) q.emplace_back(col, Rational(v) * inv);
    rows.push_back(std::move(q));
    lead.push_back(c);
  }
  // Back substitution from the last pivot upwards.
  for (int k = static_cast<int>(rows.size()) - 1; k >= 0; --k) {
    for (int i = 0; i < k; ++i) {
      auto hit = std::lower_bound(
          rows[i].begin(), rows[i].end(), lead[k],
          [](const auto& e, int c) { return e.first < c; });
      if (hit == rows[i].end() || hit->first != lead[k]) continue;
      Rational factor = hit->second;
      rows[i] = combine(Rational(1), rows[i], factor, rows[k]);
    }
  }
  return rows;
}

int rank(const std::vector<SparseRow>& rows, int ncols) {
  FractionFreeEchelon e(ncols);
  for (const auto& r : rows) e.add_row(r);
  return e.rank();
}

std::vector<SparseRow> rref(const std::vector<SparseRow>& rows, int ncols) {
  FractionFreeEchelon e(ncols);
  for (const auto& r : rows) e.add_row(r);
  return e.reduced();
}

std::vector<SparseRow> kernel_basis(const std::vector<SparseRow>& rows,
                                    int ncols) {
  auto R = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& r : R) is_pivot[r.front().first] = true;
  std::vector<SparseRow> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    SparseRow v;
    for (const auto& r : R) {
      auto hit = std::lower_bound(
          r.begin(), r.end(), f,
          [](const auto& e, int c) { return e.first < c; });
      if (hit != r.end() && hit->first == f)
        v.emplace_back(r.front().first, -hit->second);
    }
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return rref(basis, ncols);
}

std::optional<DenseVector> solve_combination(
    const std::vector<SparseRow>& vectors, const SparseRow& target,
    int ncols) {
  // Unknown k lives in column k; the equations are the coordinates of the
  // vectors (transposed), augmented with the target in column n.
  const int n = static_cast<int>(vectors.size());
  std::vector<SparseRow> eqs(ncols);
  for (int k = 0; k < n; ++k)
    for (const auto& [c, v] : vectors[k]) eqs[c].emplace_back(k, v);
  for (const auto& [c, v] : target) eqs[c].emplace_back(n, v);
  auto R = rref(eqs, n + 1);
  DenseVector sol(n, Rational(0));
  for (const auto& r : R) {
    int lead = r.front().first;
    if (lead == n) return std::nullopt;  // 0 = nonzero
    if (r.back().first == n) sol[lead] = r.back().second;
  }
  return sol;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b) { return static_cast<u64>((u128)a * b % kCheckPrime); }

u64 powmod(u64 b, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}

u64 reduce(const Integer& z) {
  Integer m;
  mpz_fdiv_r_ui(m.get_mpz_t(), z.get_mpz_t(), kCheckPrime);
  return m.get_ui();
}

}  // namespace

std::optional<int> rank_mod_prime(const std::vector<SparseRow>& rows,
                                  int ncols) {
  using ModRow = std::vector<std::pair<int, u64>>;
  std::map<int, ModRow> pivots;  // leading entry normalized to 1
  for (const auto& row : rows) {
    ModRow r;
    for (const auto& [c, v] : row) {
      u64 den = reduce(v.get_den());
      if (den == 0) return std::nullopt;
      u64 x = mulmod(reduce(v.get_num()), powmod(den, kCheckPrime - 2));
      if (x != 0) r.emplace_back(c, x);
    }
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        u64 inv = powmod(r.front().second, kCheckPrime - 2);
        for (auto& e : r) e.second = mulmod(e.second, inv);
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      u64 a = r.front().second;
      const ModRow& p = it->second;
      ModRow out;
      std::size_t i = 0, j = 0;
      while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
          out.push_back(r[i++]);
        } else {
          u64 sub = mulmod(a, p[j].second);
          u64 base = 0;
          int col = p[j].first;
          if (i < r.size() && r[i].first == col) base = r[i++].second;
          u64 v = (base + kCheckPrime - sub) % kCheckPrime;
          if (v != 0) out.emplace_back(col, v);
          ++j;
        }
      }
      r = std::move(out);
    }
  }
  (void)ncols;
  return static_cast<int>(pivots.size());
}

}  // namespace heis
