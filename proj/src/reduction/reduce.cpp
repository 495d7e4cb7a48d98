#include "unihunt/reduce.hpp"

#include <algorithm>
#include <random>

#include "unihunt/lll.hpp"

namespace unihunt {

namespace {

bool full_rank_mod2(const std::vector<const Vec*>& rows) {
  const int n = static_cast<int>(rows.size());
  const int w = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(w, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((*rows[i])[j] & 1) m[i][j >> 6] |= std::uint64_t{1} << (j & 63);
  for (int c = 0; c < n; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    int p = c;
    while (p < n && !(m[p][c >> 6] & bit)) ++p;
    if (p == n) return false;
    std::swap(m[p], m[c]);
    for (int i = c + 1; i < n; ++i)
      if (m[i][c >> 6] & bit)
        for (int k = 0; k < w; ++k) m[i][k] ^= m[c][k];
  }
  return true;
}

std::int64_t det_mod_p(const std::vector<const Vec*>& rows, std::int64_t p) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = (((*rows[i])[j] % p) + p) % p;
  std::int64_t det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = (p - det) % p;
    }
    det = det * m[c][c] % p;
    // inverse by Fermat, p prime and small
    std::int64_t inv = 1, base = m[c][c], e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const std::int64_t f = m[i][c] * inv % p;
      for (int j = c; j < n; ++j) m[i][j] = ((m[i][j] - f * m[c][j]) % p + p) % p;
    }
  }
  return det;
}

}  // namespace

bool is_unimodular_basis(const std::vector<const Vec*>& rows) {
  if (!full_rank_mod2(rows)) return false;
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const std::int64_t d = det_mod_p(rows, p);
    if (d != 1 && d != p - 1) return false;
  }
  const int n = static_cast<int>(rows.size());
  BigMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<long>((*rows[i])[j]);
  const Int det = determinant(m);
  return det == 1 || det == -1;
}

BasisSearchResult reduce(const Lattice& lattice, std::int64_t b, std::int64_t t, std::uint64_t seed,
                         ReduceOptions options) {
  if (b < 1 || t < 1) throw std::invalid_argument("reduce needs b >= 1 and t >= 1");
  const int n = lattice.rank();
  BasisSearchResult res;
  res.seed = seed;
  const VectorSet s = short_vectors(lattice, b);
  std::vector<Vec> sv, rv;
  for (const auto& r : s.reps) {
    sv.push_back(r.v);
    if (r.norm <= b - 1) rv.push_back(r.v);
  }
  const auto idx = sublattice_index(lattice, sv);
  if (!idx || *idx != 1) return res;
  int k0 = n;
  if (!rv.empty()) k0 = std::max(1, n - rank(from_rows(rv, n)));
  if (options.assume_large_r) k0 = 1;
  std::mt19937_64 rng(seed);
  // Draws within a group are distinct (a partial shuffle); a repeated vector never helps.
  std::vector<std::size_t> is(sv.size()), ir(rv.size());
  for (std::size_t i = 0; i < is.size(); ++i) is[i] = i;
  for (std::size_t i = 0; i < ir.size(); ++i) ir[i] = i;
  auto draw = [&rng](std::vector<std::size_t>& idx, int count) {
    for (int i = 0; i < count; ++i) {
      std::uniform_int_distribution<std::size_t> d(i, idx.size() - 1);
      std::swap(idx[i], idx[d(rng)]);
    }
  };
  std::vector<const Vec*> rows(n);
  for (int k = k0; k <= n; ++k) {
    if (static_cast<std::size_t>(k) > sv.size() || static_cast<std::size_t>(n - k) > rv.size()) continue;
    for (std::int64_t attempt = 0; attempt < t; ++attempt) {
      ++res.tries_used;
      draw(is, k);
      draw(ir, n - k);
      for (int i = 0; i < k; ++i) rows[i] = &sv[is[i]];
      for (int i = k; i < n; ++i) rows[i] = &rv[ir[i - k]];
      if (!is_unimodular_basis(rows)) continue;
      std::vector<std::pair<std::int64_t, const Vec*>> sorted;
      for (auto* r : rows) sorted.emplace_back(quadratic(lattice.gram(), *r), r);
      std::stable_sort(sorted.begin(), sorted.end(),
                       [](const auto& x, const auto& y) { return x.first < y.first; });
      res.basis = BigMatrix(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) res.basis(i, j) = static_cast<long>((*sorted[i].second)[j]);
      res.achieved_bound = sorted.back().first;
      res.success = true;
      return res;
    }
  }
  return res;
}

BestBasis best_basis(const Lattice& lattice, std::int64_t t, std::uint64_t seed) {
  const int n = lattice.rank();
  const LllResult l = lll_gram(lattice.gram());
  BestBasis best;
  best.basis = l.transform;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return l.gram(a, a) < l.gram(b, b); });
  BigMatrix sorted(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sorted(i, j) = l.transform(order[i], j);
  best.basis = sorted;
  best.max_norm = to_small(l.gram(order[n - 1], order[n - 1]));
  for (int i = 0; i < n; ++i) best.count_at_max += l.gram(i, i) == best.max_norm;
  for (std::int64_t b = 1; b < best.max_norm; ++b) {
    BasisSearchResult r = reduce(lattice, b, t, seed + static_cast<std::uint64_t>(b));
    if (!r.success) continue;
    best.basis = std::move(r.basis);
    best.max_norm = r.achieved_bound;
    best.count_at_max = 0;
    for (int i = 0; i < n; ++i)
      best.count_at_max += quadratic(lattice.gram(), to_small(best.basis).row(i)) == best.max_norm;
    break;
  }
  return best;
}

}  // namespace unihunt
