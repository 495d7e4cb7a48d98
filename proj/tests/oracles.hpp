#pragma once

// Independent brute-force references for the tests. Nothing here calls the library's
// enumeration, reduction or isometry code.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "unihunt/lattice.hpp"

namespace oracle {

using unihunt::BigMatrix;
using unihunt::Int;
using unihunt::IntMatrix;
using unihunt::Rational;
using unihunt::Vec;

inline std::int64_t dot(const IntMatrix& g, const Vec& u, const Vec& v) {
  std::int64_t s = 0;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) s += u[i] * g(i, j) * v[j];
  return s;
}

// Determinant by permutation expansion (n <= 7).
inline Int leibniz(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  Int total = 0;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
    Int term = inv % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= static_cast<long>(m(i, p[i]));
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Diagonal of the inverse over Q by Gauss-Jordan.
inline std::vector<double> inverse_diagonal(const IntMatrix& g) {
  const int n = g.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = static_cast<long>(g(i, j));
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = Rational(a[i][n + i] / a[i][i]).get_d();
  return d;
}

// Every nonzero v with v.v <= bound, both signs, from the box |v_i| <= sqrt(bound (G^-1)_ii).
inline std::multiset<std::int64_t> box_norms(const IntMatrix& g, std::int64_t bound, std::vector<Vec>* out = nullptr) {
  const int n = g.rows();
  const auto inv = inverse_diagonal(g);
  std::vector<std::int64_t> box(n);
  for (int i = 0; i < n; ++i) box[i] = static_cast<std::int64_t>(std::floor(std::sqrt(bound * inv[i]) + 1e-9));
  std::multiset<std::int64_t> norms;
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = -box[i];
  while (true) {
    const std::int64_t q = dot(g, v, v);
    if (q > 0 && q <= bound) {
      norms.insert(q);
      if (out) out->push_back(v);
    }
    int k = 0;
    while (k < n && v[k] == box[k]) {
      v[k] = -box[k];
      ++k;
    }
    if (k == n) break;
    ++v[k];
  }
  return norms;
}

// Product of random elementary operations: a unimodular integer matrix.
inline BigMatrix random_unimodular(int n, std::mt19937_64& rng, int steps = 30) {
  BigMatrix u = BigMatrix::identity(n);
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-2, 2), coin(0, 3);
  for (int s = 0; s < steps; ++s) {
    const int i = pick(rng), j = pick(rng);
    if (coin(rng) == 0) {
      u.swap_rows(i, j);
    } else if (i != j) {
      const int c = coef(rng);
      for (int k = 0; k < n; ++k) u(i, k) += c * u(j, k);
    }
  }
  return u;
}

// Random positive definite Gram with small entries: B B^T for a random nonsingular B.
inline IntMatrix random_gram(int n, std::mt19937_64& rng, int range = 2) {
  std::uniform_int_distribution<int> e(-range, range);
  while (true) {
    IntMatrix b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = e(rng);
    if (leibniz(b) == 0) continue;
    IntMatrix g(n, n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) g(i, j) += b(i, k) * b(j, k);
    return g;
  }
}

inline IntMatrix e8_cartan() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8, node 2 on node 4.
  IntMatrix g(8, 8, 0);
  for (int i = 0; i < 8; ++i) g(i, i) = 2;
  const int edges[7][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (auto& e : edges) g(e[0], e[1]) = g(e[1], e[0]) = -1;
  return g;
}

}  // namespace oracle
