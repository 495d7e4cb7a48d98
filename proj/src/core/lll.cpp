#include "unihunt/lll.hpp"

#include <algorithm>

namespace unihunt {

namespace {

struct State {
  int n;
  BigMatrix g;
  BigMatrix h;
  std::vector<Int> d;                 // d[0] = 1, d[i+1] = Gram determinant of the first i+1 vectors
  std::vector<std::vector<Int>> lam;  // lam[k][j], j < k

  void sub_multiple(int k, int l, const Int& q) {
    for (int j = 0; j < n; ++j) h(k, j) -= q * h(l, j);
    for (int j = 0; j < n; ++j) g(k, j) -= q * g(l, j);
    for (int i = 0; i < n; ++i) g(i, k) -= q * g(i, l);
  }

  void red(int k, int l) {
    const Int& dl = d[l + 1];
    Int twice = 2 * lam[k][l];
    if (abs(twice) <= dl) return;
    Int q;
    Int num = twice + dl;
    Int den = 2 * dl;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    sub_multiple(k, l, q);
    lam[k][l] -= q * dl;
    for (int i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
  }

  void swap(int k, int kmax) {
    h.swap_rows(k, k - 1);
    g.swap_rows(k, k - 1);
    for (int i = 0; i < n; ++i) std::swap(g(i, k), g(i, k - 1));
    for (int j = 0; j < k - 1; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const Int l = lam[k][k - 1];
    const Int b = (d[k - 1] * d[k + 1] + l * l) / d[k];
    for (int i = k + 1; i <= kmax; ++i) {
      const Int t = lam[i][k];
      lam[i][k] = (d[k + 1] * lam[i][k - 1] - l * t) / d[k];
      lam[i][k - 1] = (b * t + l * lam[i][k]) / d[k + 1];
    }
    d[k] = b;
  }
};

}  // namespace

LllResult lll_gram(const BigMatrix& gram) {
  const int n = gram.rows();
  State s{n, gram, BigMatrix::identity(n), std::vector<Int>(n + 1, Int(0)),
          std::vector<std::vector<Int>>(n, std::vector<Int>(n, Int(0)))};
  if (n == 0) return {s.h, s.g};
  s.d[0] = 1;
  s.d[1] = s.g(0, 0);
  if (sgn(s.d[1]) <= 0) throw std::invalid_argument("LLL: Gram matrix is not positive definite");
  int k = 1, kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (int j = 0; j <= k; ++j) {
        Int u = s.g(k, j);
        for (int i = 0; i < j; ++i) u = (s.d[i + 1] * u - s.lam[k][i] * s.lam[j][i]) / s.d[i];
        if (j < k) {
          s.lam[k][j] = u;
        } else {
          if (sgn(u) <= 0) throw std::invalid_argument("LLL: Gram matrix is not positive definite");
          s.d[k + 1] = u;
        }
      }
    }
    for (;;) {
      s.red(k, k - 1);
      const Int& lk = s.lam[k][k - 1];
      if (100 * s.d[k + 1] * s.d[k - 1] < 99 * s.d[k] * s.d[k] - 100 * lk * lk) {
        s.swap(k, kmax);
        k = std::max(1, k - 1);
        continue;
      }
      for (int l = k - 2; l >= 0; --l) s.red(k, l);
      ++k;
      break;
    }
  }
  return {std::move(s.h), std::move(s.g)};
}

LllResult lll_gram(const IntMatrix& gram) { return lll_gram(to_big(gram)); }

}  // namespace unihunt
