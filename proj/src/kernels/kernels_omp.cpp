#include <omp.h>

#include <algorithm>
#include <bit>

#include "unihunt/kernels.hpp"

namespace unihunt {

namespace {

// Parity bits of v and of G v, packed.
struct ParityRep {
  std::vector<std::uint64_t> v;
  std::vector<std::uint64_t> gv;
};

}  // namespace

BitMatrix adjacency_parallel(const IntMatrix& gram, const std::vector<Vec>& reps) {
  const int m = static_cast<int>(reps.size());
  const int n = gram.rows();
  const int w = (n + 63) / 64;
  std::vector<ParityRep> p(m, ParityRep{std::vector<std::uint64_t>(w, 0), std::vector<std::uint64_t>(w, 0)});
#pragma omp parallel for schedule(static)
  for (int u = 0; u < m; ++u) {
    const Vec gv = mat_vec(gram, reps[u]);
    for (int i = 0; i < n; ++i) {
      if (reps[u][i] & 1) p[u].v[i >> 6] |= std::uint64_t{1} << (i & 63);
      if (gv[i] & 1) p[u].gv[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  }
  BitMatrix a(m);
#pragma omp parallel for schedule(dynamic, 16)
  for (int u = 0; u < m; ++u) {
    std::uint64_t* row = a.row(u);
    for (int v = 0; v < m; ++v) {
      int par = 0;
      for (int k = 0; k < w; ++k) par ^= std::popcount(p[u].v[k] & p[v].gv[k]) & 1;
      if (par) row[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
  }
  return a;
}

std::vector<std::uint16_t> square_mod_parallel(const BitMatrix& a) {
  const int n = a.size();
  const int w = a.words();
  std::vector<std::uint16_t> s(static_cast<std::size_t>(n) * n);
  constexpr int kBlock = 32;
#pragma omp parallel for schedule(dynamic, 1)
  for (int ib = 0; ib < n; ib += kBlock) {
    const int iend = std::min(n, ib + kBlock);
    for (int jb = 0; jb < n; jb += kBlock) {
      const int jend = std::min(n, jb + kBlock);
      for (int i = ib; i < iend; ++i) {
        const std::uint64_t* ri = a.row(i);
        for (int j = jb; j < jend; ++j) {
          const std::uint64_t* rj = a.row(j);
          std::uint64_t acc = 0;
          for (int k = 0; k < w; ++k) acc += std::popcount(ri[k] & rj[k]);
          s[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(acc % kBvPrime);
        }
      }
    }
  }
  return s;
}

}  // namespace unihunt
