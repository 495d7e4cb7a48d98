#include "unihunt/kernels.hpp"

namespace unihunt {

BitMatrix adjacency_serial(const IntMatrix& gram, const std::vector<Vec>& reps) {
  const int m = static_cast<int>(reps.size());
  BitMatrix a(m);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) a.set(u, v, (bilinear(gram, reps[u], reps[v]) & 1) != 0);
  return a;
}

std::vector<std::uint16_t> square_mod_serial(const BitMatrix& a) {
  const int n = a.size();
  std::vector<std::uint16_t> s(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (int k = 0; k < n; ++k) {
        acc += static_cast<std::uint64_t>(a.get(i, k)) * a.get(k, j);
        if ((k & 0xFFFF) == 0xFFFF) acc %= kBvPrime;
      }
      s[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(acc % kBvPrime);
    }
  return s;
}

}  // namespace unihunt
