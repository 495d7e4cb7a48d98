#include "unihunt/streams.hpp"

#include <map>

namespace unihunt {

namespace {

// Class index of every coordinate (equal values share a class), classes in order of first use.
std::vector<int> value_classes(std::span<const std::int64_t> x, int& count) {
  std::map<std::int64_t, int> ids;
  std::vector<int> cls(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [it, fresh] = ids.emplace(x[i], static_cast<int>(ids.size()));
    cls[i] = it->second;
  }
  count = static_cast<int>(ids.size());
  return cls;
}

}  // namespace

Int strict_two_count(std::int64_t d, std::span<const std::int64_t> x) {
  if (x.empty()) throw std::invalid_argument("strict 2: empty vector");
  std::vector<std::int64_t> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = floor_mod(x[i], d);
  int classes = 0;
  value_classes(r, classes);
  Int c = 1;
  c <<= classes - 1;
  return c;
}

std::vector<Vec> strict_two_candidates(std::int64_t d, std::span<const std::int64_t> x) {
  if (d % 2 == 0 || d < 1) throw std::invalid_argument("strict 2: d must be odd");
  if (x.empty() || floor_mod(x[0], d) != 1 % d) throw std::invalid_argument("strict 2: x_1 must be 1");
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = floor_mod(x[i], d);
  int classes = 0;
  const auto cls = value_classes(r, classes);
  if (classes > 40) throw std::invalid_argument("strict 2: too many candidates to list");
  // For each class the lift is r or r + d; the parity bit says which one is odd.
  std::vector<Vec> out;
  const std::uint64_t total = std::uint64_t{1} << (classes - 1);
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Vec y(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      // Class 0 holds x_1, whose lift is fixed to 1.
      const bool odd = cls[i] == 0 ? true : ((mask >> (cls[i] - 1)) & 1) != 0;
      const bool r_odd = r[i] % 2 != 0;
      y[i] = r_odd == odd ? r[i] : r[i] + d;
    }
    out.push_back(std::move(y));
  }
  return out;
}

std::vector<NeighborSpec> strict_two_neighbors(const NeighborSpec& spec) {
  std::vector<NeighborSpec> out;
  const std::int64_t dd = 2 * spec.d;
  for (auto& y : strict_two_candidates(spec.d, spec.x)) {
    if (!is_isotropic(dd, y)) continue;
    for (int eps = 0; eps <= 1; ++eps) out.push_back({dd, y, eps});
  }
  return out;
}

std::int64_t exceptional_min_d(int n, int k) {
  // Odd values in [1, h] number (h + 1) / 2, nonzero even ones h / 2.
  for (std::int64_t d = 2;; d += 2) {
    const std::int64_t h = d / 2;
    if ((h + 1) / 2 >= n - k && h / 2 >= k) return d;
  }
}

void exceptional_biased_stream(int n, int k, std::int64_t d, const ExceptionalVisitor& visit) {
  if (d % 2 != 0 || d < 2) throw std::invalid_argument("exceptional stream: d must be even");
  if (k < 0 || k > n) throw std::invalid_argument("exceptional stream: need 0 <= k <= n");
  if (k > 24) throw std::invalid_argument("exceptional stream: k too large");
  // x_1 = 1 is odd, so k = n leaves nothing; distinctness needs room in [1, d/2].
  if (k == n || d < exceptional_min_d(n, k)) return;
  const std::int64_t h = d / 2;
  std::vector<std::int64_t> odds, evens;
  for (std::int64_t v = 1; v <= h; ++v) (v % 2 ? odds : evens).push_back(v);

  const int a = n - k;
  std::vector<int> oi(a), ei(k);
  bool stop = false;

  auto check = [&](const Vec& x) {
    if (!is_isotropic(d, x)) return;
    Vec xi(n, 0);
    bool found = false;
    for (std::uint32_t mask = 0; mask < (1u << k) && !found; ++mask) {
      std::int64_t s = 0;
      for (int j = 0; j < k; ++j) s += (mask >> j & 1) ? -x[a + j] : x[a + j];
      if (floor_mod(s, d) != 0) continue;
      for (int j = 0; j < k; ++j) xi[a + j] = (mask >> j & 1) ? -1 : 1;
      found = true;
    }
    if (!found) return;
    // xi lies in M_d(x) and is characteristic there; eps decides it on x'/d:
    // d (xi.x') = x'.x' mod 2 d^2.
    const Int d2 = Int(d) * d;
    for (int eps = 0; eps <= 1 && !stop; ++eps) {
      const auto xp = lift(d, x, eps);
      Int dot = 0, norm = 0;
      for (int i = 0; i < n; ++i) {
        dot += xp[i] * xi[i];
        norm += xp[i] * xp[i];
      }
      Int diff = Int(d) * dot - norm;
      Int m = 2 * d2;
      if (mpz_divisible_p(diff.get_mpz_t(), m.get_mpz_t()) == 0) continue;
      ExceptionalCandidate c{{d, x, eps}, xi};
      if (!visit(c)) stop = true;
      break;
    }
  };

  // Combinations in lexicographic order; the odd part must start with 1.
  auto next_comb = [](std::vector<int>& idx, int pool, int first_fixed) {
    const int r = static_cast<int>(idx.size());
    for (int i = r - 1; i >= first_fixed; --i) {
      if (idx[i] < pool - (r - i)) {
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < a; ++i) oi[i] = i;
  do {
    for (int i = 0; i < k; ++i) ei[i] = i;
    do {
      Vec x(n);
      for (int i = 0; i < a; ++i) x[i] = odds[oi[i]];
      for (int i = 0; i < k; ++i) x[a + i] = evens[ei[i]];
      check(x);
      if (stop) return;
    } while (k > 0 && next_comb(ei, static_cast<int>(evens.size()), 0));
  } while (next_comb(oi, static_cast<int>(odds.size()), 1));
}

}  // namespace unihunt
