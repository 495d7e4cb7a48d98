#include "unihunt/characteristic.hpp"

#include <algorithm>

#include "unihunt/enumerate.hpp"
#include "unihunt/hnf.hpp"

namespace unihunt {

namespace {

// Solves G w = b over GF(2) for invertible G mod 2.
Vec solve_mod2(const IntMatrix& g, const Vec& b) {
  const int n = g.rows();
  std::vector<std::vector<std::uint8_t>> a(n, std::vector<std::uint8_t>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = static_cast<std::uint8_t>(g(i, j) & 1);
    a[i][n] = static_cast<std::uint8_t>(b[i] & 1);
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && !a[p][c]) ++p;
    if (p == n) throw std::invalid_argument("Gram matrix is singular mod 2");
    std::swap(a[p], a[c]);
    for (int i = 0; i < n; ++i)
      if (i != c && a[i][c])
        for (int j = c; j <= n; ++j) a[i][j] ^= a[c][j];
  }
  Vec w(n);
  for (int i = 0; i < n; ++i) w[i] = a[i][n];
  return w;
}

Vec map_back(std::span<const std::int64_t> y, const IntMatrix& t) {
  const int n = t.cols();
  Vec v(n, 0);
  for (int i = 0; i < t.rows(); ++i) {
    if (y[i] == 0) continue;
    for (int j = 0; j < n; ++j) v[j] += y[i] * t(i, j);
  }
  return v;
}

void require_odd_unimodular(const Lattice& l) {
  if (l.is_even()) throw std::invalid_argument("characteristic vectors are not defined here for even lattices");
  if (!l.is_unimodular()) throw std::invalid_argument("lattice is not unimodular");
}

}  // namespace

Vec characteristic_representative(const Lattice& lattice) {
  require_odd_unimodular(lattice);
  Vec diag(lattice.rank());
  for (int i = 0; i < lattice.rank(); ++i) diag[i] = lattice.gram()(i, i);
  return solve_mod2(lattice.gram(), diag);
}

bool is_characteristic(const Lattice& lattice, std::span<const std::int64_t> xi) {
  const Vec gx = mat_vec(lattice.gram(), xi);
  for (int i = 0; i < lattice.rank(); ++i)
    if ((gx[i] - lattice.gram()(i, i)) % 2 != 0) return false;
  return true;
}

namespace {

// Visits characteristic vectors of norm <= bound (both signs) in original coordinates.
void for_each_characteristic(const Lattice& lattice, std::int64_t bound, const VectorVisitor& visit) {
  require_odd_unimodular(lattice);
  BigMatrix t;
  const Lattice red = lll_reduce(lattice, &t);
  const IntMatrix ts = to_small(t);
  const Vec w = characteristic_representative(red);
  enumerate_coset(red.gram(), w, 2, bound, [&](std::span<const std::int64_t> y, std::int64_t norm) {
    visit(map_back(y, ts), norm);
  });
}

}  // namespace

CharVectorReport characteristic_vectors(const Lattice& lattice, std::int64_t bound) {
  CharVectorReport r;
  for_each_characteristic(lattice, std::max<std::int64_t>(bound, 7),
                          [&](std::span<const std::int64_t> v, std::int64_t norm) {
                            if (norm < 8) ++r.exc_size;
                            if (norm > bound) return;
                            Vec c(v.begin(), v.end());
                            canonicalize_sign(c);
                            if (!std::equal(c.begin(), c.end(), v.begin())) return;
                            r.vectors.push_back({std::move(c), norm});
                          });
  std::sort(r.vectors.begin(), r.vectors.end(), [](const ShortVector& a, const ShortVector& b) {
    return a.norm != b.norm ? a.norm < b.norm : a.v < b.v;
  });
  if (!r.vectors.empty()) r.min_norm = r.vectors.front().norm;
  return r;
}

bool is_exceptional(const Lattice& lattice) { return characteristic_vectors(lattice, 0).exc_size > 0; }

std::optional<std::int64_t> min_characteristic_norm(const Lattice& lattice, std::int64_t cap) {
  const std::int64_t r = lattice.rank() % 8 == 0 ? 8 : lattice.rank() % 8;
  for (std::int64_t b = r; b <= cap; b += 8) {
    bool found = false;
    for_each_characteristic(lattice, b, [&](std::span<const std::int64_t>, std::int64_t) { found = true; });
    if (found) return b;
  }
  return std::nullopt;
}

EvenPart even_part(const Lattice& lattice) {
  const int n = lattice.rank();
  if (lattice.is_even()) return {lattice, BigMatrix::identity(n), true};
  int k = 0;
  while (lattice.gram()(k, k) % 2 == 0) ++k;
  BigMatrix b(n, n, Int(0));
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      b(i, k) = 2;
    } else {
      b(i, i) = 1;
      if (lattice.gram()(i, i) % 2 != 0) b(i, k) = 1;
    }
  }
  IntMatrix g = to_small(congruence(b, to_big(lattice.gram())));
  if (lattice.has_embedding()) {
    Embedding e{multiply(b, lattice.embedding().numer), lattice.embedding().denom};
    return {Lattice(std::move(g), std::move(e)), b, false};
  }
  return {Lattice(std::move(g)), b, false};
}

namespace {

// L_ev + Z (w/2), with w in the coordinates of the original lattice.
Lattice overlattice_half(const Lattice& lattice, const BigMatrix& even_basis, const Vec& w) {
  const int n = lattice.rank();
  HnfBuilder h(n);
  std::vector<Int> row(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) row[j] = 2 * even_basis(i, j);
    h.add(row);
  }
  h.add(w);
  const BigMatrix b = h.basis();
  BigMatrix g = congruence(b, to_big(lattice.gram()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!mpz_divisible_ui_p(g(i, j).get_mpz_t(), 4)) throw std::logic_error("companion is not integral");
      mpz_divexact_ui(g(i, j).get_mpz_t(), g(i, j).get_mpz_t(), 4);
    }
  if (lattice.has_embedding()) {
    Embedding e{multiply(b, lattice.embedding().numer), 2 * lattice.embedding().denom};
    return lll_reduce(Lattice(to_small(g), std::move(e)));
  }
  return lll_reduce(Lattice(to_small(g)));
}

}  // namespace

std::array<Lattice, 2> companions(const Lattice& lattice) {
  if (lattice.rank() % 8 != 4) throw std::invalid_argument("companions need rank = 4 mod 8");
  require_odd_unimodular(lattice);
  const EvenPart ev = even_part(lattice);
  const Vec w = characteristic_representative(lattice);
  int k = 0;
  while (lattice.gram()(k, k) % 2 == 0) ++k;
  Vec w2 = w;
  w2[k] += 2;  // w/2 + e_k, with e_k of odd norm
  return {overlattice_half(lattice, ev.basis, w), overlattice_half(lattice, ev.basis, w2)};
}

std::optional<Lattice> singular_companion(const Lattice& lattice) {
  if (norm_counts(lattice, 1).at(1) != 0) throw std::invalid_argument("singular_companion needs r_1 = 0");
  if (!is_exceptional(lattice)) return std::nullopt;
  auto pair = companions(lattice);
  std::optional<Lattice> found;
  for (auto& c : pair) {
    if (norm_counts(c, 1).at(1) == 0) continue;
    if (found) throw std::logic_error("both companions contain norm 1 vectors");
    found = std::move(c);
  }
  return found;
}

Rational char_norm_bound(std::int64_t n, std::int64_t p) {
  Int nn = static_cast<long>(n), pp = static_cast<long>(p);
  Rational r(4 * nn * nn * nn - nn, 3 * pp * pp);
  r.canonicalize();
  return r;
}

}  // namespace unihunt
