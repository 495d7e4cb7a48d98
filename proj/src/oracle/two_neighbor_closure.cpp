#include "unihunt/oracle.hpp"

#include <map>

#include <omp.h>

#include "unihunt/enumerate.hpp"
#include "unihunt/errors.hpp"
#include "unihunt/hnf.hpp"
#include "unihunt/isometry.hpp"

namespace unihunt {

RootSystem coxeter_root_system(const IntMatrix& gram, const std::vector<Vec>& reps) {
  const std::size_t m = reps.size();
  const int n = gram.rows();
  // Flat 32-bit copies keep the pair loop vectorizable.
  std::vector<std::int32_t> flat(m * n), images(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec im = mat_vec(gram, reps[i]);
    for (int k = 0; k < n; ++k) {
      flat[i * n + k] = static_cast<std::int32_t>(reps[i][k]);
      images[i * n + k] = static_cast<std::int32_t>(im[k]);
    }
  }
  auto meets = [&](std::size_t a, std::size_t b) {
    const std::int32_t* x = &images[a * n];
    const std::int32_t* y = &flat[b * n];
    std::int32_t s = 0;
    for (int k = 0; k < n; ++k) s += x[k] * y[k];
    return s != 0;
  };
  std::vector<std::size_t> unvisited(m);
  for (std::size_t i = 0; i < m; ++i) unvisited[i] = m - 1 - i;
  std::vector<RootComponent> comps;
  while (!unvisited.empty()) {
    const std::size_t start = unvisited.back();
    unvisited.pop_back();
    std::vector<std::size_t> comp{start};
    for (std::size_t q = 0; q < comp.size(); ++q) {
      for (std::size_t k = 0; k < unvisited.size();) {
        if (meets(comp[q], unvisited[k])) {
          comp.push_back(unvisited[k]);
          unvisited[k] = unvisited.back();
          unvisited.pop_back();
        } else {
          ++k;
        }
      }
    }
    std::int64_t deg = 0;
    for (std::size_t k = 1; k < comp.size(); ++k) deg += meets(start, comp[k]) ? 1 : 0;
    const std::int64_t count = 2 * static_cast<std::int64_t>(comp.size());
    const std::int64_t h = (deg + 4) / 2;
    if (count % h != 0) throw std::logic_error("coxeter_root_system: not a root system");
    const int r = static_cast<int>(count / h);
    if (count == static_cast<std::int64_t>(r) * (r + 1))
      comps.push_back(make_component('A', r));
    else if (r >= 4 && count == 2 * static_cast<std::int64_t>(r) * (r - 1))
      comps.push_back(make_component('D', r));
    else if ((r == 6 && count == 72) || (r == 7 && count == 126) || (r == 8 && count == 240))
      comps.push_back(make_component('E', r));
    else
      throw std::logic_error("coxeter_root_system: unknown component");
  }
  return RootSystem(std::move(comps));
}

namespace {

using Fingerprint = std::pair<std::int64_t, RootSystem>;

struct Sighting {
  std::int64_t count = 0;
  std::uint64_t mask = ~std::uint64_t{0};
  int which = 0;
};

Vec bits(int n, std::uint64_t mask) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
  return v;
}

// The two 2-neighbors of the lattice with Gram g at the class of v mod 2:
// which = 0 is M + Z v/2, which = 1 is M + Z (v/2 + u) with u.v odd.
Lattice build_neighbor(const IntMatrix& g, const Vec& v, int which) {
  const int n = g.rows();
  const Vec gv = mat_vec(g, v);
  int i0 = 0;
  while (i0 < n && gv[i0] % 2 == 0) ++i0;
  if (i0 == n) throw std::logic_error("oracle: v is in 2L");
  HnfBuilder h(n);
  for (int j = 0; j < n; ++j) {
    Vec b(n, 0);
    if (j == i0) {
      b[j] = 4;
    } else {
      b[j] = 2;
      if (gv[j] % 2 != 0) b[i0] = 2;
    }
    h.add(b);
  }
  Vec z = v;
  if (which == 1) z[i0] += 2;
  h.add(z);
  const BigMatrix basis = h.basis();
  BigMatrix prod = congruence(basis, to_big(g));
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!mpz_divisible_ui_p(prod(i, j).get_mpz_t(), 4)) throw std::logic_error("oracle: neighbor not integral");
      out(i, j) = to_small(Int(prod(i, j) / 4));
    }
  return lll_reduce(Lattice(out));
}

Fingerprint fingerprint_of(const Lattice& lat) {
  const VectorSet s = short_vectors(lat, 2);
  std::int64_t r1 = 0;
  std::vector<Vec> roots;
  for (const auto& r : s.reps) {
    if (r.norm == 1) r1 += 2;
    else roots.push_back(r.v);
  }
  return {r1, coxeter_root_system(lat.gram(), roots)};
}

}  // namespace

OracleResult two_neighbor_closure(int n, int threads) {
  if (n < 1 || n > 24) throw std::invalid_argument("oracle: rank out of range");
  const int nt = threads > 0 ? threads : omp_get_max_threads();
  OracleResult res;
  res.n = n;
  std::vector<int> parent;
  {
    OracleClass c;
    c.lattice = Lattice::standard(n);
    auto fp = fingerprint_of(c.lattice);
    c.r1 = fp.first;
    c.root = fp.second;
    res.classes.push_back(c);
    parent.push_back(-1);
  }
  std::map<Fingerprint, int> known{{Fingerprint{res.classes[0].r1, res.classes[0].root}, 0}};

  for (std::size_t ci = 0; ci < res.classes.size(); ++ci) {
    const IntMatrix g = res.classes[ci].lattice.gram();
    const VectorSet shorts = short_vectors(res.classes[ci].lattice, 2);
    std::vector<Vec> short_images;
    for (const auto& s : shorts.reps) short_images.push_back(mat_vec(g, s.v));

    const std::int64_t total = std::int64_t{1} << n;
    std::vector<std::map<Fingerprint, Sighting>> local(nt);
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt)
    for (std::int64_t mask = 1; mask < total; ++mask) {
      const Vec v = bits(n, static_cast<std::uint64_t>(mask));
      if (quadratic(g, v) % 4 != 0) continue;
      const Vec gv = mat_vec(g, v);
      std::int64_t r1[2] = {0, 0};
      std::vector<Vec> roots[2];
      // Vectors of M = {w : w.v even}, doubled.
      for (std::size_t k = 0; k < shorts.reps.size(); ++k) {
        std::int64_t dot = 0;
        for (int i = 0; i < n; ++i) dot += short_images[k][i] * v[i];
        if (dot % 2 != 0) continue;
        Vec z = shorts.reps[k].v;
        for (auto& c : z) c *= 2;
        for (int w = 0; w < 2; ++w) {
          if (shorts.reps[k].norm == 1) r1[w] += 2;
          else roots[w].push_back(z);
        }
      }
      // Doubled vectors of the two odd cosets: z = v + 2t, t.v even or odd.
      enumerate_coset(g, v, 2, 8, [&](std::span<const std::int64_t> z, std::int64_t norm) {
        std::int64_t par = 0;
        for (int i = 0; i < n; ++i) par += ((z[i] - v[i]) / 2) * gv[i];
        const int w = static_cast<int>(floor_mod(par, 2));
        if (norm == 4) {
          r1[w] += 1;
        } else if (norm == 8) {
          Vec c(z.begin(), z.end());
          int f = 0;
          while (c[f] == 0) ++f;
          if (c[f] > 0) roots[w].push_back(std::move(c));
        }
      });
      auto& mine = local[omp_get_thread_num()];
      for (int w = 0; w < 2; ++w) {
        Fingerprint fp{r1[w], coxeter_root_system(g, roots[w])};
        Sighting& s = mine[fp];
        ++s.count;
        if (static_cast<std::uint64_t>(mask) < s.mask || (static_cast<std::uint64_t>(mask) == s.mask && w < s.which)) {
          s.mask = static_cast<std::uint64_t>(mask);
          s.which = w;
        }
      }
    }
    std::map<Fingerprint, Sighting> merged;
    for (auto& m : local)
      for (auto& [fp, s] : m) {
        Sighting& t = merged[fp];
        t.count += s.count;
        if (s.mask < t.mask || (s.mask == t.mask && s.which < t.which)) {
          t.mask = s.mask;
          t.which = s.which;
        }
      }

    for (auto& row : res.counts) row.resize(res.classes.size(), 0);
    std::vector<std::int64_t> row(res.classes.size(), 0);
    for (const auto& [fp, s] : merged) {
      Lattice nb = build_neighbor(g, bits(n, s.mask), s.which);
      auto it = known.find(fp);
      if (it == known.end()) {
        if (fingerprint_of(nb) != fp) throw InconsistencyError("oracle: coset fingerprint disagrees with the lattice");
        OracleClass c;
        c.lattice = nb;
        c.r1 = fp.first;
        c.root = fp.second;
        it = known.emplace(fp, static_cast<int>(res.classes.size())).first;
        res.classes.push_back(std::move(c));
        parent.push_back(static_cast<int>(ci));
        row.push_back(0);
      } else if (parent[it->second] != static_cast<int>(ci)) {
        ++res.isometry_tests;
        if (!is_isometric(nb, res.classes[it->second].lattice))
          throw InconsistencyError("oracle: two classes share the fingerprint " + std::to_string(fp.first) + " " +
                                   fp.second.symbol());
      }
      row[it->second] += s.count;
    }
    res.counts.push_back(std::move(row));
  }
  const std::size_t k = res.classes.size();
  for (auto& row : res.counts) row.resize(k, 0);

  // |O_j| = |O_i| N(j, i) / N(i, j) along the discovery tree.
  Int fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  res.classes[0].aut = fact << n;
  for (std::size_t j = 1; j < k; ++j) {
    const int i = parent[j];
    const Int num = res.classes[i].aut * res.counts[j][i];
    if (res.counts[i][j] == 0 || res.counts[j][i] == 0 || !mpz_divisible_ui_p(num.get_mpz_t(), res.counts[i][j]))
      throw InconsistencyError("oracle: neighbor counts do not give an integral group order");
    res.classes[j].aut = num / res.counts[i][j];
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (res.classes[i].aut * res.counts[j][i] != res.classes[j].aut * res.counts[i][j])
        throw InconsistencyError("oracle: neighbor counts are not consistent around a cycle");
  return res;
}

MassTable OracleResult::mass_table() const {
  MassTable t;
  for (const auto& c : classes) {
    if (c.r1 != 0) continue;
    Rational q(weyl_order(c.root), c.aut);
    q.canonicalize();
    t[c.root] += q;
  }
  return t;
}

Rational OracleResult::mass() const {
  Rational s = 0;
  for (const auto& c : classes) {
    Rational q(Int(1), c.aut);
    s += q;
  }
  return s;
}

}  // namespace unihunt
