#include "unihunt/isometry.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "unihunt/reduce.hpp"

namespace unihunt {

namespace {

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ static_cast<std::uint64_t>(x)) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

using Histogram = std::vector<std::pair<std::int64_t, int>>;

// Interns fingerprints so that both lattices of an isometry test share ids.
class FingerprintTable {
 public:
  int id(const Histogram& h) {
    auto [it, inserted] = ids_.try_emplace(h, static_cast<int>(ids_.size()));
    return it->second;
  }

 private:
  std::map<Histogram, int> ids_;
};

// All vectors of norm <= bound (both signs), with G v and a fingerprint id each.
struct VectorTable {
  int n = 0;
  IntMatrix gram;
  std::vector<Vec> vecs;
  std::vector<Vec> gvecs;
  std::vector<std::int64_t> norms;
  std::vector<int> fp;
  std::unordered_map<Vec, int, VecHash> index;

  std::int64_t ip(int a, int b) const {
    const auto& g = gvecs[a];
    const auto& v = vecs[b];
    std::int64_t s = 0;
    for (int t = 0; t < n; ++t) s += g[t] * v[t];
    return s;
  }
  int find(const Vec& v) const {
    auto it = index.find(v);
    return it == index.end() ? -1 : it->second;
  }
};

VectorTable make_table(const Lattice& lattice, std::int64_t bound, FingerprintTable& fps) {
  VectorTable t;
  t.n = lattice.rank();
  t.gram = lattice.gram();
  const VectorSet s = short_vectors(lattice, bound);
  for (const auto& r : s.reps) {
    Vec neg = r.v;
    for (auto& x : neg) x = -x;
    t.vecs.push_back(r.v);
    t.norms.push_back(r.norm);
    t.vecs.push_back(std::move(neg));
    t.norms.push_back(r.norm);
  }
  for (std::size_t i = 0; i < t.vecs.size(); ++i) {
    t.gvecs.push_back(mat_vec(t.gram, t.vecs[i]));
    t.index.emplace(t.vecs[i], static_cast<int>(i));
  }
  // Probes: the vectors of minimal norm, one per sign pair.
  std::vector<int> probes;
  if (!s.reps.empty())
    for (std::size_t i = 0; i < t.vecs.size(); i += 2)
      if (t.norms[i] == s.reps.front().norm) probes.push_back(static_cast<int>(i));
  t.fp.resize(t.vecs.size());
  for (std::size_t i = 0; i < t.vecs.size(); ++i) {
    std::map<std::int64_t, int> h;
    for (int p : probes) {
      const std::int64_t x = t.ip(static_cast<int>(i), p);
      ++h[x < 0 ? -x : x];
    }
    Histogram hist(h.begin(), h.end());
    hist.emplace_back(-1, static_cast<int>(t.norms[i]));
    t.fp[i] = fps.id(hist);
  }
  return t;
}

// Searches images of the source basis e_0..e_{n-1} (Gram g, fingerprints sfp) among vectors of target.
class Backtracker {
 public:
  Backtracker(const IntMatrix& g, std::vector<int> sfp, const VectorTable& target)
      : g_(g), n_(g.rows()), target_(target), base_(n_) {
    for (int k = 0; k < n_; ++k)
      for (std::size_t w = 0; w < target.vecs.size(); ++w)
        if (target.norms[w] == g(k, k) && target.fp[w] == sfp[k]) base_[k].push_back(static_cast<int>(w));
  }

  const std::vector<int>& base(int k) const { return base_[k]; }

  // Candidate lists for levels >= from, given images of levels < from.
  bool initial_lists(int from, const std::vector<int>& img, std::vector<std::vector<int>>& lists) const {
    lists.assign(n_, {});
    for (int l = from; l < n_; ++l) {
      for (int w : base_[l]) {
        bool ok = true;
        for (int j = 0; j < from && ok; ++j) ok = target_.ip(w, img[j]) == g_(l, j);
        if (ok) lists[l].push_back(w);
      }
      if (lists[l].empty()) return false;
    }
    return true;
  }

  // At most `nodes` search nodes from now on; negative means no limit.
  void set_budget(std::int64_t nodes) const {
    budget_ = nodes;
    exhausted_ = false;
  }
  bool exhausted() const { return exhausted_; }

  // Completes img[k..n-1]; lists[l] holds the candidates for level l >= k.
  bool extend(int k, std::vector<int>& img, const std::vector<std::vector<int>>& lists) const {
    if (k == n_) return true;
    if (budget_ >= 0 && budget_-- == 0) exhausted_ = true;
    if (exhausted_) return false;
    std::vector<std::vector<int>> next(n_);
    for (int w : lists[k]) {
      bool ok = true;
      for (int l = k + 1; l < n_ && ok; ++l) {
        next[l].clear();
        for (int u : lists[l])
          if (u != w && target_.ip(u, w) == g_(l, k)) next[l].push_back(u);
        ok = !next[l].empty();
      }
      if (!ok) continue;
      img[k] = w;
      if (extend(k + 1, img, next)) return true;
    }
    return false;
  }

 private:
  const IntMatrix& g_;
  int n_;
  const VectorTable& target_;
  std::vector<std::vector<int>> base_;
  mutable std::int64_t budget_ = -1;
  mutable bool exhausted_ = false;
};

struct Frame {
  Lattice lattice;  // on the short basis
  BigMatrix basis;  // short basis rows in original coordinates
  std::int64_t bound = 0;
};

Frame make_frame(const Lattice& lattice, const IsometryOptions& options) {
  const BestBasis b = best_basis(lattice, options.tries, options.seed);
  return {lattice.transformed(b.basis), b.basis, b.max_norm};
}

std::vector<int> unit_indices(const VectorTable& t) {
  std::vector<int> idx(t.n);
  for (int k = 0; k < t.n; ++k) {
    Vec e(t.n, 0);
    e[k] = 1;
    idx[k] = t.find(e);
    if (idx[k] < 0) throw std::logic_error("basis vector missing from its vector table");
  }
  return idx;
}

Vec act(const Vec& v, const std::vector<Vec>& g) {
  const int n = static_cast<int>(v.size());
  Vec w(n, 0);
  for (int k = 0; k < n; ++k) {
    if (v[k] == 0) continue;
    for (int j = 0; j < n; ++j) w[j] += v[k] * g[k][j];
  }
  return w;
}

BigMatrix inverse_unimodular(const BigMatrix& m) {
  const int n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (sgn(a[p][c]) == 0) ++p;
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  BigMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a[i][n + j].get_den() != 1) throw std::logic_error("matrix is not unimodular");
      r(i, j) = a[i][n + j].get_num();
    }
  return r;
}

}  // namespace

Int automorphism_order(const Lattice& lattice, IsometryOptions options) {
  const Frame f = make_frame(lattice, options);
  FingerprintTable fps;
  const VectorTable t = make_table(f.lattice, f.bound, fps);
  const int n = t.n;
  const std::vector<int> unit = unit_indices(t);
  std::vector<int> sfp(n);
  for (int k = 0; k < n; ++k) sfp[k] = t.fp[unit[k]];
  const Backtracker bt(f.lattice.gram(), sfp, t);

  std::vector<std::vector<Vec>> gens;
  Int order = 1;
  std::vector<int> img(n);
  for (int i = n - 1; i >= 0; --i) {
    std::vector<char> in_orbit(t.vecs.size(), 0);
    std::vector<int> orbit{unit[i]};
    in_orbit[unit[i]] = 1;
    auto close_orbit = [&](std::size_t from) {
      for (std::size_t q = from; q < orbit.size(); ++q)
        for (const auto& g : gens) {
          const int w = t.find(act(t.vecs[orbit[q]], g));
          if (w < 0) throw std::logic_error("automorphism leaves the vector table");
          if (!in_orbit[w]) {
            in_orbit[w] = 1;
            orbit.push_back(w);
          }
        }
    };
    close_orbit(0);
    for (int j = 0; j < i; ++j) img[j] = unit[j];
    std::vector<std::vector<int>> lists;
    if (!bt.initial_lists(i, img, lists)) throw std::logic_error("identity is not an automorphism");
    const std::vector<int> cands = lists[i];
    // A failed candidate rules out its whole orbit under the generators known so far.
    std::vector<char> dead(t.vecs.size(), 0);
    for (int c : cands) {
      if (in_orbit[c] || dead[c]) continue;
      std::vector<std::vector<int>> one = lists;
      one[i] = {c};
      if (!bt.extend(i, img, one)) {
        std::vector<int> stack{c};
        dead[c] = 1;
        while (!stack.empty()) {
          const int v = stack.back();
          stack.pop_back();
          for (const auto& g : gens) {
            const int w = t.find(act(t.vecs[v], g));
            if (w >= 0 && !dead[w]) {
              dead[w] = 1;
              stack.push_back(w);
            }
          }
        }
        continue;
      }
      std::vector<Vec> g(n);
      for (int k = 0; k < n; ++k) g[k] = t.vecs[img[k]];
      gens.push_back(std::move(g));
      // The new generator acts on every orbit point, so close again from the start.
      close_orbit(0);
    }
    order *= static_cast<unsigned long>(orbit.size());
  }
  return order;
}

AutOrderReport aut_order(const Lattice& lattice, IsometryOptions options) {
  AutOrderReport r;
  r.order = automorphism_order(lattice, options);
  r.roots = root_system(lattice);
  r.weyl = weyl_order(r.roots);
  if (!mpz_divisible_p(r.order.get_mpz_t(), r.weyl.get_mpz_t()))
    throw std::logic_error("automorphism order is not divisible by the Weyl group order");
  r.reduced_order = r.order / r.weyl;
  r.reduced_mass = Rational(r.weyl, r.order);
  r.reduced_mass.canonicalize();
  return r;
}

Rational reduced_mass(const Lattice& lattice, IsometryOptions options) {
  return aut_order(lattice, options).reduced_mass;
}

namespace {

enum class Search { kFound, kNone, kGaveUp };

Search try_isometry(const Lattice& a, const Lattice& b, const IsometryOptions& options, std::int64_t budget,
                    BigMatrix& out) {
  const Frame f = make_frame(a, options);
  FingerprintTable fps;
  const VectorTable ta = make_table(f.lattice, f.bound, fps);
  const VectorTable tb = make_table(b, f.bound, fps);
  if (ta.vecs.size() != tb.vecs.size()) return Search::kNone;
  const int n = a.rank();
  const std::vector<int> unit = unit_indices(ta);
  std::vector<int> sfp(n);
  for (int k = 0; k < n; ++k) sfp[k] = ta.fp[unit[k]];
  const Backtracker bt(f.lattice.gram(), sfp, tb);
  std::vector<int> img(n);
  std::vector<std::vector<int>> lists;
  if (!bt.initial_lists(0, img, lists)) return Search::kNone;
  bt.set_budget(budget);
  if (!bt.extend(0, img, lists)) return bt.exhausted() ? Search::kGaveUp : Search::kNone;
  BigMatrix images(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) images(k, j) = static_cast<long>(tb.vecs[img[k]][j]);
  out = multiply(inverse_unimodular(f.basis), images);
  return Search::kFound;
}

}  // namespace

std::optional<BigMatrix> find_isometry(const Lattice& a, const Lattice& b, IsometryOptions options) {
  if (a.rank() != b.rank() || a.determinant() != b.determinant()) return std::nullopt;
  // Cheap invariant first: the root fingerprints cannot tell E8+E8 from D16+.
  if (!(root_system(a) == root_system(b))) return std::nullopt;
  // The search time depends heavily on the frame. Bounded attempts on fresh frames
  // (seed, seed + 1, ...) with growing budgets, then one attempt without a limit.
  constexpr int kAttempts = 8;
  BigMatrix m;
  for (int attempt = 0; attempt <= kAttempts; ++attempt) {
    IsometryOptions o = options;
    o.seed = options.seed + static_cast<std::uint64_t>(attempt);
    const std::int64_t budget = attempt < kAttempts ? (std::int64_t{2000} << (2 * attempt)) : -1;
    switch (try_isometry(a, b, o, budget, m)) {
      case Search::kFound:
        return m;
      case Search::kNone:
        return std::nullopt;
      case Search::kGaveUp:
        break;
    }
  }
  return std::nullopt;
}

}  // namespace unihunt
