#include "unihunt/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace unihunt {

std::int64_t RootComponent::root_count() const {
  switch (type) {
    case 'A':
      return static_cast<std::int64_t>(rank) * (rank + 1);
    case 'D':
      return 2 * static_cast<std::int64_t>(rank) * (rank - 1);
    default:
      return rank == 6 ? 72 : rank == 7 ? 126 : 240;
  }
}

Int RootComponent::weyl_order() const {
  Int w;
  switch (type) {
    case 'A':
      mpz_fac_ui(w.get_mpz_t(), rank + 1);
      return w;
    case 'D': {
      mpz_fac_ui(w.get_mpz_t(), rank);
      Int p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, rank - 1);
      return w * p;
    }
    default:
      return rank == 6 ? Int(51840) : rank == 7 ? Int(2903040) : Int(696729600);
  }
}

std::string RootComponent::symbol() const { return std::string(1, type) + std::to_string(rank); }

bool operator<(const RootComponent& a, const RootComponent& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  if (a.root_count() != b.root_count()) return a.root_count() < b.root_count();
  return a.type < b.type;
}

RootComponent make_component(char type, int rank) {
  const bool ok = (type == 'A' && rank >= 1) || (type == 'D' && rank >= 4) ||
                  (type == 'E' && rank >= 6 && rank <= 8);
  if (!ok) throw std::invalid_argument("not a normalized ADE symbol: " + std::string(1, type) + std::to_string(rank));
  return {type, rank};
}

RootSystem::RootSystem(std::vector<RootComponent> components) : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end());
}

int RootSystem::total_rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

std::int64_t RootSystem::root_count() const {
  std::int64_t r = 0;
  for (const auto& c : components_) r += c.root_count();
  return r;
}

std::string RootSystem::symbol() const {
  if (components_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < components_.size();) {
    std::size_t j = i;
    while (j < components_.size() && components_[j] == components_[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += components_[i].symbol();
    i = j;
  }
  return out;
}

RootSystem RootSystem::parse(const std::string& symbol) {
  if (symbol == "0") return {};
  if (symbol.empty()) throw std::invalid_argument("empty root system symbol");
  std::vector<RootComponent> comps;
  std::size_t pos = 0;
  auto read_number = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < symbol.size() && std::isdigit(static_cast<unsigned char>(symbol[p]))) ++p;
    if (p == start) return -1;
    if (p - start > 6) throw std::invalid_argument("number too large in root system symbol: " + symbol);
    return std::stoi(symbol.substr(start, p - start));
  };
  for (;;) {
    int mult = read_number(pos);
    if (mult == 0) throw std::invalid_argument("zero multiplicity in root system symbol: " + symbol);
    if (mult < 0) mult = 1;
    if (pos >= symbol.size()) throw std::invalid_argument("missing component letter in: " + symbol);
    const char type = symbol[pos++];
    if (type != 'A' && type != 'D' && type != 'E')
      throw std::invalid_argument("bad component letter in root system symbol: " + symbol);
    const int rank = read_number(pos);
    if (rank < 0) throw std::invalid_argument("missing component rank in: " + symbol);
    const RootComponent c = make_component(type, rank);
    for (int i = 0; i < mult; ++i) comps.push_back(c);
    if (pos == symbol.size()) break;
    if (symbol[pos] != '+') throw std::invalid_argument("unexpected character in root system symbol: " + symbol);
    ++pos;
  }
  return RootSystem(std::move(comps));
}

Int weyl_order(const RootSystem& r) {
  Int w = 1;
  for (const auto& c : r.components()) w *= c.weyl_order();
  return w;
}

namespace {

RootComponent identify(int rank, std::int64_t count) {
  if (count == static_cast<std::int64_t>(rank) * (rank + 1)) return {'A', rank};
  if (rank >= 4 && count == 2 * static_cast<std::int64_t>(rank) * (rank - 1)) return {'D', rank};
  if (rank == 6 && count == 72) return {'E', 6};
  if (rank == 7 && count == 126) return {'E', 7};
  if (rank == 8 && count == 240) return {'E', 8};
  throw std::logic_error("root component with rank " + std::to_string(rank) + " and " +
                         std::to_string(count) + " roots is not of ADE type");
}

}  // namespace

RootSystem classify_roots(const IntMatrix& gram, const std::vector<Vec>& roots) {
  const std::size_t m = roots.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Vec> images;
  images.reserve(m);
  for (const auto& r : roots) images.push_back(mat_vec(gram, r));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < roots[j].size(); ++k) s += images[i][k] * roots[j][k];
      if (s != 0) parent[find(i)] = find(j);
    }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }
  std::vector<RootComponent> comps;
  for (const auto& g : groups) {
    std::vector<Vec> rows;
    for (auto i : g) rows.push_back(roots[i]);
    const int rk = rank(from_rows(rows, static_cast<int>(roots[g[0]].size())));
    comps.push_back(identify(rk, 2 * static_cast<std::int64_t>(g.size())));
  }
  return RootSystem(std::move(comps));
}

RootSystem root_system(const Lattice& lattice) {
  const VectorSet s = short_vectors(lattice, 2);
  std::vector<Vec> roots;
  for (const auto& r : s.reps)
    if (r.norm == 2) roots.push_back(r.v);
  return classify_roots(lattice.gram(), roots);
}

namespace {

IntMatrix cartan_chain(int k) {
  IntMatrix g(k, k, 0);
  for (int i = 0; i < k; ++i) {
    g(i, i) = 2;
    if (i + 1 < k) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return g;
}

}  // namespace

Lattice standard_root_lattice(const RootComponent& c) {
  const RootComponent v = make_component(c.type, c.rank);
  const int k = v.rank;
  if (v.type == 'A') return Lattice(cartan_chain(k));
  if (v.type == 'D') {
    // e_1 - e_2, ..., e_{k-1} - e_k, e_{k-1} + e_k inside Z^k.
    BigMatrix b(k, k, Int(0));
    for (int i = 0; i + 1 < k; ++i) {
      b(i, i) = 1;
      b(i, i + 1) = -1;
    }
    b(k - 1, k - 2) = 1;
    b(k - 1, k - 1) = 1;
    return Lattice(to_small(multiply(b, transpose(b))), Embedding{b, 1});
  }
  // E_k: chain 1-3-4-...-k with node 2 attached to node 4 (Bourbaki labels).
  IntMatrix g(k, k, 0);
  const std::vector<int> chain = [&] {
    std::vector<int> ch{0};
    for (int i = 2; i < k; ++i) ch.push_back(i);
    return ch;
  }();
  for (int i = 0; i < k; ++i) g(i, i) = 2;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) g(chain[i], chain[i + 1]) = g(chain[i + 1], chain[i]) = -1;
  g(1, 3) = g(3, 1) = -1;
  return Lattice(g);
}

Lattice standard_root_lattice(const std::string& symbol) {
  const RootSystem r = RootSystem::parse(symbol);
  if (r.empty()) throw std::invalid_argument("no root lattice for the empty root system");
  Lattice out = standard_root_lattice(r.components()[0]);
  for (std::size_t i = 1; i < r.components().size(); ++i)
    out = direct_sum(out, standard_root_lattice(r.components()[i]));
  return out;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const int n = a.rank(), m = b.rank();
  IntMatrix g(n + m, n + m, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  return Lattice(std::move(g));
}

}  // namespace unihunt
