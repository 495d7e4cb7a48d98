#include "unihunt/bv.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

namespace unihunt {

std::vector<Vec> graph_vertices(const Lattice& lattice) {
  const VectorSet s = short_vectors(lattice, 3);
  std::vector<Vec> reps;
  reps.reserve(s.reps.size());
  for (const auto& r : s.reps) reps.push_back(r.v);
  return reps;
}

BitMatrix build_graph(const Lattice& lattice, bool parallel) {
  const auto reps = graph_vertices(lattice);
  return parallel ? adjacency_parallel(lattice.gram(), reps) : adjacency_serial(lattice.gram(), reps);
}

BvInvariant bv_from_adjacency(const BitMatrix& a, BvVariant variant, bool parallel) {
  const int n = a.size();
  BvInvariant inv;
  inv.variant = variant;
  inv.vertices = static_cast<std::uint32_t>(n);
  std::uint64_t ones = 0, diag = 0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < a.words(); ++k) ones += std::popcount(a.row(i)[k]);
    diag += a.get(i, i);
  }
  inv.edges = (ones - diag) / 2;
  inv.arrows = ones;
  const auto s = parallel ? square_mod_parallel(a) : square_mod_serial(a);
  inv.columns.assign(n, std::vector<std::uint16_t>(n));
  // S is symmetric, so column v is row v.
  for (int v = 0; v < n; ++v) {
    auto& c = inv.columns[v];
    std::copy(s.begin() + static_cast<std::ptrdiff_t>(v) * n, s.begin() + static_cast<std::ptrdiff_t>(v + 1) * n,
              c.begin());
    std::sort(c.begin(), c.end());
  }
  std::sort(inv.columns.begin(), inv.columns.end());
  if (variant == BvVariant::kSetOfMultisets)
    inv.columns.erase(std::unique(inv.columns.begin(), inv.columns.end()), inv.columns.end());
  inv.hash = fnv1a64(bv_serialize(inv));
  return inv;
}

BvInvariant bv(const Lattice& lattice, BvVariant variant, bool parallel) {
  return bv_from_adjacency(build_graph(lattice, parallel), variant, parallel);
}

std::vector<std::uint8_t> bv_serialize(const BvInvariant& inv) {
  std::vector<std::uint8_t> out;
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(inv.vertices >> (8 * i)));
  out.push_back(static_cast<std::uint8_t>(inv.variant));
  for (const auto& c : inv.columns) {
    for (auto e : c) {
      out.push_back(static_cast<std::uint8_t>(e & 0xFF));
      out.push_back(static_cast<std::uint8_t>(e >> 8));
    }
    out.push_back(0xFF);
    out.push_back(0xFF);
  }
  return out;
}

std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t parse_hash_hex(const std::string& text) {
  if (text.size() != 16) throw std::invalid_argument("hash must have 16 hex digits: '" + text + "'");
  std::uint64_t h = 0;
  for (char c : text) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else throw std::invalid_argument("hash must be lowercase hex: '" + text + "'");
    h = (h << 4) | static_cast<std::uint64_t>(d);
  }
  return h;
}

BvComparison bv_compare(const BvInvariant& a, const BvInvariant& b) {
  if (a.variant != b.variant) throw std::invalid_argument("BV invariants of different variants");
  const bool same = a.vertices == b.vertices && a.columns == b.columns;
  if (a.hash != b.hash) return BvComparison::kDifferent;
  return same ? BvComparison::kEqual : BvComparison::kHashCollision;
}

bool bv_equal(const BvInvariant& a, const BvInvariant& b) { return bv_compare(a, b) == BvComparison::kEqual; }

}  // namespace unihunt
