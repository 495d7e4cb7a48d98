#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unihunt/kernels.hpp"
#include "unihunt/lattice.hpp"

namespace unihunt {

enum class BvVariant : std::uint8_t { kSetOfMultisets = 0, kMultisetOfMultisets = 1 };

struct BvInvariant {
  BvVariant variant = BvVariant::kSetOfMultisets;
  std::uint32_t vertices = 0;
  std::uint64_t edges = 0;   // unordered pairs u != v with A(u, v) = 1
  std::uint64_t arrows = 0;  // ones of A: ordered pairs, loops included
  std::vector<std::vector<std::uint16_t>> columns;  // sorted tuples, canonical order
  std::uint64_t hash = 0;
};

// Representatives of R_{<=3}(L) (norms 1 to 3), in the order produced by short_vectors.
std::vector<Vec> graph_vertices(const Lattice& lattice);
BitMatrix build_graph(const Lattice& lattice, bool parallel = true);

BvInvariant bv_from_adjacency(const BitMatrix& a, BvVariant variant = BvVariant::kSetOfMultisets,
                              bool parallel = true);
BvInvariant bv(const Lattice& lattice, BvVariant variant = BvVariant::kSetOfMultisets, bool parallel = true);

enum class BvComparison { kEqual, kDifferent, kHashCollision };

// Hash first, then the full invariant. Throws on variant mismatch.
BvComparison bv_compare(const BvInvariant& a, const BvInvariant& b);
bool bv_equal(const BvInvariant& a, const BvInvariant& b);

std::vector<std::uint8_t> bv_serialize(const BvInvariant& inv);
std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes);
std::string hash_hex(std::uint64_t h);
// Throws std::invalid_argument unless the text is 16 lowercase hex digits.
std::uint64_t parse_hash_hex(const std::string& text);

}  // namespace unihunt
