#pragma once

#include <cstdint>

#include "unihunt/lattice.hpp"

namespace unihunt {

struct BasisSearchResult {
  bool success = false;
  BigMatrix basis;  // rows in lattice coordinates, |det| = 1 on success
  std::int64_t achieved_bound = 0;
  std::int64_t tries_used = 0;
  std::uint64_t seed = 0;
};

struct ReduceOptions {
  bool assume_large_r = false;  // start at k0 = 1
};

// Random search for a Z-basis made of vectors of norm <= b: k vectors drawn from
// S = R_{<=b} and n - k from R = R_{<=b-1}, for k = k0..n, t tries each.
BasisSearchResult reduce(const Lattice& lattice, std::int64_t b, std::int64_t t, std::uint64_t seed,
                         ReduceOptions options = {});

// |det| == 1 test with a mod-2 and small-prime prefilter before the exact determinant.
bool is_unimodular_basis(const std::vector<const Vec*>& rows);

struct BestBasis {
  BigMatrix basis;  // rows in lattice coordinates, sorted by norm
  std::int64_t max_norm = 0;
  int count_at_max = 0;
};

// LLL, then reduce(b, t) for b = 1, 2, ... below the LLL maximum; keeps the best.
BestBasis best_basis(const Lattice& lattice, std::int64_t t, std::uint64_t seed);

}  // namespace unihunt
