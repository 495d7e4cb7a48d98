#pragma once

#include <array>
#include <optional>

#include "unihunt/lattice.hpp"

namespace unihunt {

struct CharVectorReport {
  std::vector<ShortVector> vectors;  // one per +-pair, norm <= requested bound
  std::int64_t exc_size = 0;         // number of characteristic vectors of norm < 8, both signs
  std::optional<std::int64_t> min_norm;
};

// Some characteristic vector w (G w = diag G mod 2) of an odd unimodular lattice.
// Throws std::invalid_argument for even or non-unimodular input.
Vec characteristic_representative(const Lattice& lattice);

CharVectorReport characteristic_vectors(const Lattice& lattice, std::int64_t bound);
bool is_exceptional(const Lattice& lattice);

// Smallest characteristic norm that is <= cap, if any.
std::optional<std::int64_t> min_characteristic_norm(const Lattice& lattice, std::int64_t cap);

// Checks xi.v = v.v mod 2 on every basis vector.
bool is_characteristic(const Lattice& lattice, std::span<const std::int64_t> xi);

struct EvenPart {
  Lattice lattice;
  BigMatrix basis;  // rows in the coordinates of the original lattice
  bool was_even = false;
};

EvenPart even_part(const Lattice& lattice);

// The two other odd unimodular overlattices of the even part (rank = 4 mod 8).
std::array<Lattice, 2> companions(const Lattice& lattice);

// The companion containing norm 1 vectors, when the lattice is exceptional with r_1 = 0.
std::optional<Lattice> singular_companion(const Lattice& lattice);

// (4n^3 - n) / (3p^2)
Rational char_norm_bound(std::int64_t n, std::int64_t p);

}  // namespace unihunt
