#pragma once

#include <optional>

#include "unihunt/lattice.hpp"
#include "unihunt/root_system.hpp"

namespace unihunt {

struct AutOrderReport {
  Int order;
  RootSystem roots;
  Int weyl;
  Int reduced_order;      // order / weyl
  Rational reduced_mass;  // weyl / order
};

struct IsometryOptions {
  std::int64_t tries = 200;  // reduce() tries when looking for a short generating basis
  std::uint64_t seed = 1;
};

// |O(L)| by backtracking over images of a short basis (stabilizer chain).
Int automorphism_order(const Lattice& lattice, IsometryOptions options = {});
AutOrderReport aut_order(const Lattice& lattice, IsometryOptions options = {});
Rational reduced_mass(const Lattice& lattice, IsometryOptions options = {});

// Rows of the returned matrix are the images of the basis of a inside b
// (coordinates of b), or nullopt when a and b are not isometric.
std::optional<BigMatrix> find_isometry(const Lattice& a, const Lattice& b, IsometryOptions options = {});
inline bool is_isometric(const Lattice& a, const Lattice& b, IsometryOptions options = {}) {
  return find_isometry(a, b, options).has_value();
}

}  // namespace unihunt
