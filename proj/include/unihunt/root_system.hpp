#pragma once

#include <string>
#include <vector>

#include "unihunt/lattice.hpp"

namespace unihunt {

struct RootComponent {
  char type = 'A';  // 'A', 'D' or 'E'
  int rank = 1;

  std::int64_t root_count() const;
  Int weyl_order() const;
  std::string symbol() const;

  // Serialization order: rank, then root count, then letter.
  friend bool operator<(const RootComponent& a, const RootComponent& b);
  friend bool operator==(const RootComponent& a, const RootComponent& b) = default;
};

// Throws std::invalid_argument for non-ADE or non-normalized symbols (D2, D3, A0, E9, ...).
RootComponent make_component(char type, int rank);

class RootSystem {
 public:
  RootSystem() = default;
  explicit RootSystem(std::vector<RootComponent> components);

  // Sorted components, repeated according to multiplicity.
  const std::vector<RootComponent>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  int total_rank() const;
  std::int64_t root_count() const;

  // Symbol grammar: "0", "D28", "8A1+2A2".
  std::string symbol() const;
  static RootSystem parse(const std::string& symbol);

  friend bool operator==(const RootSystem& a, const RootSystem& b) = default;
  friend bool operator<(const RootSystem& a, const RootSystem& b) {
    return a.components_ < b.components_;
  }

 private:
  std::vector<RootComponent> components_;
};

Int weyl_order(const RootSystem& r);

// Decomposes the root set given by representatives (one per +-pair, norm 2 under gram).
RootSystem classify_roots(const IntMatrix& gram, const std::vector<Vec>& roots);

RootSystem root_system(const Lattice& lattice);

// Gram matrix of a standard root lattice; D_k is the even sublattice of Z^k.
// The symbol form accepts sums and returns the orthogonal sum of the components.
Lattice standard_root_lattice(const RootComponent& c);
Lattice standard_root_lattice(const std::string& symbol);

// Orthogonal direct sum.
Lattice direct_sum(const Lattice& a, const Lattice& b);

}  // namespace unihunt
