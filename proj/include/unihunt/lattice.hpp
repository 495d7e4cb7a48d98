#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "unihunt/matrix.hpp"

namespace unihunt {

// Basis rows numer(i, .) / denom inside Q^n.
struct Embedding {
  BigMatrix numer;
  Int denom = 1;
};

// Integral positive definite lattice given by its Gram matrix.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(IntMatrix gram);
  Lattice(IntMatrix gram, Embedding embedding);

  static Lattice standard(int n);

  int rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  bool has_embedding() const { return embedding_.has_value(); }
  const Embedding& embedding() const;

  Int determinant() const;
  bool is_unimodular() const { return determinant() == 1; }
  bool is_even() const;

  // New lattice object for the basis given by the rows of t (current coordinates).
  // Throws unless |det t| = 1.
  Lattice transformed(const BigMatrix& t) const;

 private:
  IntMatrix gram_;
  std::optional<Embedding> embedding_;
};

// LLL-reduced copy; transform (optional) receives the change of basis.
Lattice lll_reduce(const Lattice& lattice, BigMatrix* transform = nullptr);

struct ShortVector {
  Vec v;
  std::int64_t norm;
};

struct VectorSet {
  std::int64_t bound = 0;
  std::vector<ShortVector> reps;  // first nonzero coordinate positive, sorted by norm then lexicographically
};

// Makes the first nonzero coordinate positive.
void canonicalize_sign(Vec& v);

VectorSet short_vectors(const Lattice& lattice, std::int64_t bound);

// r_i for 1 <= i <= bound, both signs counted.
std::map<std::int64_t, std::int64_t> norm_counts(const Lattice& lattice, std::int64_t bound);

// [Z^n : span(gens)], or nullopt if gens do not have full rank.
std::optional<Int> sublattice_index(int n, const std::vector<Vec>& gens);
inline std::optional<Int> sublattice_index(const Lattice& lattice, const std::vector<Vec>& gens) {
  return sublattice_index(lattice.rank(), gens);
}

// Coordinates in the lattice basis of an ambient vector v / denom; nullopt if it is not in the lattice.
// Needs an embedding.
std::optional<Vec> lattice_coordinates(const Lattice& lattice, std::span<const Int> v, const Int& denom = 1);

// Gram text format: a line with n, then n rows of n integers.
Lattice read_gram(std::istream& in);
Lattice read_gram_file(const std::string& path);
void write_gram(std::ostream& out, const Lattice& lattice);

}  // namespace unihunt
