#pragma once

#include <optional>
#include <vector>

#include "unihunt/matrix.hpp"

namespace unihunt {

// Incremental row Hermite normal form of the Z-span of added vectors.
// Row j of the echelon form (if present) has its pivot in column j.
class HnfBuilder {
 public:
  explicit HnfBuilder(int n);

  void add(std::span<const std::int64_t> v);
  void add(std::span<const Int> v);

  int dim() const { return n_; }
  int rank() const;
  bool full_rank() const { return rank() == n_; }

  // [Z^n : span], only meaningful when full_rank().
  Int index() const;

  // Echelon rows with positive pivots, entries above each pivot reduced into [0, pivot).
  BigMatrix basis() const;

 private:
  void insert(std::vector<Int> v);
  void reduce_above(int col);

  int n_;
  std::vector<std::optional<std::vector<Int>>> rows_;
  Int modulus_ = 0;  // index once full rank, used to keep entries small
};

// Extended gcd: returns g = a*s + b*t with g >= 0.
Int xgcd(const Int& a, const Int& b, Int& s, Int& t);

}  // namespace unihunt
