#pragma once

#include <cstdint>
#include <vector>

#include "unihunt/matrix.hpp"

namespace unihunt {

constexpr std::uint32_t kBvPrime = 1009;

// Square 0/1 matrix stored as packed 64-bit rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

  int size() const { return n_; }
  int words() const { return words_; }
  bool get(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1U; }
  void set(int i, int j, bool v) {
    std::uint64_t& w = bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)];
    const std::uint64_t m = std::uint64_t{1} << (j & 63);
    w = v ? (w | m) : (w & ~m);
  }
  const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }
  std::uint64_t* row(int i) { return bits_.data() + static_cast<std::size_t>(i) * words_; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// A(u, v) = reps[u] . G reps[v] mod 2.
// Serial reference: exact integer inner products. Parallel: packed parity bits, OpenMP over rows.
BitMatrix adjacency_serial(const IntMatrix& gram, const std::vector<Vec>& reps);
BitMatrix adjacency_parallel(const IntMatrix& gram, const std::vector<Vec>& reps);

// S = A^2 mod 1009 for a symmetric 0/1 matrix A, row-major n*n.
// Serial reference: triple loop with periodic reduction. Parallel: popcounts of row
// intersections, OpenMP over row blocks.
std::vector<std::uint16_t> square_mod_serial(const BitMatrix& a);
std::vector<std::uint16_t> square_mod_parallel(const BitMatrix& a);

}  // namespace unihunt
