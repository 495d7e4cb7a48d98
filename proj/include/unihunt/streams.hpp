#pragma once

#include <functional>

#include "unihunt/neighbor.hpp"

namespace unihunt {

// y = x mod d with y in [0, 2d), y_1 = 1 and y_i = y_j mod 2 whenever x_i = x_j.
// One candidate per parity choice on the classes of equal coordinates, before any isotropy test.
std::vector<Vec> strict_two_candidates(std::int64_t d, std::span<const std::int64_t> x);
// 2^(number of distinct values of x - 1).
Int strict_two_count(std::int64_t d, std::span<const std::int64_t> x);

// The 2d-neighbor specs N_2d(y; eps) over the 2d-isotropic candidates, eps in {0, 1}.
// Requires d odd and x_1 = 1.
std::vector<NeighborSpec> strict_two_neighbors(const NeighborSpec& spec);

struct ExceptionalCandidate {
  NeighborSpec spec;
  Vec xi;  // (0, ..., 0, s_1, ..., s_k), characteristic in neighbor(spec)
};

// d-isotropic x with x_1 = 1 and pairwise distinct coordinates in [1, d/2], the first n - k odd and the last
// k even with sum_i s_i x_i = 0 mod d for some signs s. eps is the one making xi characteristic.
// The callback returns false to stop.
using ExceptionalVisitor = std::function<bool(const ExceptionalCandidate&)>;
void exceptional_biased_stream(int n, int k, std::int64_t d, const ExceptionalVisitor& visit);

// Smallest even d for which the parity shape fits into [1, d/2] with distinct values.
std::int64_t exceptional_min_d(int n, int k);

}  // namespace unihunt
