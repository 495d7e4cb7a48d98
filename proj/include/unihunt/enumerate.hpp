#pragma once

#include <functional>

#include "unihunt/matrix.hpp"

namespace unihunt {

using VectorVisitor = std::function<void(std::span<const std::int64_t> v, std::int64_t norm)>;

// Fincke-Pohst enumeration in the coordinates of gram. Visits one vector of
// every pair {v, -v} with 0 < v.v <= bound. The candidate tree is pruned with
// a floating Cholesky decomposition (with slack); every visited norm is exact.
// Enumeration is fastest when gram is LLL-reduced.
void enumerate_short(const IntMatrix& gram, std::int64_t bound, const VectorVisitor& visit);

// Visits every v = w + m*y, y in Z^n, with v.v <= bound (both signs when the coset is symmetric).
void enumerate_coset(const IntMatrix& gram, std::span<const std::int64_t> w, std::int64_t m,
                     std::int64_t bound, const VectorVisitor& visit);

}  // namespace unihunt
