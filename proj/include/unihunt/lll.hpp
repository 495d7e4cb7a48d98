#pragma once

#include "unihunt/matrix.hpp"

namespace unihunt {

struct LllResult {
  BigMatrix transform;  // rows: new basis vectors in old coordinates, det +-1
  BigMatrix gram;       // transform * gram * transform^T
};

// Integral LLL on a positive definite Gram matrix with delta = 99/100.
// Only Gram entries are used; all arithmetic is exact.
LllResult lll_gram(const BigMatrix& gram);
LllResult lll_gram(const IntMatrix& gram);

}  // namespace unihunt
