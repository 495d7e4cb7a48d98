#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace unihunt {

using Int = mpz_class;
using Rational = mpq_class;
using Vec = std::vector<std::int64_t>;

// Row-major dense matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n, T(0));
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  std::span<T> row(int i) { return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const T> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<Int>;

BigMatrix to_big(const IntMatrix& m);
// Throws std::overflow_error if an entry does not fit in 64 bits.
IntMatrix to_small(const BigMatrix& m);
std::int64_t to_small(const Int& v);

IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);
BigMatrix transpose(const BigMatrix& m);

// u^T G v for coordinate vectors in the basis with Gram matrix G.
std::int64_t bilinear(const IntMatrix& gram, std::span<const std::int64_t> u,
                      std::span<const std::int64_t> v);
std::int64_t quadratic(const IntMatrix& gram, std::span<const std::int64_t> u);

// G u as a vector.
Vec mat_vec(const IntMatrix& gram, std::span<const std::int64_t> u);

// B G B^T for a change of basis given by the rows of B.
IntMatrix congruence(const IntMatrix& basis, const IntMatrix& gram);
BigMatrix congruence(const BigMatrix& basis, const BigMatrix& gram);

// Exact determinant by fraction-free elimination.
Int determinant(const BigMatrix& m);
Int determinant(const IntMatrix& m);

// Leading principal minors d_1..d_n (fraction-free pivots).
std::vector<Int> leading_minors(const BigMatrix& m);

// Rank over Q.
int rank(const BigMatrix& rows);
int rank(const IntMatrix& rows);

// Rows of a vector list packed into a matrix.
IntMatrix from_rows(const std::vector<Vec>& rows, int cols);

std::string format_vector(std::span<const std::int64_t> v, char sep = ',');

}  // namespace unihunt
