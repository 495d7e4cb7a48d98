#include "unihunt/matrix.hpp"

#include <sstream>

namespace unihunt {

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = static_cast<long>(m(i, j));
  return r;
}

std::int64_t to_small(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

IntMatrix to_small(const BigMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = to_small(m(i, j));
  return r;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix r(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
  return r;
}

BigMatrix transpose(const BigMatrix& m) {
  BigMatrix r(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
  return r;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  IntMatrix r(a.rows(), b.cols(), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  BigMatrix r(a.rows(), b.cols(), Int(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

std::int64_t bilinear(const IntMatrix& gram, std::span<const std::int64_t> u,
                      std::span<const std::int64_t> v) {
  const int n = gram.rows();
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    std::int64_t t = 0;
    const auto row = gram.row(i);
    for (int j = 0; j < n; ++j) t += row[j] * v[j];
    s += u[i] * t;
  }
  return s;
}

std::int64_t quadratic(const IntMatrix& gram, std::span<const std::int64_t> u) {
  return bilinear(gram, u, u);
}

Vec mat_vec(const IntMatrix& gram, std::span<const std::int64_t> u) {
  const int n = gram.rows();
  Vec r(n, 0);
  for (int i = 0; i < n; ++i) {
    const auto row = gram.row(i);
    std::int64_t t = 0;
    for (int j = 0; j < n; ++j) t += row[j] * u[j];
    r[i] = t;
  }
  return r;
}

IntMatrix congruence(const IntMatrix& basis, const IntMatrix& gram) {
  return multiply(multiply(basis, gram), transpose(basis));
}

BigMatrix congruence(const BigMatrix& basis, const BigMatrix& gram) {
  return multiply(multiply(basis, gram), transpose(basis));
}

Int determinant(const BigMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const int n = m.rows();
  if (n == 0) return 1;
  BigMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(a(k, k)) == 0) {
      int p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j));
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  Int det = a(n - 1, n - 1);
  return sign > 0 ? det : Int(-det);
}

Int determinant(const IntMatrix& m) { return determinant(to_big(m)); }

std::vector<Int> leading_minors(const BigMatrix& m) {
  const int n = m.rows();
  std::vector<Int> minors(n, Int(0));
  BigMatrix a = m;
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    minors[k] = a(k, k);
    if (sgn(a(k, k)) == 0) return minors;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j));
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return minors;
}

int rank(const BigMatrix& rows) {
  BigMatrix a = rows;
  const int r = a.rows(), c = a.cols();
  int rk = 0;
  Int prev = 1;
  for (int col = 0; col < c && rk < r; ++col) {
    int p = rk;
    while (p < r && sgn(a(p, col)) == 0) ++p;
    if (p == r) continue;
    a.swap_rows(rk, p);
    for (int i = rk + 1; i < r; ++i) {
      for (int j = col + 1; j < c; ++j) {
        a(i, j) = a(i, j) * a(rk, col) - a(i, col) * a(rk, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = a(rk, col);
    ++rk;
  }
  return rk;
}

int rank(const IntMatrix& rows) { return rank(to_big(rows)); }

IntMatrix from_rows(const std::vector<Vec>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols, 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
  return m;
}

std::string format_vector(std::span<const std::int64_t> v, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

}  // namespace unihunt
