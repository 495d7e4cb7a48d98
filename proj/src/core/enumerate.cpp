#include "unihunt/enumerate.hpp"

#include <cmath>

namespace unihunt {

namespace {

using Real = long double;

struct Cholesky {
  int n;
  std::vector<Real> q;  // q[i*n+j]: diagonal terms and upper-triangular multipliers

  explicit Cholesky(const IntMatrix& g) : n(g.rows()), q(static_cast<std::size_t>(n) * n, 0) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) q[i * n + j] = static_cast<Real>(g(i, j));
    for (int i = 0; i < n; ++i) {
      const Real qii = q[i * n + i];
      if (!(qii > 0)) throw std::invalid_argument("enumerate: Gram matrix is not positive definite");
      for (int j = i + 1; j < n; ++j) q[i * n + j] /= qii;
      for (int k = i + 1; k < n; ++k)
        for (int j = k; j < n; ++j) q[k * n + j] -= qii * q[i * n + k] * q[i * n + j];
    }
  }
  Real diag(int i) const { return q[i * n + i]; }
  Real mu(int i, int j) const { return q[i * n + j]; }
};

class Enumerator {
 public:
  Enumerator(const IntMatrix& gram, std::vector<Real> center, Real bound, bool half,
             std::function<void(const Vec&)> leaf)
      : chol_(gram),
        n_(gram.rows()),
        center_(std::move(center)),
        half_(half),
        leaf_(std::move(leaf)),
        y_(n_, 0),
        z_(n_, 0) {
    budget_ = bound * (1 + 1e-12L) + 1e-9L;
  }

  void run() {
    if (n_ == 0) return;
    level(n_ - 1, budget_, true);
  }

 private:
  void level(int i, Real budget, bool zero_above) {
    Real t = center_[i];
    for (int j = i + 1; j < n_; ++j) t += chol_.mu(i, j) * z_[j];
    const Real qii = chol_.diag(i);
    const Real r = std::sqrt(std::max<Real>(budget, 0) / qii);
    std::int64_t lo = static_cast<std::int64_t>(std::ceil(-t - r));
    const std::int64_t hi = static_cast<std::int64_t>(std::floor(-t + r));
    if (half_ && zero_above && lo < 0) lo = 0;
    for (std::int64_t yi = lo; yi <= hi; ++yi) {
      const Real zi = static_cast<Real>(yi) + center_[i];
      const Real s = static_cast<Real>(yi) + t;
      const Real rest = budget - qii * s * s;
      if (rest < 0) continue;
      y_[i] = yi;
      z_[i] = zi;
      const bool zero = zero_above && yi == 0;
      if (i == 0) {
        if (half_ && zero) continue;
        leaf_(y_);
      } else {
        level(i - 1, rest, zero);
      }
    }
    y_[i] = 0;
    z_[i] = 0;
  }

  Cholesky chol_;
  int n_;
  std::vector<Real> center_;
  bool half_;
  std::function<void(const Vec&)> leaf_;
  Vec y_;
  std::vector<Real> z_;
  Real budget_;
};

}  // namespace

void enumerate_short(const IntMatrix& gram, std::int64_t bound, const VectorVisitor& visit) {
  if (bound < 1) return;
  const int n = gram.rows();
  Enumerator e(gram, std::vector<Real>(n, 0), static_cast<Real>(bound), true, [&](const Vec& y) {
    const std::int64_t norm = quadratic(gram, y);
    if (norm <= bound) visit(y, norm);
  });
  e.run();
}

void enumerate_coset(const IntMatrix& gram, std::span<const std::int64_t> w, std::int64_t m,
                     std::int64_t bound, const VectorVisitor& visit) {
  if (m <= 0) throw std::invalid_argument("enumerate_coset: modulus must be positive");
  if (bound < 0) return;
  const int n = gram.rows();
  std::vector<Real> c(n);
  for (int i = 0; i < n; ++i) c[i] = static_cast<Real>(w[i]) / static_cast<Real>(m);
  // Q(w + m y) = m^2 Q(y + w/m); scale the budget rather than the form.
  const Real scaled = static_cast<Real>(bound) / (static_cast<Real>(m) * m);
  Vec v(n);
  Enumerator e(gram, std::move(c), scaled, false, [&](const Vec& y) {
    for (int i = 0; i < n; ++i) v[i] = w[i] + m * y[i];
    const std::int64_t norm = quadratic(gram, v);
    if (norm <= bound) visit(v, norm);
  });
  e.run();
}

}  // namespace unihunt
