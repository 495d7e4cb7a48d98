#include "unihunt/hnf.hpp"

namespace unihunt {

Int xgcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

HnfBuilder::HnfBuilder(int n) : n_(n), rows_(n) {}

int HnfBuilder::rank() const {
  int r = 0;
  for (const auto& row : rows_) r += row.has_value();
  return r;
}

Int HnfBuilder::index() const {
  Int d = 1;
  for (int j = 0; j < n_; ++j) {
    if (!rows_[j]) return 0;
    d *= (*rows_[j])[j];
  }
  return d;
}

void HnfBuilder::add(std::span<const std::int64_t> v) {
  std::vector<Int> w(n_);
  for (int i = 0; i < n_; ++i) w[i] = static_cast<long>(v[i]);
  insert(std::move(w));
}

void HnfBuilder::add(std::span<const Int> v) { insert(std::vector<Int>(v.begin(), v.end())); }

void HnfBuilder::reduce_above(int col) {
  const auto& piv = *rows_[col];
  const Int& p = piv[col];
  Int q;
  for (int i = 0; i < col; ++i) {
    if (!rows_[i]) continue;
    auto& r = *rows_[i];
    mpz_fdiv_q(q.get_mpz_t(), r[col].get_mpz_t(), p.get_mpz_t());
    if (sgn(q) == 0) continue;
    for (int k = col; k < n_; ++k) r[k] -= q * piv[k];
  }
}

void HnfBuilder::insert(std::vector<Int> v) {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("HnfBuilder: dimension mismatch");
  if (sgn(modulus_) != 0)
    for (auto& x : v) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t());
  bool changed = false;
  Int s, t, q;
  for (int j = 0; j < n_; ++j) {
    if (sgn(v[j]) == 0) continue;
    if (!rows_[j]) {
      if (sgn(v[j]) < 0)
        for (auto& x : v) x = -x;
      rows_[j] = std::move(v);
      changed = true;
      break;
    }
    auto& h = *rows_[j];
    if (mpz_divisible_p(v[j].get_mpz_t(), h[j].get_mpz_t())) {
      mpz_divexact(q.get_mpz_t(), v[j].get_mpz_t(), h[j].get_mpz_t());
      for (int k = j; k < n_; ++k) v[k] -= q * h[k];
      continue;
    }
    const Int p = h[j];
    const Int c = v[j];
    const Int g = xgcd(p, c, s, t);
    const Int pg = p / g, cg = c / g;
    for (int k = j; k < n_; ++k) {
      Int nh = s * h[k] + t * v[k];
      v[k] = pg * v[k] - cg * h[k];
      h[k] = std::move(nh);
    }
    changed = true;
  }
  if (!changed) return;
  for (int j = 0; j < n_; ++j)
    if (rows_[j]) reduce_above(j);
  // Once full rank, index * Z^n lies in the span; later inputs are reduced modulo it.
  if (full_rank()) modulus_ = index();
}

BigMatrix HnfBuilder::basis() const {
  BigMatrix b(rank(), n_, Int(0));
  int r = 0;
  for (int j = 0; j < n_; ++j) {
    if (!rows_[j]) continue;
    for (int k = 0; k < n_; ++k) b(r, k) = (*rows_[j])[k];
    ++r;
  }
  return b;
}

}  // namespace unihunt
