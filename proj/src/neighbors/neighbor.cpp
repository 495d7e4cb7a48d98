#include "unihunt/neighbor.hpp"

#include <numeric>
#include <sstream>

#include "unihunt/errors.hpp"
#include "unihunt/hnf.hpp"

namespace unihunt {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  Int s, t;
  const Int g = xgcd(Int(static_cast<long>(floor_mod(a, m))), Int(static_cast<long>(m)), s, t);
  if (g != 1) throw std::invalid_argument("mod_inverse: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return floor_mod(s.get_si(), m);
}

std::string format_spec(const NeighborSpec& s) {
  std::string out = std::to_string(s.d) + ":" + format_vector(s.x);
  if (s.d % 2 == 0) out += ":" + std::to_string(s.eps);
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::int64_t parse_i64(const std::string& tok, const char* what) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (tok.empty() || pos != tok.size()) throw std::invalid_argument(std::string("bad ") + what + " '" + tok + "'");
  return v;
}

}  // namespace

NeighborSpec parse_spec(const std::string& text) {
  const auto fields = split(text, ':');
  if (fields.size() < 2 || fields.size() > 3) throw std::invalid_argument("neighbor spec must be d:x1,...,xn[:eps]");
  NeighborSpec s;
  s.d = parse_i64(fields[0], "modulus");
  if (s.d < 1) throw std::invalid_argument("modulus must be positive");
  for (const auto& tok : split(fields[1], ',')) s.x.push_back(parse_i64(tok, "coordinate"));
  if (s.x.empty()) throw std::invalid_argument("empty coordinate vector");
  if (fields.size() == 3) {
    const auto e = parse_i64(fields[2], "eps");
    if (e != 0 && e != 1) throw std::invalid_argument("eps must be 0 or 1");
    if (s.d % 2 == 1 && e != 0) throw std::invalid_argument("eps must be 0 for odd d");
    s.eps = static_cast<int>(e);
  }
  return s;
}

bool is_isotropic(std::int64_t d, std::span<const std::int64_t> x) {
  const std::int64_t m = (d % 2 == 0) ? 2 * d : d;
  Int s = 0;
  for (auto v : x) s += Int(static_cast<long>(v)) * static_cast<long>(v);
  return mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(m)) != 0;
}

namespace {

int unit_coordinate(std::int64_t d, std::span<const std::int64_t> x) {
  for (std::size_t j = 0; j < x.size(); ++j)
    if (std::gcd(floor_mod(x[j], d), d) == 1) return static_cast<int>(j);
  return -1;
}

}  // namespace

BigMatrix m_lattice_basis(std::int64_t d, std::span<const std::int64_t> x) {
  const int n = static_cast<int>(x.size());
  if (d < 1) throw std::invalid_argument("modulus must be positive");
  if (d == 1) return BigMatrix::identity(n);
  std::int64_t g = d;
  for (auto v : x) g = std::gcd(g, floor_mod(v, d));
  if (g != 1) throw std::invalid_argument("x is degenerate modulo d");
  const int j = unit_coordinate(d, x);
  if (j >= 0) {
    const std::int64_t inv = mod_inverse(x[j], d);
    BigMatrix b(n, n, Int(0));
    for (int i = 0; i < n; ++i) {
      if (i == j) {
        b(i, j) = static_cast<long>(d);
      } else {
        b(i, i) = 1;
        const auto c = static_cast<std::int64_t>(static_cast<__int128>(floor_mod(x[i], d)) * inv % d);
        b(i, j) = -static_cast<long>(c);
      }
    }
    return b;
  }
  // No unit coordinate: kernel of (x, -d) over Z, projected to the first n coordinates.
  std::vector<Int> a(n + 1);
  for (int i = 0; i < n; ++i) a[i] = static_cast<long>(x[i]);
  a[n] = static_cast<long>(d);
  std::vector<std::vector<Int>> cols(n + 1, std::vector<Int>(n + 1, Int(0)));
  for (int i = 0; i <= n; ++i) cols[i][i] = 1;
  Int s, t;
  for (int k = 1; k <= n; ++k) {
    if (sgn(a[k]) == 0) continue;
    const Int gk = xgcd(a[0], a[k], s, t);
    const Int p = a[k] / gk, q = a[0] / gk;
    std::vector<Int> c0(n + 1), ck(n + 1);
    for (int i = 0; i <= n; ++i) {
      c0[i] = s * cols[0][i] + t * cols[k][i];
      ck[i] = p * cols[0][i] - q * cols[k][i];
    }
    cols[0] = std::move(c0);
    cols[k] = std::move(ck);
    a[0] = gk;
    a[k] = 0;
  }
  HnfBuilder h(n);
  for (int k = 1; k <= n; ++k) h.add(std::span<const Int>(cols[k].data(), n));
  if (!h.full_rank()) throw std::logic_error("m_lattice_basis: kernel is not of full rank");
  return h.basis();
}

Lattice m_lattice(std::int64_t d, std::span<const std::int64_t> x) {
  BigMatrix b = m_lattice_basis(d, x);
  IntMatrix g = to_small(multiply(b, transpose(b)));
  return lll_reduce(Lattice(std::move(g), Embedding{std::move(b), 1}));
}

std::vector<Int> lift(std::int64_t d, std::span<const std::int64_t> x, int eps) {
  const int n = static_cast<int>(x.size());
  std::vector<Int> xp(n);
  for (int i = 0; i < n; ++i) xp[i] = static_cast<long>(x[i]);
  if (!is_isotropic(d, x)) throw std::invalid_argument("lift: x is not d-isotropic");
  if (d % 2 == 1 && eps != 0) throw std::invalid_argument("lift: eps must be 0 for odd d");
  if (d == 1) return xp;
  const int j = unit_coordinate(d, x);
  if (j < 0) throw LiftError("lift: no coordinate of x is invertible mod " + std::to_string(d));
  Int s = 0;
  for (const auto& v : xp) s += v * v;
  const Int dd = static_cast<long>(d);
  const Int xj = xp[j];
  Int t;
  if (d % 2 == 1) {
    const Int m = s / dd;
    const Int inv2xj = static_cast<long>(mod_inverse(floor_mod(2 * floor_mod(x[j], d), d), d));
    t = -m * inv2xj;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), dd.get_mpz_t());
  } else {
    const Int k = s / (2 * dd);
    const std::int64_t half = d / 2;
    const Int h = static_cast<long>(half);
    if (half == 1) {
      t = 0;
    } else {
      t = -k * static_cast<long>(mod_inverse(floor_mod(x[j], half), half));
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), h.get_mpz_t());
    }
    // (2x'.x - x.x) / d^2 decides eps; shifting t by d/2 flips it since x_j is odd.
    Int r = (s + 2 * dd * t * xj) / (dd * dd);
    Int par;
    mpz_fdiv_r_ui(par.get_mpz_t(), r.get_mpz_t(), 2);
    if (par != eps) t += h;
  }
  xp[j] += dd * t;
  Int norm = 0, cross = 0;
  for (int i = 0; i < n; ++i) {
    norm += xp[i] * xp[i];
    cross += xp[i] * static_cast<long>(x[i]);
  }
  const Int d2 = dd * dd;
  if (!mpz_divisible_p(norm.get_mpz_t(), d2.get_mpz_t())) throw std::logic_error("lift: x'.x' is not divisible by d^2");
  if (d % 2 == 0) {
    Int diff = 2 * cross - s - static_cast<long>(eps) * d2;
    Int m2 = 2 * d2;
    if (!mpz_divisible_p(diff.get_mpz_t(), m2.get_mpz_t())) throw std::logic_error("lift: eps condition failed");
  }
  return xp;
}

Lattice neighbor(std::int64_t d, std::span<const std::int64_t> x, int eps) {
  const int n = static_cast<int>(x.size());
  if (d == 1) return Lattice::standard(n);
  const std::vector<Int> xp = lift(d, x, eps);
  const BigMatrix mb = m_lattice_basis(d, x);
  const Int dd = static_cast<long>(d);
  HnfBuilder h(n);
  std::vector<Int> row(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) row[k] = dd * mb(i, k);
    h.add(row);
  }
  h.add(xp);
  BigMatrix b = h.basis();
  BigMatrix g = multiply(b, transpose(b));
  const Int d2 = dd * dd;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!mpz_divisible_p(g(i, k).get_mpz_t(), d2.get_mpz_t()))
        throw InconsistencyError("neighbor: Gram matrix is not integral");
      mpz_divexact(g(i, k).get_mpz_t(), g(i, k).get_mpz_t(), d2.get_mpz_t());
    }
  Lattice l(to_small(g), Embedding{std::move(b), dd});
  if (!l.is_unimodular()) throw InconsistencyError("neighbor: lattice is not unimodular");
  return lll_reduce(l);
}

std::vector<Vec> visible_roots(std::int64_t d, std::span<const std::int64_t> x) {
  const int n = static_cast<int>(x.size());
  std::vector<Vec> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::int64_t a = floor_mod(x[i], d), b = floor_mod(x[j], d);
      if (a == b) {
        Vec v(n, 0);
        v[i] = 1;
        v[j] = -1;
        out.push_back(std::move(v));
      }
      if (floor_mod(a + b, d) == 0) {
        Vec v(n, 0);
        v[i] = 1;
        v[j] = 1;
        out.push_back(std::move(v));
      }
    }
  return out;
}

RootSystem visible_root_system(std::int64_t d, std::span<const std::int64_t> x) {
  return classify_roots(IntMatrix::identity(static_cast<int>(x.size())), visible_roots(d, x));
}

}  // namespace unihunt
