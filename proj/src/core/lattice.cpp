#include "unihunt/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "unihunt/enumerate.hpp"
#include "unihunt/errors.hpp"
#include "unihunt/hnf.hpp"
#include "unihunt/lll.hpp"

namespace unihunt {

namespace {

void validate_gram(const IntMatrix& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("Gram matrix is not square");
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < i; ++j)
      if (g(i, j) != g(j, i)) throw std::invalid_argument("Gram matrix is not symmetric");
  for (const auto& m : leading_minors(to_big(g)))
    if (sgn(m) <= 0) throw std::invalid_argument("Gram matrix is not positive definite");
}

}  // namespace

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) { validate_gram(gram_); }

Lattice::Lattice(IntMatrix gram, Embedding embedding) : gram_(std::move(gram)) {
  validate_gram(gram_);
  const auto& e = embedding.numer;
  if (e.rows() != rank()) throw std::invalid_argument("embedding has wrong number of rows");
  BigMatrix prod = multiply(e, transpose(e));
  const Int d2 = embedding.denom * embedding.denom;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (prod(i, j) != d2 * static_cast<long>(gram_(i, j)))
        throw std::invalid_argument("embedding does not reproduce the Gram matrix");
  embedding_ = std::move(embedding);
}

Lattice Lattice::standard(int n) {
  Embedding e{BigMatrix::identity(n), 1};
  return Lattice(IntMatrix::identity(n), std::move(e));
}

const Embedding& Lattice::embedding() const {
  if (!embedding_) throw std::logic_error("lattice has no embedding");
  return *embedding_;
}

Int Lattice::determinant() const { return unihunt::determinant(gram_); }

bool Lattice::is_even() const {
  for (int i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

Lattice Lattice::transformed(const BigMatrix& t) const {
  if (t.rows() != rank() || t.cols() != rank()) throw std::invalid_argument("transform has wrong shape");
  const Int det = unihunt::determinant(t);
  if (det != 1 && det != -1) throw std::invalid_argument("transform is not unimodular");
  IntMatrix g = to_small(congruence(t, to_big(gram_)));
  if (!embedding_) return Lattice(std::move(g));
  Embedding e{multiply(t, embedding_->numer), embedding_->denom};
  return Lattice(std::move(g), std::move(e));
}

Lattice lll_reduce(const Lattice& lattice, BigMatrix* transform) {
  LllResult r = lll_gram(lattice.gram());
  Lattice out = lattice.transformed(r.transform);
  if (transform) *transform = std::move(r.transform);
  return out;
}

void canonicalize_sign(Vec& v) {
  for (auto x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

VectorSet short_vectors(const Lattice& lattice, std::int64_t bound) {
  const int n = lattice.rank();
  VectorSet out;
  out.bound = bound;
  if (bound < 1 || n == 0) return out;
  BigMatrix t;
  const Lattice red = lll_reduce(lattice, &t);
  const IntMatrix ts = to_small(t);
  enumerate_short(red.gram(), bound, [&](std::span<const std::int64_t> y, std::int64_t norm) {
    Vec v(n, 0);
    for (int i = 0; i < n; ++i) {
      if (y[i] == 0) continue;
      for (int j = 0; j < n; ++j) v[j] += y[i] * ts(i, j);
    }
    canonicalize_sign(v);
    out.reps.push_back({std::move(v), norm});
  });
  std::sort(out.reps.begin(), out.reps.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.v < b.v;
  });
  return out;
}

std::map<std::int64_t, std::int64_t> norm_counts(const Lattice& lattice, std::int64_t bound) {
  std::map<std::int64_t, std::int64_t> counts;
  for (std::int64_t i = 1; i <= bound; ++i) counts[i] = 0;
  if (bound < 1) return counts;
  BigMatrix t;
  const Lattice red = lll_reduce(lattice, &t);
  enumerate_short(red.gram(), bound,
                  [&](std::span<const std::int64_t>, std::int64_t norm) { counts[norm] += 2; });
  return counts;
}

std::optional<Int> sublattice_index(int n, const std::vector<Vec>& gens) {
  HnfBuilder h(n);
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("generator has wrong length");
    h.add(g);
  }
  if (!h.full_rank()) return std::nullopt;
  return h.index();
}

Lattice read_gram(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&](std::vector<std::string>& tokens) {
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::istringstream is(line);
      tokens.clear();
      for (std::string tok; is >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  };
  auto parse_int = [&](const std::string& tok) -> std::int64_t {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || tok.empty()) throw InputError("expected an integer, got '" + tok + "'", lineno);
    return v;
  };
  std::vector<std::string> tokens;
  if (!next_line(tokens)) throw InputError("empty Gram file", lineno + 1);
  if (tokens.size() != 1) throw InputError("first line must contain only the rank n", lineno);
  const std::int64_t n = parse_int(tokens[0]);
  if (n < 1 || n > 4096) throw InputError("rank must be a positive integer", lineno);
  IntMatrix g(static_cast<int>(n), static_cast<int>(n));
  for (int i = 0; i < n; ++i) {
    if (!next_line(tokens)) throw InputError("expected " + std::to_string(n) + " matrix rows", lineno + 1);
    if (static_cast<std::int64_t>(tokens.size()) != n)
      throw InputError("row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(n),
                       lineno);
    for (int j = 0; j < n; ++j) g(i, j) = parse_int(tokens[j]);
  }
  if (next_line(tokens)) throw InputError("trailing data after Gram matrix", lineno);
  try {
    return Lattice(std::move(g));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Lattice read_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return read_gram(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_gram(std::ostream& out, const Lattice& lattice) {
  const int n = lattice.rank();
  out << n << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << lattice.gram()(i, j);
    }
    out << '\n';
  }
}

std::optional<Vec> lattice_coordinates(const Lattice& lattice, std::span<const Int> v, const Int& denom) {
  const Embedding& e = lattice.embedding();
  const int n = lattice.rank();
  if (static_cast<int>(v.size()) != e.numer.cols()) throw std::invalid_argument("lattice_coordinates: dimension mismatch");
  // Solve c N = v * (e.denom / denom) over Q, N square.
  const int m = e.numer.cols();
  if (m != n) throw std::invalid_argument("lattice_coordinates: embedding is not square");
  Matrix<Rational> a(m, n + 1);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) a(j, i) = Rational(e.numer(i, j));
    a(j, n) = Rational(v[j] * e.denom, denom);
    a(j, n).canonicalize();
  }
  for (int col = 0, row = 0; col < n; ++col, ++row) {
    int p = row;
    while (p < m && sgn(a(p, col)) == 0) ++p;
    if (p == m) throw std::logic_error("lattice_coordinates: singular embedding");
    a.swap_rows(row, p);
    for (int i = 0; i < m; ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col) / a(row, col);
      for (int j = col; j <= n; ++j) a(i, j) -= f * a(row, j);
    }
  }
  Vec c(n);
  for (int i = 0; i < n; ++i) {
    const Rational q = a(i, n) / a(i, i);
    if (q.get_den() != 1) return std::nullopt;
    c[i] = to_small(q.get_num());
  }
  return c;
}

}  // namespace unihunt
