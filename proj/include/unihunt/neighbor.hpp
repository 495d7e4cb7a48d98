#pragma once

#include <functional>
#include <optional>
#include <string>

#include "unihunt/lattice.hpp"
#include "unihunt/root_system.hpp"

namespace unihunt {

// A cyclic d-neighbor N_d(x; eps) of Z^n. eps is 0 for odd d.
struct NeighborSpec {
  std::int64_t d = 1;
  Vec x;
  int eps = 0;

  int n() const { return static_cast<int>(x.size()); }
  friend bool operator==(const NeighborSpec&, const NeighborSpec&) = default;
};

// Record form "d:x1,...,xn:eps" (eps omitted for odd d).
std::string format_spec(const NeighborSpec& s);
// Throws std::invalid_argument on malformed text.
NeighborSpec parse_spec(const std::string& text);

class LiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// sum x_i^2 = 0 mod d (d odd) or mod 2d (d even).
bool is_isotropic(std::int64_t d, std::span<const std::int64_t> x);

// Basis rows (in Z^n) of M_d(x) = {v : v.x = 0 mod d}.
BigMatrix m_lattice_basis(std::int64_t d, std::span<const std::int64_t> x);
Lattice m_lattice(std::int64_t d, std::span<const std::int64_t> x);

// x' = x mod d with x'.x' = 0 mod d^2 and, for even d, 2x'.x = x.x + eps d^2 mod 2d^2.
// Throws LiftError if no coordinate of x is invertible mod d.
std::vector<Int> lift(std::int64_t d, std::span<const std::int64_t> x, int eps);

// The unimodular lattice M_d(x) + Z x'/d, LLL-reduced, with its embedding (denominator d).
Lattice neighbor(std::int64_t d, std::span<const std::int64_t> x, int eps);
inline Lattice neighbor(const NeighborSpec& s) { return neighbor(s.d, s.x, s.eps); }

// Type data of a normalized pair: parts are the multiplicities of values < d/2
// in decreasing order, end is the multiplicity of d/2 (0 for odd d).
struct NormalForm {
  std::vector<int> parts;
  int index = 0;
  int end = 0;

  std::string type_string() const;  // e.g. "3^2 2^4 1^5"
};

bool is_normalized(std::int64_t d, std::span<const std::int64_t> x);
NormalForm normal_form(std::int64_t d, std::span<const std::int64_t> x);

struct Normalized {
  Vec y;
  std::int64_t unit;  // x = unit * y mod d up to a signed permutation
};

// nullopt when some x_i = 0 mod d or no unit residue has maximal multiplicity.
std::optional<Normalized> normalize(std::int64_t d, std::span<const std::int64_t> x);

// Multiplies by u^-1 mod d, folds residues into [0, d/2] and sorts.
Vec scale_fold_sort(std::int64_t d, std::span<const std::int64_t> x, std::int64_t u);

// All normalized x of the given type, in increasing lexicographic order, handed out
// in batches of at most chunk vectors. The callback returns false to stop early.
// For d = 2 the only normalized vector is 1^n, which has parts {} and end n.
using BatchVisitor = std::function<bool(std::vector<Vec>& batch)>;
void enumerate_normalized(int n, std::int64_t d, const std::vector<int>& parts, int end,
                          std::size_t chunk, const BatchVisitor& visit);
// Every normalized x of rank n at d, all types, lexicographic order.
void enumerate_all_normalized(int n, std::int64_t d, std::size_t chunk, const BatchVisitor& visit);

// The lines equivalent to x under units i in [1, d/2] with m_i = m_1, gcd(i, d) = 1.
std::vector<Vec> line_equivalents(std::int64_t d, std::span<const std::int64_t> x);
// True iff x is lexicographically maximal among its equivalents.
bool keep_line(std::int64_t d, std::span<const std::int64_t> x);
std::vector<Vec> dedup_lines(std::int64_t d, const std::vector<Vec>& batch);

// Roots of Z^n (e_i - e_j, e_i + e_j for i < j) lying in M_d(x).
std::vector<Vec> visible_roots(std::int64_t d, std::span<const std::int64_t> x);
RootSystem visible_root_system(std::int64_t d, std::span<const std::int64_t> x);

std::int64_t mod_inverse(std::int64_t a, std::int64_t m);  // throws if not invertible
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

}  // namespace unihunt
