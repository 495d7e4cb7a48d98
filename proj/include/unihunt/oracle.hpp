#pragma once

#include "unihunt/formats.hpp"

namespace unihunt {

// Exhaustive 2-neighbor closure of the genus of I_n, used as a test oracle.
// Classes are told apart by (r_1, root system); a recurring fingerprint reached from a new
// parent is checked by an explicit isometry test. Orders of automorphism groups come
// from neighbor counts: N(i, j) / |O_i| = N(j, i) / |O_j|, starting from |O(I_n)| = 2^n n!.
struct OracleClass {
  Lattice lattice;
  std::int64_t r1 = 0;
  RootSystem root;
  Int aut;
};

struct OracleResult {
  int n = 0;
  std::vector<OracleClass> classes;         // classes[0] is I_n
  std::vector<std::vector<std::int64_t>> counts;  // counts[i][j] = N(i, j)
  std::int64_t isometry_tests = 0;

  // Reduced masses |W| / |O| summed per root system over the classes with r_1 = 0.
  MassTable mass_table() const;
  // Sum of 1 / |O| over all classes.
  Rational mass() const;
};

OracleResult two_neighbor_closure(int n, int threads = 0);

// Root system from root representatives by Coxeter numbers: a root of a component with
// Coxeter number h meets 2h - 4 others of the same component with inner product 1.
RootSystem coxeter_root_system(const IntMatrix& gram, const std::vector<Vec>& reps);

}  // namespace unihunt
