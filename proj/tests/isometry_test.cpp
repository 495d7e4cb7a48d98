#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unihunt/isometry.hpp"
#include "unihunt/neighbor.hpp"

using namespace unihunt;

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int hyperoctahedral(int n) {
  Int p = 1;
  p <<= n;
  return p * factorial(n);
}

// B G_b B^T == G_a with |det B| = 1.
void expect_isometry(const Lattice& a, const Lattice& b, const BigMatrix& m) {
  EXPECT_EQ(abs(determinant(m)), 1);
  EXPECT_EQ(congruence(to_small(m), b.gram()), a.gram());
}

// Automorphisms by brute force: images of the basis among vectors of matching norm (n <= 4).
std::int64_t brute_aut(const IntMatrix& g) {
  const int n = g.rows();
  std::int64_t maxd = 0;
  for (int i = 0; i < n; ++i) maxd = std::max(maxd, g(i, i));
  std::vector<Vec> cands;
  oracle::box_norms(g, maxd, &cands);
  std::int64_t count = 0;
  std::vector<const Vec*> img(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (const auto& c : cands) {
      if (oracle::dot(g, c, c) != g(i, i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = oracle::dot(g, *img[j], c) == g(j, i);
      if (!ok) continue;
      img[i] = &c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST(Automorphisms, Standard) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(automorphism_order(Lattice::standard(n)), hyperoctahedral(n)) << n;
}

TEST(Automorphisms, E8) {
  EXPECT_EQ(automorphism_order(Lattice(oracle::e8_cartan())), Int("696729600"));
  const auto rep = aut_order(Lattice(oracle::e8_cartan()));
  EXPECT_EQ(rep.weyl, rep.order);
  EXPECT_EQ(rep.reduced_order, 1);
  EXPECT_EQ(rep.reduced_mass, 1);
}

TEST(Automorphisms, MatchesBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const IntMatrix g = oracle::random_gram(2 + trial % 3, rng, 1);
    EXPECT_EQ(automorphism_order(Lattice(g)), brute_aut(g)) << trial;
  }
}

TEST(Automorphisms, InvariantUnderBasisChange) {
  std::mt19937_64 rng(22);
  const Lattice l = neighbor(2, Vec(12, 1), 0);
  const Int base = automorphism_order(l);
  // O(D12+) = W(D12), 2^11 12!.
  EXPECT_EQ(base, hyperoctahedral(12) / 2);
  EXPECT_EQ(automorphism_order(l.transformed(oracle::random_unimodular(12, rng, 80))), base);
}

TEST(Automorphisms, StandardIsTwiceD12Plus) {
  EXPECT_EQ(automorphism_order(Lattice::standard(12)), 2 * automorphism_order(neighbor(2, Vec(12, 1), 1)));
}

TEST(ReducedMass, Examples) {
  // I8: roots D8, Weyl group of index 2.
  EXPECT_EQ(reduced_mass(Lattice::standard(8)), Rational(1, 2));
  const auto rep = aut_order(neighbor(2, Vec(16, 1), 0));
  EXPECT_EQ(rep.order, rep.weyl * rep.reduced_order);
  Rational m(rep.weyl, rep.order);
  m.canonicalize();
  EXPECT_EQ(rep.reduced_mass, m);
}

TEST(Isometry, RandomBasisChanges) {
  std::mt19937_64 rng(23);
  const std::vector<Lattice> ls{Lattice(oracle::e8_cartan()), Lattice::standard(6), neighbor(2, Vec(12, 1), 0),
                                neighbor(7, Vec{1, 2, 3, 1, 2, 3, 1, 2, 3}, 0)};
  for (const auto& a : ls) {
    for (int t = 0; t < 3; ++t) {
      const Lattice b = a.transformed(oracle::random_unimodular(a.rank(), rng, 50));
      const auto m = find_isometry(a, b);
      ASSERT_TRUE(m.has_value());
      expect_isometry(a, b, *m);
    }
  }
}

TEST(Isometry, DistinctLattices) {
  const Lattice e8(oracle::e8_cartan());
  EXPECT_FALSE(is_isometric(e8, Lattice::standard(8)));
  EXPECT_FALSE(is_isometric(Lattice::standard(3), Lattice::standard(4)));
}

TEST(Isometry, E8SquaredVersusD16Plus) {
  IntMatrix g(16, 16, 0);
  const IntMatrix e = oracle::e8_cartan();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) g(i, j) = g(i + 8, j + 8) = e(i, j);
  const Lattice e8e8(g);
  const Lattice d16 = neighbor(2, Vec(16, 1), 0);
  EXPECT_EQ(norm_counts(e8e8, 2), norm_counts(d16, 2));
  EXPECT_FALSE(find_isometry(e8e8, d16).has_value());
  EXPECT_FALSE(find_isometry(d16, e8e8).has_value());
}

TEST(Isometry, DeterministicForSeed) {
  std::mt19937_64 rng(24);
  const Lattice a = neighbor(2, Vec(12, 1), 0);
  const Lattice b = a.transformed(oracle::random_unimodular(12, rng, 40));
  EXPECT_EQ(find_isometry(a, b), find_isometry(a, b));
}
