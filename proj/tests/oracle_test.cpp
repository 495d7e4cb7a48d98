#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unihunt/isometry.hpp"
#include "unihunt/oracle.hpp"
#include "unihunt/root_system.hpp"

using namespace unihunt;

namespace {

// Bernoulli numbers B_0..B_m from sum_{j<=k} C(k+1, j) B_j = 0.
std::vector<Rational> bernoulli(int m) {
  std::vector<Rational> b(m + 1);
  b[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Rational s = 0;
    Int c = 1;  // C(k+1, j)
    for (int j = 0; j < k; ++j) {
      s += Rational(c) * b[j];
      c = c * (k + 1 - j) / (j + 1);
    }
    b[k] = -s / Rational(k + 1);
  }
  return b;
}

// Mass of the even unimodular genus in rank n = 0 mod 8.
Rational even_mass(int n) {
  const auto b = bernoulli(n);
  Rational m = abs(b[n / 2]) / Rational(n);
  for (int j = 1; j < n / 2; ++j) m *= abs(b[2 * j]) / Rational(4 * j);
  return m;
}

}  // namespace

TEST(Oracle, Rank8) {
  const auto res = two_neighbor_closure(8);
  ASSERT_EQ(res.classes.size(), 2U);
  EXPECT_EQ(res.classes[0].r1, 16);
  EXPECT_EQ(res.classes[1].root.symbol(), "E8");
  EXPECT_EQ(res.classes[1].aut, automorphism_order(Lattice(oracle::e8_cartan())));
  const MassTable t = res.mass_table();
  ASSERT_EQ(t.size(), 1U);
  EXPECT_EQ(t.begin()->second, 1);
  EXPECT_EQ(Rational(1, res.classes[1].aut), even_mass(8));
}

TEST(Oracle, Rank12) {
  const auto res = two_neighbor_closure(12);
  ASSERT_EQ(res.classes.size(), 3U);
  Rational sum = 0;
  for (const auto& c : res.classes) {
    EXPECT_EQ(c.aut, automorphism_order(c.lattice)) << c.root.symbol();
    EXPECT_EQ(c.r1, norm_counts(c.lattice, 1).at(1));
    EXPECT_EQ(c.root, root_system(c.lattice));
    sum += Rational(1, c.aut);
  }
  EXPECT_EQ(sum, res.mass());
  const MassTable t = res.mass_table();
  ASSERT_EQ(t.size(), 1U);
  EXPECT_EQ(t.begin()->first.symbol(), "D12");
  EXPECT_EQ(t.begin()->second, 1);
}

TEST(Oracle, NeighborCountsAreSymmetricUpToOrders) {
  const auto res = two_neighbor_closure(12);
  const std::size_t k = res.classes.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      EXPECT_EQ(res.classes[i].aut * res.counts[j][i], res.classes[j].aut * res.counts[i][j]);
  // Each lattice has one 2-neighbor per isotropic line v with v.v = 0 mod 4, two per v here.
  std::int64_t row = 0;
  for (std::size_t j = 0; j < k; ++j) row += res.counts[0][j];
  EXPECT_GT(row, 0);
}

TEST(Oracle, CoxeterClassification) {
  for (const char* s : {"A1", "A5", "D4", "D7", "E6", "E7", "E8", "2A2+D5", "A3+E6+A1"}) {
    const Lattice l = standard_root_lattice(s);
    std::vector<Vec> reps;
    for (const auto& r : short_vectors(l, 2).reps)
      if (r.norm == 2) reps.push_back(r.v);
    EXPECT_EQ(coxeter_root_system(l.gram(), reps), RootSystem::parse(s)) << s;
  }
}

TEST(Bernoulli, EvenMass) {
  // The classical value for rank 16 is 691 / 277667181515243520000.
  EXPECT_EQ(even_mass(16), Rational(Int(691), Int("277667181515243520000")));
}
