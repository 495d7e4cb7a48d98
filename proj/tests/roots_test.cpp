#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unihunt/neighbor.hpp"
#include "unihunt/root_system.hpp"

using namespace unihunt;

TEST(WeylOrder, Products) {
  EXPECT_EQ(weyl_order(RootSystem::parse("A1")), 2);
  EXPECT_EQ(weyl_order(RootSystem::parse("0")), 1);
  EXPECT_EQ(weyl_order(RootSystem::parse("7A1+3A2+A7")), Int("1114767360"));
  EXPECT_EQ(weyl_order(RootSystem::parse("E6")), 51840);
  EXPECT_EQ(weyl_order(RootSystem::parse("E7")), 2903040);
  EXPECT_EQ(weyl_order(RootSystem::parse("E8")), 696729600);
  EXPECT_EQ(weyl_order(RootSystem::parse("D5")), 16 * 120);
}

TEST(WeylOrder, MultiplicativeOverSums) {
  const std::vector<std::string> syms = {"A1", "A3", "D4", "E6", "2A2", "D5+A1"};
  for (const auto& a : syms)
    for (const auto& b : syms) {
      const Lattice sum = direct_sum(standard_root_lattice(a), standard_root_lattice(b));
      EXPECT_EQ(weyl_order(root_system(sum)), weyl_order(RootSystem::parse(a)) * weyl_order(RootSystem::parse(b)));
    }
}

TEST(RootSystem, SymbolRoundTripAndOrder) {
  const RootSystem r = RootSystem::parse("A2+8A1+A2");
  EXPECT_EQ(r.symbol(), "8A1+2A2");
  EXPECT_EQ(RootSystem::parse(r.symbol()), r);
  EXPECT_EQ(RootSystem::parse("D28").symbol(), "D28");
  EXPECT_EQ(RootSystem::parse("0").symbol(), "0");
  EXPECT_TRUE(RootSystem::parse("0").empty());
  // Rank first, then root count, then letter.
  EXPECT_EQ(RootSystem::parse("E6+A6+D6").symbol(), "A6+D6+E6");
  EXPECT_EQ(RootSystem::parse("D4+A4").symbol(), "A4+D4");
  EXPECT_EQ(RootSystem::parse("7A1+3A2+A7").root_count(), 14 + 18 + 56);
  EXPECT_EQ(RootSystem::parse("7A1+3A2+A7").total_rank(), 20);
}

TEST(RootSystem, RejectsNonNormalized) {
  for (const char* bad : {"D3", "D2", "A0", "E9", "E5", "B2", "2", "A", "3A1+", "D1"})
    EXPECT_THROW(RootSystem::parse(bad), std::invalid_argument) << bad;
}

TEST(RootSystem, StandardLatticesIdentifyThemselves) {
  std::vector<std::string> syms;
  for (int k = 1; k <= 10; ++k) syms.push_back("A" + std::to_string(k));
  for (int k = 4; k <= 10; ++k) syms.push_back("D" + std::to_string(k));
  for (int k = 6; k <= 8; ++k) syms.push_back("E" + std::to_string(k));
  for (const auto& s : syms) {
    const Lattice l = standard_root_lattice(s);
    const RootSystem r = root_system(l);
    EXPECT_EQ(r.symbol(), s);
    EXPECT_EQ(r.root_count(), norm_counts(l, 2).at(2)) << s;
    EXPECT_TRUE(l.is_even());
  }
}

TEST(RootSystem, Examples) {
  EXPECT_EQ(root_system(Lattice(oracle::e8_cartan())).symbol(), "E8");
  for (int r = 2; r <= 9; ++r) {
    const std::string expect = r == 2 ? "2A1" : r == 3 ? "A3" : "D" + std::to_string(r);
    EXPECT_EQ(root_system(Lattice::standard(r)).symbol(), expect);
  }
  EXPECT_TRUE(root_system(Lattice::standard(1)).empty());
  IntMatrix g(1, 1, 3);
  EXPECT_TRUE(root_system(Lattice(g)).empty());
}

TEST(RootSystem, StandardRootLatticeShapes) {
  EXPECT_EQ(standard_root_lattice("A1").gram(), IntMatrix(1, 1, 2));
  const Lattice d4 = standard_root_lattice("D4");
  EXPECT_EQ(norm_counts(d4, 2).at(2), 24);
  EXPECT_EQ(d4.determinant(), 4);
  const Lattice e8 = standard_root_lattice("E8");
  EXPECT_TRUE(e8.is_unimodular());
  EXPECT_EQ(norm_counts(e8, 2).at(2), 240);
  // D_m is M_2(1^m).
  for (int m = 4; m <= 8; ++m) {
    const Lattice dm = m_lattice(2, Vec(m, 1));
    EXPECT_EQ(dm.determinant(), standard_root_lattice("D" + std::to_string(m)).determinant());
    EXPECT_EQ(root_system(dm).symbol(), "D" + std::to_string(m));
  }
}

TEST(RootSystem, GlueCosetMinima) {
  // Minimum of the spinor coset eta + D_m with eta = (1/2, ..., 1/2): m/4 for m = 4 and 8.
  for (int m : {4, 8}) {
    // Doubled coordinates: 2(eta + v) = 1^m + 2v with v in D_m, norm / 4.
    std::int64_t best = -1;
    std::vector<Vec> box;
    oracle::box_norms(IntMatrix::identity(m), 4 * 3, &box);
    for (const auto& z : box) {
      bool ok = true;
      std::int64_t s = 0, q = 0;
      for (auto c : z) {
        ok = ok && (c % 2 != 0);
        s += (c - 1) / 2;
        q += c * c;
      }
      if (!ok) continue;
      // v = (z - 1^m) / 2 must lie in D_m: even coordinate sum.
      std::int64_t vs = 0;
      for (auto c : z) vs += (c - 1) / 2 + ((c - 1) % 2 != 0 ? -1 : 0);
      (void)s;
      if (((vs % 2) + 2) % 2 != 0) continue;
      if (best < 0 || q < best) best = q;
    }
    EXPECT_EQ(best / 4, m / 4);
  }
}
