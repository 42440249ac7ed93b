#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "support.hpp"

// The oracles are only useful if they are right on cases small enough to
// check by hand.

TEST(Oracle, CofactorDeterminant) {
  EXPECT_EQ(oracle::cofactor_determinant({}), 1);
  EXPECT_EQ(oracle::cofactor_determinant({{7}}), 7);
  EXPECT_EQ(oracle::cofactor_determinant({{-1, -2}, {2, 3}}), 1);
  EXPECT_EQ(oracle::cofactor_determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}), 6);
}

TEST(Oracle, PoincareRelatorsFromTails) {
  const auto g = support::graph("poincare.hg");
  EXPECT_EQ(oracle::relators_from_tails(g), (oracle::Matrix{{-1, -2}, {2, 3}}));
}

TEST(Oracle, LinkClassFromStarts) {
  const auto g = support::graph("poincare.hg");
  EXPECT_EQ(oracle::link_class_from_starts(g, support::diagram("A1.tgl", g)), (std::vector<long long>{1, 0}));
  EXPECT_EQ(oracle::link_class_from_starts(g, support::diagram("A2.tgl", g)), (std::vector<long long>{0, 1}));
}

TEST(Oracle, ClassicalSeifertOnClosedBraids) {
  // sigma_1^3 on two strands: the trefoil, two circles, three bands.
  heegaard::LinkDiagram trefoil;
  gen::add_closed_braid(trefoil, {1, 1, 1}, 2, "t");
  const auto t = oracle::classical_seifert(trefoil);
  EXPECT_EQ(t.circles, 2);
  EXPECT_EQ(t.bands, 3);
  EXPECT_EQ(t.components, 1);
  EXPECT_EQ(t.genus, 1);

  // sigma_1 sigma_2^-1 sigma_1 sigma_2^-1: the figure-eight.
  heegaard::LinkDiagram fig8;
  gen::add_closed_braid(fig8, {1, -2, 1, -2}, 3, "f");
  const auto f = oracle::classical_seifert(fig8);
  EXPECT_EQ(f.circles, 3);
  EXPECT_EQ(f.bands, 4);
  EXPECT_EQ(f.components, 1);
  EXPECT_EQ(f.genus, 1);

  // sigma_1^2: the Hopf link, an annulus.
  heegaard::LinkDiagram hopf;
  gen::add_closed_braid(hopf, {1, 1}, 2, "h");
  const auto h = oracle::classical_seifert(hopf);
  EXPECT_EQ(h.components, 2);
  EXPECT_EQ(h.chi, 0);
  EXPECT_EQ(h.genus, 0);
}

TEST(Oracle, ClassicalSeifertOnFixtures) {
  const auto g = heegaard::make_empty_graph(0);
  const auto t = oracle::classical_seifert(support::diagram("trefoil.tgl", g));
  EXPECT_EQ(t.circles, 2);
  EXPECT_EQ(t.bands, 3);
  const auto f = oracle::classical_seifert(support::diagram("figure_eight.tgl", g));
  EXPECT_EQ(f.circles, 3);
  EXPECT_EQ(f.bands, 4);
}

TEST(Oracle, PlatLinkingMatrix) {
  EXPECT_EQ(oracle::plat_linking_matrix(support::plat("unknot_p1.plat")), (oracle::Matrix{{1}}));
  const auto hopf = oracle::plat_linking_matrix(support::plat("hopf.plat"));
  ASSERT_EQ(hopf.size(), 2u);
  EXPECT_EQ(hopf[0][0], 0);
  EXPECT_EQ(std::llabs(hopf[0][1]), 1);
  EXPECT_EQ(hopf[0][1], hopf[1][0]);
  EXPECT_EQ(oracle::plat_linking_matrix(support::plat("trefoil_p3.plat")), (oracle::Matrix{{3}}));
}

TEST(Oracle, KnotDeterminant) {
  EXPECT_EQ(oracle::plat_knot_determinant(support::plat("unknot_p1.plat")), 1);
  EXPECT_EQ(oracle::plat_knot_determinant(support::plat("trefoil_p3.plat")), 3);
}
