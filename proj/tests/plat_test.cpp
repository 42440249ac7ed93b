#include <gtest/gtest.h>

#include <cstdlib>

#include "heegaard/errors.hpp"
#include "heegaard/homology.hpp"
#include "heegaard/plat.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace heegaard;

namespace {

FlatPlat raw(const std::string& text) { return support::expect_value(parse_plat(text), "inline plat"); }

std::size_t edges_of_color(const HeegaardGraph& g, int color) {
  std::size_t n = 0;
  for (const auto& e : g.edges) n += e.color == color ? 1 : 0;
  return n;
}

}  // namespace

TEST(Plat, FixturesValidate) {
  for (const char* name : {"unknot_p1.plat", "hopf.plat", "trefoil_p1.plat", "trefoil_p3.plat", "figure_eight_p1.plat"}) {
    const auto r = validate_plat(support::plat(name));
    EXPECT_TRUE(r.ok()) << name << ": " << (r.errors.empty() ? "" : r.errors.front());
  }
}

TEST(Plat, SharedFootIsInvalid) {
  const auto p = raw(
      "bridge 1 feet 1 2\n"
      "arc a1 : 1 2\n"
      "arc a2 : 1 2\n");
  EXPECT_FALSE(validate_plat(p).ok());
}

TEST(Plat, OverlappingBridgesAreInvalid) {
  const auto p = raw(
      "bridge 1 feet 1 3\n"
      "bridge 2 feet 2 4\n"
      "arc a1 : 1 2\n"
      "arc a2 : 3 4\n");
  EXPECT_FALSE(validate_plat(p).ok());
}

TEST(Plat, SingleLoopIsValid) {
  const auto p = raw("bridge 1 feet 1 2\narc a1 : 1 2\n");
  EXPECT_TRUE(validate_plat(p).ok());
  EXPECT_EQ(writhe(p, 0), 0);
}

TEST(Plat, NonPlanarArcsAreRejected) {
  // The arc from foot 2 would have to cross the arc from foot 1 to get
  // under bridge 2 from inside the loop a1 encloses.
  const auto p = raw(
      "bridge 1 feet 1 2\n"
      "bridge 2 feet 3 4\n"
      "arc a1 : 1 u1:+ 3\n"
      "arc a2 : 2 u2:+ u1:+ 4\n"
      "framing 1 +3\n");
  EXPECT_FALSE(validate_plat(p).ok());
}

TEST(Plat, Components) {
  EXPECT_EQ(link_components(support::plat("unknot_p1.plat")).size(), 1u);
  EXPECT_EQ(link_components(support::plat("hopf.plat")).size(), 2u);
  EXPECT_EQ(link_components(support::plat("trefoil_p1.plat")).size(), 1u);
  EXPECT_EQ(link_components(support::plat("figure_eight_p1.plat")).size(), 1u);
  const auto loops = raw(
      "bridge 1 feet 1 2\n"
      "bridge 2 feet 3 4\n"
      "bridge 3 feet 5 6\n"
      "arc a1 : 1 2\n"
      "arc a2 : 3 4\n"
      "arc a3 : 5 6\n");
  EXPECT_EQ(link_components(loops).size(), 3u);
}

TEST(Plat, Writhe) {
  EXPECT_EQ(writhe(support::plat("unknot_p1.plat"), 0), 1);
  EXPECT_EQ(writhe(support::plat("trefoil_p1.plat"), 0), 1);
  EXPECT_EQ(writhe(support::plat("trefoil_p3.plat"), 0), 3);
  EXPECT_EQ(writhe(support::plat("figure_eight_p1.plat"), 0), 1);
  const auto hopf = support::plat("hopf.plat");
  EXPECT_EQ(writhe(hopf, 0), 0);
  EXPECT_EQ(writhe(hopf, 1), 0);
}

TEST(Plat, KnotDeterminantsIdentifyFixtures) {
  EXPECT_EQ(oracle::plat_knot_determinant(support::plat("unknot_p1.plat")), 1);
  EXPECT_EQ(oracle::plat_knot_determinant(support::plat("trefoil_p1.plat")), 3);
  EXPECT_EQ(oracle::plat_knot_determinant(support::plat("trefoil_p3.plat")), 3);
  EXPECT_EQ(oracle::plat_knot_determinant(support::plat("figure_eight_p1.plat")), 5);
}

TEST(Plat, CurveSelection) {
  const auto hopf = select_characteristic_curves(support::plat("hopf.plat"));
  ASSERT_EQ(hopf.size(), 2u);
  EXPECT_EQ(hopf[0].kind, CharacteristicCurve::Kind::Component);
  EXPECT_EQ(hopf[1].kind, CharacteristicCurve::Kind::Component);

  const auto fig8 = select_characteristic_curves(support::plat("figure_eight_p1.plat"));
  ASSERT_EQ(fig8.size(), 2u);
  EXPECT_EQ(fig8[0].kind, CharacteristicCurve::Kind::Component);
  EXPECT_EQ(fig8[1].kind, CharacteristicCurve::Kind::Neighborhood);
  EXPECT_EQ(fig8[1].index, 0u);
}

TEST(Plat, ParallelArcsGiveOneNeighbourhoodCurve) {
  // Two components: bridges 1-2 joined by two arcs, bridge 3 alone. Both
  // arcs join the same pair of bridges, so only the first is used.
  const auto p = raw(
      "bridge 1 feet 1 2\n"
      "bridge 2 feet 3 4\n"
      "bridge 3 feet 5 6\n"
      "arc a1 : 2 3\n"
      "arc a2 : 1 4\n"
      "arc a3 : 5 6\n");
  ASSERT_TRUE(validate_plat(p).ok());
  const auto curves = select_characteristic_curves(p);
  ASSERT_EQ(curves.size(), 3u);
  EXPECT_EQ(curves[2].kind, CharacteristicCurve::Kind::Neighborhood);
  EXPECT_EQ(curves[2].index, 0u);
}

TEST(Plat, CompileUnknot) {
  const auto c = compile_heegaard_graph(support::plat("unknot_p1.plat"));
  EXPECT_EQ(c.graph.genus, 1);
  EXPECT_TRUE(validate_graph(c.graph).ok());
  EXPECT_EQ(std::llabs(determinant(relator_matrix(c.graph))), 1);
  EXPECT_EQ(c.writhes, (std::vector<int>{1}));
}

TEST(Plat, CompileFigureEight) {
  const auto p = support::plat("figure_eight_p1.plat");
  const auto c = compile_heegaard_graph(p);
  EXPECT_EQ(c.graph.genus, 2);
  EXPECT_TRUE(validate_graph(c.graph).ok());
  EXPECT_EQ(std::llabs(determinant(relator_matrix(c.graph))), 1);
  // Knot curve: runs along the tubes, so it meets the co-cores only at
  // under-passes.
  std::size_t passes = 0;
  for (const auto& a : p.arcs) passes += a.passes.size();
  EXPECT_EQ(edges_of_color(c.graph, 1), passes);
  // Neighbourhood curve of arc 1: one per foot, two per under-pass.
  EXPECT_EQ(edges_of_color(c.graph, 2), 2 + 2 * p.arcs[0].passes.size());
}

TEST(Plat, CompiledDeterminantMatchesLinkingMatrix) {
  for (const char* name : {"unknot_p1.plat", "hopf.plat", "trefoil_p1.plat", "trefoil_p3.plat", "figure_eight_p1.plat"}) {
    const auto p = support::plat(name);
    const auto c = compile_heegaard_graph(p);
    EXPECT_TRUE(validate_graph(c.graph).ok()) << name;
    EXPECT_EQ(std::llabs(determinant(relator_matrix(c.graph))),
              std::llabs(oracle::cofactor_determinant(oracle::plat_linking_matrix(p))))
        << name;
  }
}

TEST(Plat, FramingMismatch) {
  const auto p = support::plat("unknot_mismatch.plat");
  EXPECT_THROW(compile_heegaard_graph(p), FramingMismatch);
  const auto c = compile_heegaard_graph(p, {true});
  EXPECT_EQ(c.graph.genus, 1);
  EXPECT_FALSE(c.warnings.empty());
}

TEST(Plat, MissingFramingIsAMismatch) {
  const auto p = raw("bridge 1 feet 1 2\narc a1 : 2 u1:+ 1\n");
  EXPECT_THROW(compile_heegaard_graph(p), FramingMismatch);
}

TEST(Plat, InvalidPlatDoesNotCompile) {
  const auto p = raw(
      "bridge 1 feet 1 3\n"
      "bridge 2 feet 2 4\n"
      "arc a1 : 1 2\n"
      "arc a2 : 3 4\n");
  EXPECT_THROW(compile_heegaard_graph(p), CompileError);
}

TEST(Plat, PassageSlotsDefaultToFileOrder) {
  const auto p = raw(
      "bridge 1 feet 1 2\n"
      "bridge 2 feet 3 4\n"
      "arc a1 : 1 u2:+ 2\n"
      "arc a2 : 3 u1:+ 4\n");
  const auto slots = passage_slots(p);
  EXPECT_EQ(slots, (std::vector<std::vector<int>>{{1}, {1}}));
}

TEST(Plat, TooFewIndependentArcs) {
  // Bridge 2 is never reached, so no arc can join it to the rest.
  const auto p = raw(
      "bridge 1 feet 1 2\n"
      "bridge 2 feet 3 4\n"
      "arc a1 : 1 2\n");
  EXPECT_FALSE(validate_plat(p).ok());
  EXPECT_THROW(select_characteristic_curves(p), InsufficientCurves);
}
