#include <gtest/gtest.h>

#include "heegaard/io.hpp"
#include "heegaard/seifert.hpp"
#include "support.hpp"

using namespace heegaard;

namespace {

template <typename T>
bool mentions(const ParseResult<T>& r, const std::string& needle) {
  for (const auto& d : r.diagnostics) {
    if (d.message.find(needle) != std::string::npos) return true;
  }
  return false;
}

const char* const kTinyGraph =
    "genus 1\n"
    "vertex 1+ : a\n"
    "vertex 1- : a\n"
    "reflect 1 : a->a\n";

}  // namespace

TEST(Io, GraphRoundTrip) {
  for (const char* name : {"trivial.hg", "lens.hg", "poincare.hg", "genus0.hg"}) {
    const auto g = support::graph(name);
    const auto again = parse_hg(serialize_hg(g));
    ASSERT_TRUE(again.ok()) << name;
    EXPECT_EQ(*again.value, canonicalize(g)) << name;
    EXPECT_EQ(serialize_hg(*again.value), serialize_hg(g)) << name;
  }
}

TEST(Io, DiagramRoundTrip) {
  const std::pair<const char*, const char*> cases[] = {{"poincare.hg", "A1.tgl"},
                                                       {"poincare.hg", "A2_extended.tgl"},
                                                       {"lens.hg", "lens_loop.tgl"},
                                                       {"genus0.hg", "figure_eight.tgl"}};
  for (const auto& [hg, tgl] : cases) {
    const auto g = support::graph(hg);
    const auto d = support::diagram(tgl, g);
    const auto again = parse_tgl(serialize_tgl(d), g);
    ASSERT_TRUE(again.ok()) << tgl;
    EXPECT_EQ(*again.value, canonicalize(d)) << tgl;
  }
}

TEST(Io, PlatRoundTrip) {
  for (const char* name : {"unknot_p1.plat", "hopf.plat", "trefoil_p1.plat", "figure_eight_p1.plat"}) {
    const auto p = support::plat(name);
    const auto again = parse_plat(serialize_plat(p));
    ASSERT_TRUE(again.ok()) << name;
    EXPECT_EQ(*again.value, p) << name;
  }
}

TEST(Io, SurfaceRoundTrip) {
  const auto g = support::graph("poincare.hg");
  const auto s = run_seifert(g, support::diagram("A2.tgl", g)).surface;
  const auto text = serialize_surf(s);
  EXPECT_NE(text.find("h0 6\nh1_pairing 6\nh1_twist 4\nh1 10\nh2 3\nchi -1\nmu 1\ngenus 1\n"), std::string::npos);
  const auto again = parse_surf(text);
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(*again.value, s);
}

TEST(Io, MissingGenus) {
  const auto r = parse_hg("vertex 1+ : a\n");
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(mentions(r, "missing genus"));
}

TEST(Io, HugeGenusIsRefused) {
  EXPECT_FALSE(parse_hg("genus 100001\n").ok());
  EXPECT_FALSE(parse_hg("genus -1\n").ok());
}

TEST(Io, UnknownMarkerIsLocated) {
  const auto r = parse_hg(std::string(kTinyGraph) + "edge e1 color 1 1-.a -> 1+.zz\n");
  ASSERT_FALSE(r.ok());
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics.front().line, 5);
  EXPECT_GT(r.diagnostics.front().column, 1);
  EXPECT_NE(r.diagnostics.front().message.find("zz"), std::string::npos);
}

TEST(Io, DuplicateEdgeId) {
  const auto r = parse_hg(std::string(kTinyGraph) + "edge e1 color 1 1-.a -> 1+.a\nedge e1 color 1 1-.a -> 1+.a\n");
  EXPECT_FALSE(r.ok());
}

TEST(Io, CommentsAndBlankLinesAreIgnored) {
  const auto r = parse_hg(std::string("# comment\n\n") + kTinyGraph + "  # trailing\nedge e1 color 1 1-.a -> 1+.a  # x\n");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value->edges.size(), 1u);
}

TEST(Io, DiagramReferencesAreChecked) {
  const auto g = support::graph("lens.hg");
  const auto r = parse_tgl("strand s : 1-.p tzz:1:+ x9:over 1+.q\npassage 1+.q ~ 1-.p\n", g);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(mentions(r, "unknown edge zz"));
  EXPECT_TRUE(mentions(r, "unknown crossing 9"));
}

TEST(Io, CrossingLineShape) {
  const auto g = make_empty_graph(0);
  EXPECT_FALSE(parse_tgl("crossing 1 sign * order over-in,under-in,over-out,under-out\n", g).ok());
  EXPECT_FALSE(parse_tgl("crossing 1 sign + order over-in,under-in,over-out\n", g).ok());
  EXPECT_FALSE(parse_tgl("crossing 1 sign + order over-in,under-in,over-out,sideways\n", g).ok());
}

TEST(Io, CrossingOrderIsRotatedToStartOverIn) {
  const auto g = make_empty_graph(0);
  const auto r = parse_tgl(
      "circle K : x1:over x1:under\n"
      "crossing 1 sign + order under-in,over-out,under-out,over-in\n",
      g);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value->crossings.front().order, canonical_crossing_order(1));
}

TEST(Io, PlatTokens) {
  const auto ok = parse_plat("bridge 1 feet 1 2\narc a1 : 2 u1.1:+ 1\nframing 1 +1\n");
  ASSERT_TRUE(ok.ok());
  EXPECT_EQ(ok.value->arcs.front().passes.front().slot, 1);
  EXPECT_FALSE(parse_plat("bridge 1 feet 1 2\narc a1 : 2 u1:* 1\n").ok());
  EXPECT_FALSE(parse_plat("bridge 1 feet 1 2\narc a1 : 2 u7:+ 1\n").ok());
  EXPECT_FALSE(parse_plat("bridge 1 feet 1 2\narc a1 : 2 9\n").ok());
  EXPECT_FALSE(parse_plat("").ok());
}

TEST(Io, SurfaceConsistency) {
  const std::string base = "h0 1\nh1_pairing 0\nh1_twist 0\nh2 0\nchi 1\nmu 1\ngenus 0\ncomponents 1\ncircle 1 : O:1\n";
  EXPECT_TRUE(parse_surf(base).ok());
  EXPECT_FALSE(parse_surf(base + "h1 3\n").ok());
  EXPECT_FALSE(parse_surf("h0 1\n").ok());
  EXPECT_FALSE(parse_surf(base + "band pairing 1 joins 1 7\n").ok());
}

TEST(Io, Identifiers) {
  EXPECT_TRUE(is_identifier("E1c2_e1_3"));
  EXPECT_FALSE(is_identifier(""));
  EXPECT_FALSE(is_identifier("a-b"));
  EXPECT_FALSE(is_identifier(std::string(300, 'a')));
}

TEST(Io, DiagnosticText) { EXPECT_EQ(to_string(Diagnostic{3, 7, "bad"}), "3:7: bad"); }
