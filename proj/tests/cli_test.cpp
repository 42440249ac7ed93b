#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "heegaard/io.hpp"
#include "support.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = heegaard::cli::cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return support::fixture_path(name); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("heegaard_cli_test_" + name);
}

}  // namespace

TEST(Cli, HomologyOfPoincare) {
  const auto r = run({"homology", fx("poincare.hg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("H1 = ⟨A1, A2 | -A1+2A2, -2A1+3A2⟩"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("SNF = (1, 1)"), std::string::npos);
  EXPECT_NE(r.out.find("ZHS: yes, det = 1"), std::string::npos);
}

TEST(Cli, HomologyOfLens) {
  const auto r = run({"homology", fx("lens.hg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ZHS: no"), std::string::npos) << r.out;
}

TEST(Cli, CheckFiles) {
  EXPECT_EQ(run({"check", fx("poincare.hg")}).code, 0);
  EXPECT_EQ(run({"check", fx("poincare.hg"), fx("A1_extended.tgl")}).code, 0);
  EXPECT_EQ(run({"check", "--strict-planarity", fx("poincare.hg"), fx("A2.tgl")}).code, 0);
  EXPECT_EQ(run({"check", fx("hopf.plat")}).code, 0);
}

TEST(Cli, CheckInvalidGraphExitsOne) {
  const auto path = temp_file("bad.hg");
  std::ofstream(path) << "genus 1\nvertex 1+ : a\nvertex 1- : a\nreflect 1 : a->a\n";
  const auto r = run({"check", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("invalid"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, ParseErrorsExitThree) {
  const auto path = temp_file("garbage.hg");
  std::ofstream(path) << "genus one\n";
  const auto r = run({"homology", path.string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find(":1:"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, MissingFileExitsThree) { EXPECT_EQ(run({"homology", "/nonexistent/x.hg"}).code, 3); }

TEST(Cli, UsageErrorsExitThree) {
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 3);
  EXPECT_EQ(run({"extend", fx("poincare.hg")}).code, 3);
}

TEST(Cli, HelpSucceeds) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("plat2hg"), std::string::npos);
}

TEST(Cli, ExtendReportsTheCensus) {
  const auto r = run({"extend", fx("poincare.hg"), fx("A1.tgl")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("x = (3, -2)"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("k = 5"), std::string::npos);
  EXPECT_NE(r.err.find("balanced: yes"), std::string::npos);
  const auto g = support::graph("poincare.hg");
  const auto d = heegaard::parse_tgl(r.out, g);
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(*d.value, support::diagram("A1_extended.tgl", g));
}

TEST(Cli, ExtendLensLoopHasNoSolution) {
  const auto r = run({"extend", fx("lens.hg"), fx("lens_loop.tgl")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("no integral solution"), std::string::npos);
}

TEST(Cli, SeifertWritesSurfaceToFile) {
  const auto path = temp_file("a2.surf");
  const auto r = run({"seifert", fx("poincare.hg"), fx("A2.tgl"), "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  // With --out the report goes to stdout.
  EXPECT_NE(r.out.find("(h0, h1, h2) = (6, 10, 3), chi = -1, mu = 1, genus 1"), std::string::npos) << r.out;
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const auto s = heegaard::parse_surf(text.str());
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s.value->genus, 1);
  EXPECT_EQ(run({"check", path.string()}).code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, QuietSuppressesTheReport) {
  const auto r = run({"seifert", "--quiet", fx("poincare.hg"), fx("A2.tgl")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.err.empty());
  EXPECT_NE(r.out.find("genus 1"), std::string::npos);
}

TEST(Cli, Plat2hg) {
  const auto r = run({"plat2hg", fx("unknot_p1.plat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("genus 1, writhe (1), det = "), std::string::npos) << r.err;
  EXPECT_TRUE(heegaard::parse_hg(r.out).ok());
}

TEST(Cli, Plat2hgFramingMismatch) {
  const auto bad = run({"plat2hg", fx("unknot_mismatch.plat")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("framing"), std::string::npos);
  const auto forced = run({"plat2hg", "--allow-framing-mismatch", fx("unknot_mismatch.plat")});
  EXPECT_EQ(forced.code, 0);
  EXPECT_NE(forced.err.find("warning"), std::string::npos);
}

TEST(Cli, RenderSvg) {
  const auto r = run({"render", fx("poincare.hg"), fx("A2.tgl"), "--seifert"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
  EXPECT_EQ(run({"render", fx("poincare.hg")}).code, 0);
}
