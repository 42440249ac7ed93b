// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "heegaard/extension.hpp"
#include "heegaard/homology.hpp"
#include "heegaard/plat.hpp"
#include "heegaard/seifert.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace heegaard;

namespace {

// Collects mismatches; a criterion passes when none were recorded.
struct Check {
  std::vector<std::string> problems;

  template <typename A, typename B>
  void equal(const std::string& what, const A& got, const B& want) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      problems.push_back(s.str());
    }
  }
  void truth(const std::string& what, bool ok) {
    if (!ok) problems.push_back(what);
  }
};

std::string text(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

void criterion1(Check& c) {
  const auto p = homology_presentation(support::graph("poincare.hg"));
  const auto& r = p.relators;
  c.equal("R1", text(r.column(0)), text({-1, 2}));
  c.equal("R2", text(r.column(1)), text({-2, 3}));
  c.equal("|det|", std::llabs(p.determinant), 1);
  c.equal("SNF", text(p.invariant_factors), text({1, 1}));
  c.truth("ZHS verdict", p.is_zhs);
}

void criterion2(Check& c) {
  const auto r = relator_matrix(support::graph("poincare.hg"));
  c.equal("x for (1,0)", text(solve_extension_coefficients(r, std::vector<Int>{1, 0})), text({3, -2}));
  c.equal("x for (0,1)", text(solve_extension_coefficients(r, std::vector<Int>{0, 1})), text({2, -1}));
}

void criterion3(Check& c) {
  const auto g = support::graph("poincare.hg");
  const std::map<std::string, std::map<std::string, int>> want{{"A2.tgl", {{"-dE1", 2}, {"+dE2", 1}}},
                                                               {"A1.tgl", {{"-dE1", 3}, {"+dE2", 2}}}};
  for (const auto& [name, census] : want) {
    const auto d = support::diagram(name, g);
    const auto x = solve_extension_coefficients(relator_matrix(g), link_class(g, d));
    const auto ext = synthesize_extension_link(g, d, x);
    std::map<std::string, int> got;
    for (const auto& copy : ext.plan.copies) ++got[(copy.orientation > 0 ? "+" : "-") + std::string("dE") + std::to_string(copy.color)];
    c.truth(name + " census", got == census);
    c.truth(name + " extended diagram balanced", is_balanced(g, ext.diagram).balanced);
  }
}

void criterion4(Check& c) {
  const auto g = support::graph("poincare.hg");
  const auto a2 = run_seifert(g, support::diagram("A2.tgl", g)).surface;
  c.equal("A2 h0", a2.h0, 6);
  c.equal("A2 h1", a2.h1(), 10);
  c.equal("A2 h2", a2.h2, 3);
  c.equal("A2 chi", a2.chi, -1);
  c.equal("A2 mu", a2.mu, 1);
  c.equal("A2 genus", a2.genus, 1);
  c.equal("A2 h1_pairing", a2.h1_pairing, 6);
  const auto a1 = run_seifert(g, support::diagram("A1.tgl", g)).surface;
  c.equal("A1 h0", a1.h0, 11);
  c.equal("A1 h1", a1.h1(), 23);
  c.equal("A1 h2", a1.h2, 5);
  c.equal("A1 chi", a1.chi, -7);
  c.equal("A1 genus", a1.genus, 4);
  c.equal("A1 h1_pairing", a1.h1_pairing, 10);
}

void criterion5(Check& c) {
  const auto g = make_empty_graph(0);
  struct Want {
    const char* file;
    int circles, bands, chi, genus;
  };
  for (const auto& w : {Want{"trefoil.tgl", 2, 3, -1, 1}, Want{"figure_eight.tgl", 3, 4, -1, 1}}) {
    const auto d = support::diagram(w.file, g);
    const auto s = run_seifert(g, d).surface;
    const auto o = oracle::classical_seifert(d);
    const std::string n = w.file;
    c.equal(n + " circles", s.h0, w.circles);
    c.equal(n + " bands", s.h1(), w.bands);
    c.equal(n + " chi", s.chi, w.chi);
    c.equal(n + " genus", s.genus, w.genus);
    c.equal(n + " oracle circles", o.circles, s.h0);
    c.equal(n + " oracle bands", o.bands, s.h1());
    c.equal(n + " oracle genus", o.genus, s.genus);
  }
}

void criterion6(Check& c) {
  constexpr int kCases = 500;
  const std::pair<const char*, std::function<props::Outcome(std::uint64_t, int)>> suites[] = {
      {"(a) solve", props::solve_property},
      {"(b) surface", props::surface_property},
      {"(c) matching", props::matching_property},
      {"(d) synthesis", props::synthesis_property},
      {"(e) round trip", props::round_trip_property}};
  for (const auto& [name, run] : suites) {
    const auto r = run(97, kCases);
    c.truth(std::string(name) + " ran " + std::to_string(r.cases) + " cases", r.cases >= kCases);
    c.truth(std::string(name) + ": " + r.summary(), r.ok());
  }
}

void criterion7(Check& c) {
  const auto fig8 = compile_heegaard_graph(support::plat("figure_eight_p1.plat"));
  c.equal("figure-eight genus", fig8.graph.genus, 2);
  c.equal("figure-eight writhe", fig8.writhes.size() == 1 ? fig8.writhes[0] : 0, 1);
  c.equal("figure-eight |det|", std::llabs(determinant(relator_matrix(fig8.graph))), 1);
  for (const char* name : {"trefoil_p1.plat", "unknot_p1.plat"}) {
    const auto p = compile_heegaard_graph(support::plat(name));
    c.equal(std::string(name) + " |det|", std::llabs(determinant(relator_matrix(p.graph))), 1);
  }
}

void criterion8(Check& c) {
  auto run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    return cli::cli_run(args, out, err);
  };
  c.equal("extend on the lens loop",
          run({"extend", support::fixture_path("lens.hg"), support::fixture_path("lens_loop.tgl")}), 2);
  c.truth("plat2hg rejects a framing mismatch", run({"plat2hg", support::fixture_path("unknot_mismatch.plat")}) != 0);
  c.equal("plat2hg with the override",
          run({"plat2hg", "--allow-framing-mismatch", support::fixture_path("unknot_mismatch.plat")}), 0);
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)(Check&)> criteria[] = {
      {"Poincare sphere homology", criterion1},       {"extension coefficients", criterion2},
      {"extension census and balance", criterion3},   {"Poincare surface counts", criterion4},
      {"classical Seifert agreement", criterion5},    {"property suites", criterion6},
      {"plat compiler", criterion7},                  {"negative controls", criterion8}};
  int failed = 0;
  int n = 0;
  for (const auto& [title, body] : criteria) {
    ++n;
    Check c;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("threw: ") + e.what());
    }
    std::cout << (c.problems.empty() ? "PASS" : "FAIL") << " criterion " << n << ": " << title << "\n";
    for (const auto& p : c.problems) std::cout << "    " << p << "\n";
    failed += c.problems.empty() ? 0 : 1;
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
