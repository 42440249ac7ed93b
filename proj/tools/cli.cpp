#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "heegaard/errors.hpp"
#include "heegaard/extension.hpp"
#include "heegaard/homology.hpp"
#include "heegaard/io.hpp"
#include "heegaard/planarity.hpp"
#include "heegaard/plat.hpp"
#include "heegaard/render.hpp"
#include "heegaard/seifert.hpp"

namespace heegaard::cli {

namespace {

// Parse or I/O trouble; carries the diagnostics already formatted.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T>
T unwrap(ParseResult<T> r, const std::string& path) {
  if (r.ok()) return std::move(*r.value);
  std::string msg;
  for (const auto& d : r.diagnostics) msg += path + ":" + to_string(d) + "\n";
  if (!msg.empty()) msg.pop_back();
  throw InputError{msg};
}

HeegaardGraph load_graph(const std::string& path) { return unwrap(parse_hg(read_file(path)), path); }
LinkDiagram load_diagram(const std::string& path, const HeegaardGraph& g) { return unwrap(parse_tgl(read_file(path), g), path); }

std::string extension_of(const std::string& path) { return std::filesystem::path(path).extension().string(); }

std::string vector_text(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + ")";
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string out_path;
  bool quiet = false;

  // Report lines share stdout with the document only when it goes to a file.
  std::ostream& report() { return out_path.empty() ? err : out; }
  void say(const std::string& line) {
    if (!quiet) report() << line << "\n";
  }
  void emit(const std::string& document) {
    if (out_path.empty()) {
      out << document;
      return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << document)) throw InputError{"cannot write " + out_path};
  }
};

int fail_report(Context& ctx, const std::string& what, const ValidationReport& r) {
  ctx.err << what << ": invalid\n";
  for (const auto& e : r.errors) ctx.err << "  error: " << e << "\n";
  return kInvalid;
}

void require_valid(Context& ctx, const HeegaardGraph& g, const std::string& path) {
  if (const auto r = validate_graph(g); !r.ok()) {
    fail_report(ctx, path, r);
    throw MalformedDiagram(path + " is not a valid Heegaard graph");
  }
}

void require_valid(Context& ctx, const HeegaardGraph& g, const LinkDiagram& d, const std::string& path) {
  if (const auto r = validate_diagram(g, d); !r.ok()) {
    fail_report(ctx, path, r);
    throw MalformedDiagram(path + " is not a valid link diagram");
  }
}

int run_check(Context& ctx, const std::vector<std::string>& files, bool strict_planarity) {
  const std::string& first = files.front();
  const std::string ext = extension_of(first);
  if (ext == ".plat") {
    const auto plat = unwrap(parse_plat(read_file(first)), first);
    const auto r = validate_plat(plat);
    for (const auto& w : r.warnings) ctx.say("warning: " + w);
    if (!r.ok()) return fail_report(ctx, first, r);
    ctx.say(first + ": ok (" + std::to_string(plat.bridges.size()) + " bridges, " +
            std::to_string(link_components(plat).size()) + " components)");
    return kOk;
  }
  if (ext == ".surf") {
    const auto s = unwrap(parse_surf(read_file(first)), first);
    if (s.chi != s.h0 - s.h1() + s.h2) {
      ctx.err << first << ": chi does not match the handle counts\n";
      return kInvalid;
    }
    ctx.say(first + ": ok");
    return kOk;
  }
  const auto g = load_graph(first);
  if (const auto r = validate_graph(g); !r.ok()) return fail_report(ctx, first, r);
  ValidationReport planar = planarity_report(g);
  std::string summary = first + ": ok (genus " + std::to_string(g.genus) + ", " + std::to_string(g.edges.size()) + " edges)";
  if (files.size() > 1) {
    const auto d = load_diagram(files[1], g);
    if (const auto r = validate_diagram(g, d); !r.ok()) return fail_report(ctx, files[1], r);
    planar = planarity_report(g, d);
    summary = files[1] + ": ok (" + std::to_string(component_walk(d).size()) + " components, " +
              std::to_string(d.crossings.size()) + " crossings)";
  }
  if (!planar.ok()) {
    if (strict_planarity) return fail_report(ctx, files.back() + " (planarity)", planar);
    for (const auto& e : planar.errors) ctx.say("warning: not realisable in the plane: " + e);
  }
  ctx.say(summary);
  return kOk;
}

int run_homology(Context& ctx, const std::string& path) {
  const auto g = load_graph(path);
  require_valid(ctx, g, path);
  const auto p = homology_presentation(g);
  std::ostringstream doc;
  doc << "H1 = " << presentation_text(p) << "\n";
  doc << "relator matrix:\n" << p.relators.to_string() << "\n";
  doc << "det = " << p.determinant << "\n";
  doc << "SNF = " << vector_text(p.invariant_factors) << "\n";
  doc << "ZHS: " << (p.is_zhs ? "yes" : "no") << ", det = " << p.determinant << "\n";
  if (ctx.quiet && ctx.out_path.empty()) return kOk;
  ctx.emit(doc.str());
  return kOk;
}

int run_extend(Context& ctx, const std::string& hg, const std::string& tgl) {
  const auto g = load_graph(hg);
  require_valid(ctx, g, hg);
  const auto d = load_diagram(tgl, g);
  require_valid(ctx, g, d, tgl);
  const auto l = link_class(g, d);
  const auto x = solve_extension_coefficients(relator_matrix(g), l);
  const auto ext = synthesize_extension_link(g, d, x);
  ctx.say("link class = " + vector_text(l));
  ctx.say("x = " + vector_text(x));
  ctx.say("k = " + std::to_string(ext.plan.component_count()));
  for (const auto& c : ext.plan.copies) {
    ctx.say("  " + c.component + ": " + (c.orientation > 0 ? "+" : "-") + "dE" + std::to_string(c.color));
  }
  ctx.say(std::string("balanced: ") + (is_balanced(g, ext.diagram).balanced ? "yes" : "no"));
  ctx.emit(serialize_tgl(ext.diagram));
  return kOk;
}

int run_seifert(Context& ctx, const std::string& hg, const std::string& tgl) {
  const auto g = load_graph(hg);
  require_valid(ctx, g, hg);
  const auto d = load_diagram(tgl, g);
  require_valid(ctx, g, d, tgl);
  const auto run = heegaard::run_seifert(g, d);
  const auto& s = run.surface;
  ctx.say("x = " + vector_text(run.extended.plan.x) + ", k = " + std::to_string(run.extended.plan.component_count()));
  ctx.say("(h0, h1, h2) = (" + std::to_string(s.h0) + ", " + std::to_string(s.h1()) + ", " + std::to_string(s.h2) +
          "), chi = " + std::to_string(s.chi) + ", mu = " + std::to_string(s.mu) + ", genus " + std::to_string(s.genus));
  ctx.emit(serialize_surf(s));
  return kOk;
}

int run_plat2hg(Context& ctx, const std::string& path, bool allow_mismatch) {
  const auto plat = unwrap(parse_plat(read_file(path)), path);
  if (const auto r = validate_plat(plat); !r.ok()) return fail_report(ctx, path, r);
  const auto compiled = compile_heegaard_graph(plat, {allow_mismatch});
  for (const auto& w : compiled.warnings) ctx.say("warning: " + w);
  std::string writhes;
  for (std::size_t k = 0; k < compiled.writhes.size(); ++k) writhes += (k ? ", " : "") + std::to_string(compiled.writhes[k]);
  ctx.say("genus " + std::to_string(compiled.graph.genus) + ", writhe (" + writhes + "), det = " +
          std::to_string(determinant(relator_matrix(compiled.graph))));
  ctx.emit(serialize_hg(compiled.graph));
  return kOk;
}

int run_render(Context& ctx, const std::string& hg, const std::string& tgl, bool overlay) {
  const auto g = load_graph(hg);
  require_valid(ctx, g, hg);
  if (tgl.empty()) {
    ctx.emit(render_svg(g));
    return kOk;
  }
  const auto d = load_diagram(tgl, g);
  require_valid(ctx, g, d, tgl);
  if (!overlay) {
    ctx.emit(render_svg(g, &d));
    return kOk;
  }
  const auto run = heegaard::run_seifert(g, d);
  ctx.say(std::to_string(run.surface.h0) + " Seifert circles");
  ctx.emit(render_svg(g, &run.extended.diagram, &run.surface));
  return kOk;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heegaard-graph homology, extension links and spanning surfaces", "heegaard"};
  app.require_subcommand(1, 1);
  std::string out_path;
  bool quiet = false;
  app.add_option("--out,-o", out_path, "Write the produced document here");
  app.add_flag("--quiet,-q", quiet, "Suppress the report");

  std::vector<std::string> check_files;
  bool strict = false;
  auto* check = app.add_subcommand("check", "Validate a .hg (optionally with a .tgl), .plat or .surf file");
  check->add_option("files", check_files, "file [diagram.tgl]")->required()->expected(1, 2);
  check->add_flag("--strict-planarity", strict, "Treat a non-planar picture as invalid");

  std::string hg, tgl, plat_path;
  bool allow_mismatch = false, overlay = false;
  auto* homology = app.add_subcommand("homology", "Print the H1 presentation and the ZHS verdict");
  homology->add_option("graph", hg)->required();
  auto* extend = app.add_subcommand("extend", "Solve for and add the extension link");
  extend->add_option("graph", hg)->required();
  extend->add_option("diagram", tgl)->required();
  auto* seifert = app.add_subcommand("seifert", "Build the spanning surface and write a .surf report");
  seifert->add_option("graph", hg)->required();
  seifert->add_option("diagram", tgl)->required();
  auto* plat2hg = app.add_subcommand("plat2hg", "Compile a framed flat plat to a Heegaard graph");
  plat2hg->add_option("plat", plat_path)->required();
  plat2hg->add_flag("--allow-framing-mismatch", allow_mismatch, "Compile even if writhe and framing differ");
  auto* render = app.add_subcommand("render", "Draw a graph and optional diagram as SVG");
  render->add_option("graph", hg)->required();
  render->add_option("diagram", tgl);
  render->add_flag("--seifert", overlay, "Colour the strands by Seifert circle (runs the pipeline)");
  for (auto* sub : {check, homology, extend, seifert, plat2hg, render}) {
    sub->add_option("--out,-o", out_path, "Write the produced document here");
    sub->add_flag("--quiet,-q", quiet, "Suppress the report");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "heegaard: " << e.what() << "\n";
    return kIoError;
  }

  Context ctx{out, err, out_path, quiet};
  try {
    if (check->parsed()) return run_check(ctx, check_files, strict);
    if (homology->parsed()) return run_homology(ctx, hg);
    if (extend->parsed()) return run_extend(ctx, hg, tgl);
    if (seifert->parsed()) return run_seifert(ctx, hg, tgl);
    if (plat2hg->parsed()) return run_plat2hg(ctx, plat_path, allow_mismatch);
    if (render->parsed()) return run_render(ctx, hg, tgl, overlay);
  } catch (const InputError& e) {
    err << e.message << "\n";
    return kIoError;
  } catch (const NoIntegralSolution& e) {
    err << "no integral solution: " << e.what() << "\n";
    return kNoSolution;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace heegaard::cli
