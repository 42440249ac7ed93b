#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/graph.hpp"
#include "heegaard/plat.hpp"
#include "heegaard/seifert.hpp"

namespace heegaard {

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;
};

std::string to_string(const Diagnostic& d);

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value() && diagnostics.empty(); }
};

// Line formats; '#' starts a comment. Cyclic sequences are read and written
// starting from their smallest element, so parse(serialize(x)) equals
// canonicalize(x).
ParseResult<HeegaardGraph> parse_hg(std::string_view text);
std::string serialize_hg(const HeegaardGraph& graph);

/// Edge and vertex references are resolved against `graph`.
ParseResult<LinkDiagram> parse_tgl(std::string_view text, const HeegaardGraph& graph);
std::string serialize_tgl(const LinkDiagram& diagram);

ParseResult<FlatPlat> parse_plat(std::string_view text);
std::string serialize_plat(const FlatPlat& plat);

ParseResult<SpanningSurface> parse_surf(std::string_view text);
std::string serialize_surf(const SpanningSurface& surface);

HeegaardGraph canonicalize(HeegaardGraph graph);
LinkDiagram canonicalize(LinkDiagram diagram);

bool is_identifier(std::string_view s);

}  // namespace heegaard
