#pragma once

#include <string>

#include "heegaard/diagram.hpp"
#include "heegaard/graph.hpp"
#include "heegaard/seifert.hpp"

namespace heegaard {

/// Deterministic SVG: vertex pairs on a circle, edges coloured by relator
/// index, link strands with gaps for under-crossings, and, when a surface
/// is given, strand pieces coloured by Seifert circle.
std::string render_svg(const HeegaardGraph& graph, const LinkDiagram* diagram = nullptr,
                       const SpanningSurface* surface = nullptr);

}  // namespace heegaard
