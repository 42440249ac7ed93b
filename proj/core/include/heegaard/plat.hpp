#pragma once

#include <string>
#include <vector>

#include "heegaard/graph.hpp"
#include "heegaard/report.hpp"

namespace heegaard {

/// Bridge over the base-line interval [left, right]; the feet are the two
/// endpoints, identified by their positions.
struct Bridge {
  int index = 1;
  int left = 0;
  int right = 0;

  bool operator==(const Bridge&) const = default;
};

/// The arc dives under `bridge`. slot = place along the bridge counted from
/// its left foot (0 = not given, assigned in file order). sign is the sign
/// of the crossing with respect to the component orientations.
struct UnderPass {
  int bridge = 1;
  int slot = 0;
  int sign = 1;

  bool operator==(const UnderPass&) const = default;
};

struct PlatArc {
  std::string id;
  int from = 0;  // foot positions
  std::vector<UnderPass> passes;
  int to = 0;

  bool operator==(const PlatArc&) const = default;
};

struct Framing {
  int component = 1;
  int value = 0;

  bool operator==(const Framing&) const = default;
};

struct FlatPlat {
  std::vector<Bridge> bridges;
  std::vector<PlatArc> arcs;
  std::vector<Framing> framings;

  bool operator==(const FlatPlat&) const = default;

  const Bridge* find_bridge(int index) const;
  /// Bridge whose left or right foot sits at `position`.
  const Bridge* bridge_at_foot(int position) const;
};

/// A closed link component: arcs and bridges alternate. The component is
/// oriented along the file direction of its first-listed arc.
struct PlatComponent {
  std::vector<std::size_t> arcs;
  std::vector<bool> arc_forward;  // traversed from `from` to `to`
  std::vector<int> bridges;       // bridge after each arc
  std::vector<bool> bridge_east;  // traversed left to right
};

ValidationReport validate_plat(const FlatPlat& plat);

/// Closed components, ordered by their first-listed arc. Open chains (only
/// possible in invalid plats) are skipped.
std::vector<PlatComponent> link_components(const FlatPlat& plat);

/// Explicit slot of each under-pass: slots[arc][k].
std::vector<std::vector<int>> passage_slots(const FlatPlat& plat);

/// Self-crossing sign sum of component `component` (0-based).
int writhe(const FlatPlat& plat, std::size_t component);

struct CharacteristicCurve {
  enum class Kind { Component, Neighborhood } kind = Kind::Component;
  std::size_t index = 0;  // component index, or arc index for a neighbourhood curve
};

/// All link components, then neighbourhood curves of arcs whose feet lie on
/// different bridges, ascending arc order, skipping an arc whose bridges are
/// already joined through previously chosen arcs. Throws InsufficientCurves
/// when too few remain.
std::vector<CharacteristicCurve> select_characteristic_curves(const FlatPlat& plat);

struct CompileOptions {
  bool allow_framing_mismatch = false;
};

struct CompiledPlat {
  HeegaardGraph graph;
  std::vector<CharacteristicCurve> curves;
  std::vector<int> writhes;
  std::vector<std::string> warnings;
};

/// Throws CompileError for an invalid plat and FramingMismatch when a
/// component's writhe differs from its declared framing (unless allowed).
CompiledPlat compile_heegaard_graph(const FlatPlat& plat, const CompileOptions& options = {});

}  // namespace heegaard
