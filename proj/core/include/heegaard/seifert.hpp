#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/extension.hpp"
#include "heegaard/graph.hpp"
#include "heegaard/integer_matrix.hpp"

namespace heegaard {

/// Chord inside a fat vertex joining a strand end (first) to a strand start.
struct Chord {
  Attachment end;
  Attachment start;

  bool operator==(const Chord&) const = default;
};

struct VertexChords {
  VertexId vertex;
  std::vector<Chord> chords;
};

/// Chords per vertex, V_i^+ entries followed by their mirrors on V_i^-.
struct PairingMatching {
  std::vector<VertexChords> plus;
  std::vector<VertexChords> minus;  // minus[k] is the image of plus[k]

  std::size_t chord_count() const;
};

/// Non-crossing matching of +/- labels on a circle by repeatedly pairing
/// adjacent opposite labels. Returns index pairs (first is the '+').
/// Throws UnbalancedVertex when the labels cannot be fully matched.
std::vector<std::pair<std::size_t, std::size_t>> match_cyclic_signs(const std::vector<int>& signs);

PairingMatching pairing_matching(const HeegaardGraph& graph, const LinkDiagram& diagram);

/// End of a piece of the resolved curve system.
struct CrossingPort {
  std::string crossing;
  CrossingEnd end;

  bool operator==(const CrossingPort&) const = default;
};
using SegmentEnd = std::variant<Attachment, CrossingPort>;

/// Stretch of a strand or circle between consecutive crossing events.
/// A circle without crossings is a single closed segment.
struct Segment {
  std::string owner;  // strand or circle id
  std::optional<SegmentEnd> from;
  std::optional<SegmentEnd> to;
};

struct ResolvedCrossing {
  std::string id;
  int sign = 1;
  std::size_t over_in = 0;  // segment indices meeting the crossing
  std::size_t under_in = 0;
  std::size_t over_out = 0;
  std::size_t under_out = 0;
};

/// Oriented smoothing: over-in continues as under-out, under-in as over-out.
struct ResolvedSystem {
  std::vector<Segment> segments;
  std::vector<ResolvedCrossing> crossings;
};

ResolvedSystem resolve_crossings(const LinkDiagram& diagram);

struct SeifertCircles {
  std::size_t count = 0;
  std::vector<std::size_t> circle_of;  // per segment
  std::vector<std::vector<std::size_t>> members;  // segments in traversal order
};

/// Closes the resolved arcs with the chords of the matching. Passages are
/// not followed. Throws MalformedDiagram if an arc end is left open.
SeifertCircles count_seifert_circles(const ResolvedSystem& resolved, const PairingMatching& matching);

enum class BandKind { Pairing, Twist };

struct Band {
  BandKind kind = BandKind::Pairing;
  std::string label;  // handle number or crossing id
  int sign = 0;       // half-twist handedness, 0 for pairing bands
  std::size_t circle_a = 0;
  std::size_t circle_b = 0;

  bool operator==(const Band&) const = default;
};

struct Cap {
  std::string component;
  std::size_t circle = 0;

  bool operator==(const Cap&) const = default;
};

struct SpanningSurface {
  int h0 = 0;
  int h1_pairing = 0;
  int h1_twist = 0;
  int h2 = 0;
  int chi = 0;
  int mu = 0;
  int genus = 0;
  int surface_components = 0;
  std::vector<std::vector<std::string>> circles;  // segment labels per circle
  std::vector<Band> bands;
  std::vector<Cap> caps;

  int h1() const { return h1_pairing + h1_twist; }
  bool operator==(const SpanningSurface&) const = default;
};

SpanningSurface assemble_surface(const HeegaardGraph& graph, const LinkDiagram& diagram, const ExtensionPlan& plan,
                                 const PairingMatching& matching);

struct SeifertRun {
  std::vector<Int> link_class;
  ExtendedDiagram extended;
  PairingMatching matching;
  SpanningSurface surface;
};

/// Whole algorithm: homology class, extension link, matching, resolution,
/// surface. Throws NoIntegralSolution when the link is not null-homologous.
SeifertRun run_seifert(const HeegaardGraph& graph, const LinkDiagram& diagram);

}  // namespace heegaard
