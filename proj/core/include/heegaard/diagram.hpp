#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "heegaard/graph.hpp"
#include "heegaard/report.hpp"

namespace heegaard {

enum class Role { Over, Under };

/// Strand endpoint on a fat-vertex boundary. The radial arc to the interior
/// endpoint is implicit.
struct Attachment {
  VertexId vertex;
  std::string position;

  auto operator<=>(const Attachment&) const = default;
};

std::string to_string(const Attachment& a);

struct CrossingEvent {
  std::string crossing;
  Role role = Role::Over;

  bool operator==(const CrossingEvent&) const = default;
};

/// Transverse intersection with an H-edge. sign = +1 when the strand
/// crosses from the right of the edge to its left.
struct TransversalEvent {
  std::string edge;
  int slot = 1;
  int sign = 1;

  bool operator==(const TransversalEvent&) const = default;
};

using Event = std::variant<CrossingEvent, TransversalEvent>;

struct Strand {
  std::string id;
  Attachment start;
  std::vector<Event> events;
  Attachment end;

  bool operator==(const Strand&) const = default;
};

struct Circle {
  std::string id;
  std::vector<Event> events;

  bool operator==(const Circle&) const = default;
};

enum class CrossingEnd { OverIn, UnderIn, OverOut, UnderOut };

std::string to_string(CrossingEnd end);
std::optional<CrossingEnd> parse_crossing_end(const std::string& token);

/// Counterclockwise order of the four ends for a crossing of the given sign.
/// Right-handed (+1): over-in, under-in, over-out, under-out.
std::array<CrossingEnd, 4> canonical_crossing_order(int sign);
/// Sign implied by a counterclockwise end order, or 0 if the order is not legal.
int sign_of_order(const std::array<CrossingEnd, 4>& order);

struct Crossing {
  std::string id;
  int sign = 1;
  std::array<CrossingEnd, 4> order = canonical_crossing_order(1);

  bool operator==(const Crossing&) const = default;
};

/// The link leaves H_0 at `end` (a strand end on V_i^s) and comes back at
/// `start` (a strand start on V_i^-s).
struct Passage {
  Attachment end;
  Attachment start;

  bool operator==(const Passage&) const = default;
};

/// Merged counterclockwise order of edge markers and strand positions.
struct VertexOrder {
  VertexId vertex;
  std::vector<std::string> items;

  bool operator==(const VertexOrder&) const = default;
};

struct LinkDiagram {
  std::vector<Strand> strands;
  std::vector<Circle> circles;
  std::vector<Crossing> crossings;
  std::vector<Passage> passages;
  std::vector<VertexOrder> orders;

  bool operator==(const LinkDiagram&) const = default;

  bool empty() const { return strands.empty() && circles.empty(); }
  const Crossing* find_crossing(const std::string& id) const;
  const VertexOrder* find_order(VertexId v) const;
  /// Merged order at v; falls back to the bare marker order of the graph.
  std::vector<std::string> order_at(const HeegaardGraph& graph, VertexId v) const;
  const Passage* passage_from_end(const Attachment& a) const;
  const Passage* passage_to_start(const Attachment& a) const;
};

ValidationReport validate_diagram(const HeegaardGraph& graph, const LinkDiagram& diagram);

/// A strand or circle, by index into LinkDiagram::strands / circles.
struct ComponentPiece {
  bool is_circle = false;
  std::size_t index = 0;

  bool operator==(const ComponentPiece&) const = default;
};

/// One link component: its strands in order (each followed by the passage
/// leaving its end), or a single circle.
struct ComponentCycle {
  std::vector<ComponentPiece> pieces;
  std::vector<std::size_t> passages;
};

/// Throws MalformedDiagram on a dangling attachment or a strand that is
/// never closed up.
std::vector<ComponentCycle> component_walk(const LinkDiagram& diagram);

}  // namespace heegaard
