#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heegaard/report.hpp"

namespace heegaard {

enum class Side { Plus, Minus };

inline Side opposite(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }

/// One attaching disc of a 1-handle: V_i^+ or V_i^-.
struct VertexId {
  int handle = 1;
  Side side = Side::Plus;

  auto operator<=>(const VertexId&) const = default;
  VertexId mirror() const { return {handle, opposite(side)}; }
};

std::string to_string(VertexId v);
std::optional<VertexId> parse_vertex_id(const std::string& token);

struct FatVertex {
  VertexId id;
  /// Boundary markers in counterclockwise order, arbitrary starting point.
  std::vector<std::string> markers;

  bool operator==(const FatVertex&) const = default;
};

struct EdgeEnd {
  VertexId vertex;
  std::string marker;

  bool operator==(const EdgeEnd&) const = default;
};

/// Piece of the colour-j characteristic curve between two co-core crossings.
struct Edge {
  std::string id;
  int color = 1;
  int ordinal = 1;
  EdgeEnd tail;
  EdgeEnd head;

  bool operator==(const Edge&) const = default;
};

struct HeegaardGraph {
  int genus = 0;
  /// Ordered 1+, 1-, 2+, 2-, ...
  std::vector<FatVertex> vertices;
  /// reflection[i-1] maps markers of V_i^+ to markers of V_i^-.
  std::vector<std::map<std::string, std::string>> reflection;
  std::vector<Edge> edges;

  bool operator==(const HeegaardGraph&) const = default;

  static std::size_t slot(VertexId v) {
    return static_cast<std::size_t>(2 * (v.handle - 1) + (v.side == Side::Plus ? 0 : 1));
  }
  const FatVertex& vertex(VertexId v) const { return vertices.at(slot(v)); }
  FatVertex& vertex(VertexId v) { return vertices.at(slot(v)); }

  /// r on V_i^s; the inverse map is used on the minus side.
  std::optional<std::string> reflect(VertexId v, const std::string& marker) const;
  const Edge* find_edge(const std::string& id) const;

  /// Index of the edge whose tail (or head) sits at the given marker.
  std::optional<std::size_t> edge_with_tail(const EdgeEnd& end) const;
  std::optional<std::size_t> edge_with_head(const EdgeEnd& end) const;

  /// Edges of colour j in cycle order, starting from the lowest ordinal.
  std::vector<std::size_t> color_cycle(int color) const;
};

/// Empty graph with 2g vertices and no markers.
HeegaardGraph make_empty_graph(int genus);

ValidationReport validate_graph(const HeegaardGraph& graph);

/// Number of closed cycles the colour-j edges chain into.
int count_color_cycles(const HeegaardGraph& graph, int color);

/// Rotate a cyclic sequence so the lexicographically smallest element is first.
std::vector<std::string> canonical_rotation(const std::vector<std::string>& cyclic);
bool same_cyclic_order(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace heegaard
