#pragma once

#include <span>
#include <string>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/graph.hpp"
#include "heegaard/integer_matrix.hpp"

namespace heegaard {

struct VertexBalance {
  int handle = 0;
  int forward_ends = 0;   // strand ends at V_i^+
  int backward_ends = 0;  // strand starts at V_i^+
  bool balanced() const { return forward_ends == backward_ends; }
};

struct BalanceReport {
  std::vector<VertexBalance> vertices;
  bool balanced = true;
};

BalanceReport is_balanced(const HeegaardGraph& graph, const LinkDiagram& diagram);

/// One parallel copy of the colour-j curve. orientation is -sign(x_j),
/// relative to the curve's own direction.
struct ExtensionCopy {
  int color = 0;
  int index = 0;  // depth, 1 = innermost
  int orientation = 1;
  std::string component;          // "E<j>c<index>"
  std::vector<std::string> strands;  // one strand per colour-j edge
};

struct ExtensionPlan {
  std::vector<Int> x;
  std::vector<ExtensionCopy> copies;

  std::size_t component_count() const { return copies.size(); }
  bool is_extension_strand(const std::string& strand_id) const;
};

/// Copies of colour j as (count, orientation) pairs, in colour order.
ExtensionPlan plan_extension(std::span<const Int> x);

struct ExtendedDiagram {
  LinkDiagram diagram;
  ExtensionPlan plan;
};

/// Adds |x_j| pushoff copies of every colour-j curve, offset to the left of
/// the edges, each crossing under the original link wherever the link
/// crosses a colour-j edge. The input is not modified.
ExtendedDiagram synthesize_extension_link(const HeegaardGraph& graph, const LinkDiagram& diagram,
                                          std::span<const Int> x);

}  // namespace heegaard
