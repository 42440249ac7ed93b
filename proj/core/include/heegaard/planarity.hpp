#pragma once

#include <map>
#include <string>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/graph.hpp"
#include "heegaard/report.hpp"

namespace heegaard {

/// A combinatorial map: nodes carry counterclockwise rotations of named
/// dart slots; connect() pairs two slots into an edge. Faces are traced
/// from the rotations and each connected piece is checked against the
/// Euler formula of the sphere.
class RotationSystem {
 public:
  int add_node(std::string name, std::vector<std::string> slots_ccw);
  void connect(int node_a, const std::string& slot_a, int node_b, const std::string& slot_b);

  struct Summary {
    int nodes = 0;
    int edges = 0;
    int faces = 0;
    int pieces = 0;
    bool planar = false;
    std::vector<std::string> problems;
  };
  Summary summarize() const;

 private:
  struct Node {
    std::string name;
    std::vector<std::string> slots;
    std::vector<int> darts;
  };
  int dart_at(int node, const std::string& slot);

  std::vector<Node> nodes_;
  std::vector<int> twin_;
  std::vector<int> node_of_;
  std::vector<int> index_in_node_;
  std::vector<std::string> problems_;
};

/// Euler check of the whole picture on the sphere: fat vertices, H-edges
/// split at transversal points, crossings, and strand segments.
ValidationReport planarity_report(const HeegaardGraph& graph, const LinkDiagram& diagram);
ValidationReport planarity_report(const HeegaardGraph& graph);

}  // namespace heegaard
