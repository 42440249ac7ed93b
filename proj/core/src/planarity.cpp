#include "heegaard/planarity.hpp"

#include <functional>
#include <numeric>

namespace heegaard {

int RotationSystem::add_node(std::string name, std::vector<std::string> slots_ccw) {
  Node n{std::move(name), std::move(slots_ccw), {}};
  n.darts.assign(n.slots.size(), -1);
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int RotationSystem::dart_at(int node, const std::string& slot) {
  auto& n = nodes_.at(static_cast<std::size_t>(node));
  for (std::size_t k = 0; k < n.slots.size(); ++k) {
    if (n.slots[k] != slot) continue;
    if (n.darts[k] != -1) {
      problems_.push_back("slot " + n.name + ":" + slot + " used twice");
      return -1;
    }
    const int d = static_cast<int>(twin_.size());
    twin_.push_back(-1);
    node_of_.push_back(node);
    index_in_node_.push_back(static_cast<int>(k));
    n.darts[k] = d;
    return d;
  }
  problems_.push_back("node " + n.name + " has no slot " + slot);
  return -1;
}

void RotationSystem::connect(int node_a, const std::string& slot_a, int node_b, const std::string& slot_b) {
  const int a = dart_at(node_a, slot_a);
  const int b = dart_at(node_b, slot_b);
  if (a < 0 || b < 0) return;
  twin_[static_cast<std::size_t>(a)] = b;
  twin_[static_cast<std::size_t>(b)] = a;
}

RotationSystem::Summary RotationSystem::summarize() const {
  Summary s;
  s.problems = problems_;
  for (const auto& n : nodes_) {
    for (std::size_t k = 0; k < n.slots.size(); ++k) {
      if (n.darts[k] == -1) s.problems.push_back("slot " + n.name + ":" + n.slots[k] + " is not connected");
    }
  }
  if (!s.problems.empty()) return s;

  const int node_count = static_cast<int>(nodes_.size());
  std::vector<int> parent(static_cast<std::size_t>(node_count));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (std::size_t d = 0; d < twin_.size(); ++d) {
    parent[static_cast<std::size_t>(find(node_of_[d]))] = find(node_of_[static_cast<std::size_t>(twin_[d])]);
  }

  // Face permutation: successor of d is the rotation-successor of twin(d).
  std::vector<bool> used(twin_.size(), false);
  std::vector<int> faces_per_root(static_cast<std::size_t>(node_count), 0);
  for (std::size_t start = 0; start < twin_.size(); ++start) {
    if (used[start]) continue;
    ++faces_per_root[static_cast<std::size_t>(find(node_of_[start]))];
    std::size_t d = start;
    while (!used[d]) {
      used[d] = true;
      const auto t = static_cast<std::size_t>(twin_[d]);
      const auto& n = nodes_[static_cast<std::size_t>(node_of_[t])];
      const auto k = static_cast<std::size_t>(index_in_node_[t]);
      d = static_cast<std::size_t>(n.darts[(k + 1) % n.darts.size()]);
    }
  }

  std::vector<int> v(static_cast<std::size_t>(node_count), 0), e(static_cast<std::size_t>(node_count), 0);
  for (int k = 0; k < node_count; ++k) ++v[static_cast<std::size_t>(find(k))];
  for (std::size_t d = 0; d < twin_.size(); ++d) ++e[static_cast<std::size_t>(find(node_of_[d]))];
  s.nodes = node_count;
  s.edges = static_cast<int>(twin_.size()) / 2;
  s.planar = true;
  for (int k = 0; k < node_count; ++k) {
    if (find(k) != k) continue;
    ++s.pieces;
    const auto kk = static_cast<std::size_t>(k);
    const int faces = e[kk] == 0 ? 1 : faces_per_root[kk];
    s.faces += faces;
    const int euler = v[kk] - e[kk] / 2 + faces;
    if (euler != 2) {
      s.planar = false;
      s.problems.push_back("piece containing " + nodes_[kk].name + " has Euler characteristic " + std::to_string(euler));
    }
  }
  return s;
}

namespace {

struct PointRef {
  int node;
  std::string in_slot;
  std::string out_slot;
};

// Map node per transversal point (edge, slot).
using TransversalNodes = std::map<std::pair<std::string, int>, int>;

void add_graph(const HeegaardGraph& graph, const LinkDiagram* diagram, RotationSystem& rs,
               std::map<VertexId, int>& vertex_nodes, TransversalNodes& transversals) {
  for (const auto& v : graph.vertices) {
    auto items = diagram ? diagram->order_at(graph, v.id) : v.markers;
    vertex_nodes[v.id] = rs.add_node(to_string(v.id), items);
  }
  std::map<std::string, int> sign_of_point;
  std::map<std::string, int> count;
  if (diagram) {
    auto scan = [&](const std::vector<Event>& evs) {
      for (const auto& ev : evs) {
        if (const auto* t = std::get_if<TransversalEvent>(&ev)) {
          const int node = rs.add_node(
              "t" + t->edge + ":" + std::to_string(t->slot),
              t->sign > 0 ? std::vector<std::string>{"e+", "s+", "e-", "s-"}
                          : std::vector<std::string>{"e+", "s-", "e-", "s+"});
          transversals[{t->edge, t->slot}] = node;
          count[t->edge] = std::max(count[t->edge], t->slot);
        }
      }
    };
    for (const auto& s : diagram->strands) scan(s.events);
    for (const auto& c : diagram->circles) scan(c.events);
  }
  for (const auto& e : graph.edges) {
    int prev_node = vertex_nodes[e.tail.vertex];
    std::string prev_slot = e.tail.marker;
    for (int slot = 1; slot <= count[e.id]; ++slot) {
      auto it = transversals.find({e.id, slot});
      if (it == transversals.end()) continue;
      rs.connect(prev_node, prev_slot, it->second, "e-");
      prev_node = it->second;
      prev_slot = "e+";
    }
    rs.connect(prev_node, prev_slot, vertex_nodes[e.head.vertex], e.head.marker);
  }
}

}  // namespace

ValidationReport planarity_report(const HeegaardGraph& graph) {
  RotationSystem rs;
  std::map<VertexId, int> vertex_nodes;
  TransversalNodes transversals;
  add_graph(graph, nullptr, rs, vertex_nodes, transversals);
  ValidationReport report;
  for (auto& p : rs.summarize().problems) report.add(std::move(p));
  return report;
}

ValidationReport planarity_report(const HeegaardGraph& graph, const LinkDiagram& diagram) {
  RotationSystem rs;
  std::map<VertexId, int> vertex_nodes;
  TransversalNodes transversals;
  add_graph(graph, &diagram, rs, vertex_nodes, transversals);
  std::map<std::string, int> crossing_nodes;
  for (const auto& x : diagram.crossings) {
    std::vector<std::string> slots;
    for (auto end : x.order) slots.push_back(to_string(end));
    crossing_nodes[x.id] = rs.add_node("x" + x.id, slots);
  }
  auto point_of = [&](const Event& ev) -> PointRef {
    if (const auto* c = std::get_if<CrossingEvent>(&ev)) {
      const bool over = c->role == Role::Over;
      return {crossing_nodes.at(c->crossing), over ? "over-in" : "under-in", over ? "over-out" : "under-out"};
    }
    const auto& t = std::get<TransversalEvent>(ev);
    return {transversals.at({t.edge, t.slot}), "s-", "s+"};
  };
  for (const auto& s : diagram.strands) {
    int prev_node = vertex_nodes[s.start.vertex];
    std::string prev_slot = s.start.position;
    for (const auto& ev : s.events) {
      const auto p = point_of(ev);
      rs.connect(prev_node, prev_slot, p.node, p.in_slot);
      prev_node = p.node;
      prev_slot = p.out_slot;
    }
    rs.connect(prev_node, prev_slot, vertex_nodes[s.end.vertex], s.end.position);
  }
  for (const auto& c : diagram.circles) {
    if (c.events.empty()) continue;  // a free loop is always realisable
    std::vector<PointRef> pts;
    for (const auto& ev : c.events) pts.push_back(point_of(ev));
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const auto& a = pts[k];
      const auto& b = pts[(k + 1) % pts.size()];
      rs.connect(a.node, a.out_slot, b.node, b.in_slot);
    }
  }
  ValidationReport report;
  for (auto& p : rs.summarize().problems) report.add(std::move(p));
  return report;
}

}  // namespace heegaard
