#include "heegaard/graph.hpp"

#include <algorithm>
#include <set>

namespace heegaard {

std::string to_string(VertexId v) {
  return std::to_string(v.handle) + (v.side == Side::Plus ? "+" : "-");
}

std::optional<VertexId> parse_vertex_id(const std::string& token) {
  if (token.size() < 2) return std::nullopt;
  const char s = token.back();
  if (s != '+' && s != '-') return std::nullopt;
  const std::string digits = token.substr(0, token.size() - 1);
  if (digits.empty() || digits.size() > 6) return std::nullopt;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  const int handle = std::stoi(digits);
  if (handle < 1) return std::nullopt;
  return VertexId{handle, s == '+' ? Side::Plus : Side::Minus};
}

std::optional<std::string> HeegaardGraph::reflect(VertexId v, const std::string& marker) const {
  if (v.handle < 1 || v.handle > genus) return std::nullopt;
  const auto& r = reflection[static_cast<std::size_t>(v.handle - 1)];
  if (v.side == Side::Plus) {
    auto it = r.find(marker);
    if (it == r.end()) return std::nullopt;
    return it->second;
  }
  for (const auto& [from, to] : r) {
    if (to == marker) return from;
  }
  return std::nullopt;
}

const Edge* HeegaardGraph::find_edge(const std::string& id) const {
  for (const auto& e : edges) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::optional<std::size_t> HeegaardGraph::edge_with_tail(const EdgeEnd& end) const {
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].tail == end) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> HeegaardGraph::edge_with_head(const EdgeEnd& end) const {
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].head == end) return k;
  }
  return std::nullopt;
}

std::vector<std::size_t> HeegaardGraph::color_cycle(int color) const {
  std::vector<std::size_t> out;
  std::optional<std::size_t> start;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].color != color) continue;
    if (!start || edges[k].ordinal < edges[*start].ordinal) start = k;
  }
  if (!start) return out;
  std::set<std::size_t> seen;
  std::size_t cur = *start;
  while (seen.insert(cur).second) {
    out.push_back(cur);
    const Edge& e = edges[cur];
    auto next_marker = reflect(e.head.vertex, e.head.marker);
    if (!next_marker) break;
    auto next = edge_with_tail(EdgeEnd{e.head.vertex.mirror(), *next_marker});
    if (!next || edges[*next].color != color) break;
    cur = *next;
  }
  return out;
}

HeegaardGraph make_empty_graph(int genus) {
  HeegaardGraph g;
  g.genus = genus;
  for (int i = 1; i <= genus; ++i) {
    g.vertices.push_back(FatVertex{{i, Side::Plus}, {}});
    g.vertices.push_back(FatVertex{{i, Side::Minus}, {}});
  }
  g.reflection.resize(static_cast<std::size_t>(genus));
  return g;
}

std::vector<std::string> canonical_rotation(const std::vector<std::string>& cyclic) {
  if (cyclic.empty()) return cyclic;
  auto best = std::min_element(cyclic.begin(), cyclic.end());
  std::vector<std::string> out(best, cyclic.end());
  out.insert(out.end(), cyclic.begin(), best);
  return out;
}

bool same_cyclic_order(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t k = 0; k < n && match; ++k) match = a[k] == b[(k + shift) % n];
    if (match) return true;
  }
  return false;
}

int count_color_cycles(const HeegaardGraph& graph, int color) {
  std::set<std::size_t> remaining;
  for (std::size_t k = 0; k < graph.edges.size(); ++k) {
    if (graph.edges[k].color == color) remaining.insert(k);
  }
  int cycles = 0;
  while (!remaining.empty()) {
    ++cycles;
    std::size_t cur = *remaining.begin();
    while (remaining.erase(cur) == 1) {
      const Edge& e = graph.edges[cur];
      auto next_marker = graph.reflect(e.head.vertex, e.head.marker);
      if (!next_marker) break;
      auto next = graph.edge_with_tail(EdgeEnd{e.head.vertex.mirror(), *next_marker});
      if (!next || graph.edges[*next].color != color) break;
      cur = *next;
    }
  }
  return cycles;
}

ValidationReport validate_graph(const HeegaardGraph& graph) {
  ValidationReport report;
  if (graph.genus < 0) {
    report.add("genus must be non-negative");
    return report;
  }
  const auto g = static_cast<std::size_t>(graph.genus);
  if (graph.vertices.size() != 2 * g) {
    report.add("expected " + std::to_string(2 * g) + " fat vertices, found " +
               std::to_string(graph.vertices.size()));
    return report;
  }
  if (graph.reflection.size() != g) {
    report.add("expected " + std::to_string(g) + " reflection tables");
    return report;
  }
  for (std::size_t k = 0; k < graph.vertices.size(); ++k) {
    const VertexId expect{static_cast<int>(k / 2) + 1, k % 2 == 0 ? Side::Plus : Side::Minus};
    if (graph.vertices[k].id != expect) report.add("vertex slot " + std::to_string(k) + " is not " + to_string(expect));
    std::set<std::string> uniq(graph.vertices[k].markers.begin(), graph.vertices[k].markers.end());
    if (uniq.size() != graph.vertices[k].markers.size()) {
      report.add("vertex " + to_string(graph.vertices[k].id) + " repeats a marker");
    }
  }
  if (!report.ok()) return report;

  // Reflection: a bijection V_i^+ -> V_i^- that reverses cyclic order.
  for (int i = 1; i <= graph.genus; ++i) {
    const auto& plus = graph.vertex({i, Side::Plus}).markers;
    const auto& minus = graph.vertex({i, Side::Minus}).markers;
    const auto& r = graph.reflection[static_cast<std::size_t>(i - 1)];
    const std::string tag = "reflection " + std::to_string(i) + ": ";
    std::set<std::string> images;
    bool complete = true;
    for (const auto& m : plus) {
      auto it = r.find(m);
      if (it == r.end()) {
        report.add(tag + "marker " + m + " of " + std::to_string(i) + "+ has no image");
        complete = false;
        continue;
      }
      images.insert(it->second);
    }
    for (const auto& [from, to] : r) {
      if (std::find(plus.begin(), plus.end(), from) == plus.end()) {
        report.add(tag + "unknown source marker " + from);
        complete = false;
      }
      if (std::find(minus.begin(), minus.end(), to) == minus.end()) {
        report.add(tag + "unknown target marker " + to);
        complete = false;
      }
    }
    if (images.size() != r.size() || images.size() != minus.size()) {
      report.add(tag + "not a bijection (reflection is not an involution)");
      complete = false;
    }
    if (complete && !plus.empty()) {
      std::vector<std::string> mapped;
      for (auto it = plus.rbegin(); it != plus.rend(); ++it) mapped.push_back(r.at(*it));
      if (!same_cyclic_order(mapped, minus)) report.add(tag + "does not reverse cyclic order");
    }
  }

  // Marker coverage: one edge end per marker.
  std::map<std::pair<VertexId, std::string>, int> uses;
  std::set<std::string> ids;
  std::set<int> colors;
  for (const auto& e : graph.edges) {
    if (!ids.insert(e.id).second) report.add("duplicate edge id " + e.id);
    if (e.color < 1 || e.color > graph.genus) {
      report.add("edge " + e.id + " has colour " + std::to_string(e.color) + " outside 1.." +
                 std::to_string(graph.genus));
      continue;
    }
    colors.insert(e.color);
    for (const EdgeEnd* end : {&e.tail, &e.head}) {
      if (end->vertex.handle < 1 || end->vertex.handle > graph.genus) {
        report.add("edge " + e.id + " refers to missing vertex " + to_string(end->vertex));
        continue;
      }
      const auto& ms = graph.vertex(end->vertex).markers;
      if (std::find(ms.begin(), ms.end(), end->marker) == ms.end()) {
        report.add("edge " + e.id + " refers to unknown marker " + to_string(end->vertex) + "." + end->marker);
      }
      ++uses[{end->vertex, end->marker}];
    }
  }
  for (const auto& v : graph.vertices) {
    for (const auto& m : v.markers) {
      const int n = uses[{v.id, m}];
      if (n != 1) {
        report.add("marker " + to_string(v.id) + "." + m + " is used by " + std::to_string(n) + " edge ends");
      }
    }
  }
  if (!report.ok()) return report;

  // Each colour closes into exactly one cycle, heads and tails matched by r.
  for (const auto& e : graph.edges) {
    auto next_marker = graph.reflect(e.head.vertex, e.head.marker);
    auto next = next_marker ? graph.edge_with_tail({e.head.vertex.mirror(), *next_marker}) : std::nullopt;
    if (!next) {
      report.add("edge " + e.id + " head is not followed by a tail at its reflection");
    } else if (graph.edges[*next].color != e.color) {
      report.add("edge " + e.id + " continues into colour " + std::to_string(graph.edges[*next].color));
    }
  }
  if (!report.ok()) return report;
  for (int j = 1; j <= graph.genus; ++j) {
    if (!colors.count(j)) {
      report.add("colour " + std::to_string(j) + " has no edges");
      continue;
    }
    const int cycles = count_color_cycles(graph, j);
    if (cycles != 1) report.add("colour " + std::to_string(j) + " splits into " + std::to_string(cycles) + " cycles");
  }
  for (int i = 1; i <= graph.genus; ++i) {
    if (graph.vertex({i, Side::Plus}).markers.empty()) {
      report.add("vertex pair " + std::to_string(i) + " meets no edge");
    }
  }
  return report;
}

}  // namespace heegaard
