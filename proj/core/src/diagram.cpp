#include "heegaard/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "heegaard/errors.hpp"

namespace heegaard {

std::string to_string(const Attachment& a) { return to_string(a.vertex) + "." + a.position; }

std::string to_string(CrossingEnd end) {
  switch (end) {
    case CrossingEnd::OverIn: return "over-in";
    case CrossingEnd::UnderIn: return "under-in";
    case CrossingEnd::OverOut: return "over-out";
    case CrossingEnd::UnderOut: return "under-out";
  }
  return "?";
}

std::optional<CrossingEnd> parse_crossing_end(const std::string& token) {
  if (token == "over-in") return CrossingEnd::OverIn;
  if (token == "under-in") return CrossingEnd::UnderIn;
  if (token == "over-out") return CrossingEnd::OverOut;
  if (token == "under-out") return CrossingEnd::UnderOut;
  return std::nullopt;
}

std::array<CrossingEnd, 4> canonical_crossing_order(int sign) {
  if (sign > 0) return {CrossingEnd::OverIn, CrossingEnd::UnderIn, CrossingEnd::OverOut, CrossingEnd::UnderOut};
  return {CrossingEnd::OverIn, CrossingEnd::UnderOut, CrossingEnd::OverOut, CrossingEnd::UnderIn};
}

int sign_of_order(const std::array<CrossingEnd, 4>& order) {
  for (int sign : {1, -1}) {
    const auto ref = canonical_crossing_order(sign);
    for (std::size_t shift = 0; shift < 4; ++shift) {
      bool match = true;
      for (std::size_t k = 0; k < 4 && match; ++k) match = order[k] == ref[(k + shift) % 4];
      if (match) return sign;
    }
  }
  return 0;
}

const Crossing* LinkDiagram::find_crossing(const std::string& id) const {
  for (const auto& c : crossings) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const VertexOrder* LinkDiagram::find_order(VertexId v) const {
  for (const auto& o : orders) {
    if (o.vertex == v) return &o;
  }
  return nullptr;
}

std::vector<std::string> LinkDiagram::order_at(const HeegaardGraph& graph, VertexId v) const {
  if (const auto* o = find_order(v)) return o->items;
  if (v.handle >= 1 && v.handle <= graph.genus) return graph.vertex(v).markers;
  return {};
}

const Passage* LinkDiagram::passage_from_end(const Attachment& a) const {
  for (const auto& p : passages) {
    if (p.end == a) return &p;
  }
  return nullptr;
}

const Passage* LinkDiagram::passage_to_start(const Attachment& a) const {
  for (const auto& p : passages) {
    if (p.start == a) return &p;
  }
  return nullptr;
}

namespace {

void check_events(const HeegaardGraph& graph, const LinkDiagram& diagram, const std::string& owner,
                  const std::vector<Event>& events, std::map<std::string, std::pair<int, int>>& roles,
                  std::map<std::string, std::vector<int>>& slots, ValidationReport& report) {
  for (const auto& ev : events) {
    if (const auto* c = std::get_if<CrossingEvent>(&ev)) {
      if (!diagram.find_crossing(c->crossing)) {
        report.add(owner + " refers to unknown crossing " + c->crossing);
        continue;
      }
      auto& r = roles[c->crossing];
      (c->role == Role::Over ? r.first : r.second)++;
    } else {
      const auto& t = std::get<TransversalEvent>(ev);
      if (!graph.find_edge(t.edge)) {
        report.add(owner + " refers to unknown edge " + t.edge);
        continue;
      }
      if (t.sign != 1 && t.sign != -1) report.add(owner + " has transversal sign other than +-1");
      slots[t.edge].push_back(t.slot);
    }
  }
}

}  // namespace

ValidationReport validate_diagram(const HeegaardGraph& graph, const LinkDiagram& diagram) {
  ValidationReport report;
  std::set<std::string> component_ids;
  for (const auto& s : diagram.strands) {
    if (!component_ids.insert(s.id).second) report.add("duplicate component id " + s.id);
  }
  for (const auto& c : diagram.circles) {
    if (!component_ids.insert(c.id).second) report.add("duplicate component id " + c.id);
  }
  std::set<std::string> crossing_ids;
  for (const auto& x : diagram.crossings) {
    if (!crossing_ids.insert(x.id).second) report.add("duplicate crossing id " + x.id);
    const int implied = sign_of_order(x.order);
    if (x.sign != 1 && x.sign != -1) {
      report.add("crossing " + x.id + " has sign other than +-1");
    } else if (implied == 0) {
      report.add("crossing " + x.id + " end order is not a legal crossing");
    } else if (implied != x.sign) {
      report.add("crossing " + x.id + " sign disagrees with its end order");
    }
  }

  // Crossing incidences and edge slots.
  std::map<std::string, std::pair<int, int>> roles;
  std::map<std::string, std::vector<int>> slots;
  for (const auto& s : diagram.strands) check_events(graph, diagram, "strand " + s.id, s.events, roles, slots, report);
  for (const auto& c : diagram.circles) check_events(graph, diagram, "circle " + c.id, c.events, roles, slots, report);
  for (const auto& x : diagram.crossings) {
    const auto r = roles[x.id];
    if (r.first != 1 || r.second != 1) {
      report.add("crossing " + x.id + " needs exactly one over and one under incidence (found " +
                 std::to_string(r.first) + "/" + std::to_string(r.second) + ")");
    }
  }
  for (auto& [edge, used] : slots) {
    std::sort(used.begin(), used.end());
    for (std::size_t k = 0; k < used.size(); ++k) {
      if (used[k] != static_cast<int>(k) + 1) {
        report.add("edge " + edge + " transversal slots are not 1.." + std::to_string(used.size()));
        break;
      }
    }
  }

  // Attachments: where they sit and whether they start or end a strand.
  std::map<Attachment, bool> is_end;  // true = strand end (forward), false = start
  for (const auto& s : diagram.strands) {
    for (const auto& [a, end] : {std::pair{s.start, false}, std::pair{s.end, true}}) {
      if (a.vertex.handle < 1 || a.vertex.handle > graph.genus) {
        report.add("strand " + s.id + " attaches to missing vertex " + to_string(a.vertex));
        continue;
      }
      if (!is_end.emplace(a, end).second) report.add("attachment " + to_string(a) + " is used twice");
      const auto& ms = graph.vertex(a.vertex).markers;
      if (std::find(ms.begin(), ms.end(), a.position) != ms.end()) {
        report.add("attachment " + to_string(a) + " collides with an edge marker");
      }
    }
  }
  if (!report.ok()) return report;

  // Vertex orders.
  std::set<VertexId> ordered;
  for (const auto& o : diagram.orders) {
    if (o.vertex.handle < 1 || o.vertex.handle > graph.genus) {
      report.add("order given for missing vertex " + to_string(o.vertex));
      continue;
    }
    if (!ordered.insert(o.vertex).second) report.add("duplicate order for vertex " + to_string(o.vertex));
  }
  for (int i = 1; i <= graph.genus; ++i) {
    for (Side side : {Side::Plus, Side::Minus}) {
      const VertexId v{i, side};
      const auto items = diagram.order_at(graph, v);
      const auto& markers = graph.vertex(v).markers;
      std::vector<std::string> marker_part;
      std::set<std::string> seen;
      std::size_t positions = 0;
      for (const auto& item : items) {
        if (!seen.insert(item).second) report.add("vertex " + to_string(v) + " order repeats " + item);
        if (std::find(markers.begin(), markers.end(), item) != markers.end()) {
          marker_part.push_back(item);
        } else if (is_end.count(Attachment{v, item})) {
          ++positions;
        } else {
          report.add("vertex " + to_string(v) + " order names unknown item " + item);
        }
      }
      if (!same_cyclic_order(marker_part, markers)) {
        report.add("vertex " + to_string(v) + " order disagrees with the graph's marker order");
      }
      std::size_t expected = 0;
      for (const auto& [a, end] : is_end) expected += a.vertex == v ? 1 : 0;
      if (positions != expected) report.add("vertex " + to_string(v) + " order omits strand attachments");
    }
  }
  if (!report.ok()) return report;

  // Passages: each end leaves once, each start is entered once, through the
  // same handle, and the reflection extends over the merged orders.
  std::map<Attachment, int> end_use, start_use;
  for (const auto& p : diagram.passages) {
    auto e = is_end.find(p.end);
    auto s = is_end.find(p.start);
    if (e == is_end.end() || !e->second) {
      report.add("passage " + to_string(p.end) + " ~ " + to_string(p.start) + " does not leave from a strand end");
      continue;
    }
    if (s == is_end.end() || s->second) {
      report.add("passage " + to_string(p.end) + " ~ " + to_string(p.start) + " does not enter a strand start");
      continue;
    }
    if (p.start.vertex != p.end.vertex.mirror()) {
      report.add("passage " + to_string(p.end) + " ~ " + to_string(p.start) + " violates reflection (wrong vertex)");
    }
    ++end_use[p.end];
    ++start_use[p.start];
  }
  for (const auto& [a, end] : is_end) {
    const int n = end ? end_use[a] : start_use[a];
    if (n != 1) report.add("attachment " + to_string(a) + " participates in " + std::to_string(n) + " passages");
  }
  if (!report.ok()) return report;

  for (int i = 1; i <= graph.genus; ++i) {
    const VertexId plus{i, Side::Plus}, minus{i, Side::Minus};
    const auto items = diagram.order_at(graph, plus);
    std::vector<std::string> mapped;
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
      const Attachment a{plus, *it};
      if (auto pos = is_end.find(a); pos != is_end.end()) {
        const Passage* p = pos->second ? diagram.passage_from_end(a) : diagram.passage_to_start(a);
        mapped.push_back(pos->second ? p->start.position : p->end.position);
      } else {
        mapped.push_back(*graph.reflect(plus, *it));
      }
    }
    if (!same_cyclic_order(mapped, diagram.order_at(graph, minus))) {
      report.add("passage violates reflection at handle " + std::to_string(i));
    }
  }
  if (!report.ok()) return report;

  try {
    (void)component_walk(diagram);
  } catch (const MalformedDiagram& e) {
    report.add(e.what());
  }
  return report;
}

std::vector<ComponentCycle> component_walk(const LinkDiagram& diagram) {
  std::map<Attachment, std::size_t> strand_by_start;
  for (std::size_t k = 0; k < diagram.strands.size(); ++k) strand_by_start[diagram.strands[k].start] = k;
  std::map<Attachment, std::size_t> passage_by_end;
  for (std::size_t k = 0; k < diagram.passages.size(); ++k) passage_by_end[diagram.passages[k].end] = k;

  std::vector<ComponentCycle> out;
  std::vector<bool> visited(diagram.strands.size(), false);
  for (std::size_t first = 0; first < diagram.strands.size(); ++first) {
    if (visited[first]) continue;
    ComponentCycle cycle;
    std::size_t cur = first;
    while (!visited[cur]) {
      visited[cur] = true;
      cycle.pieces.push_back({false, cur});
      const Strand& s = diagram.strands[cur];
      auto p = passage_by_end.find(s.end);
      if (p == passage_by_end.end()) throw MalformedDiagram("dangling attachment " + to_string(s.end));
      cycle.passages.push_back(p->second);
      auto next = strand_by_start.find(diagram.passages[p->second].start);
      if (next == strand_by_start.end()) {
        throw MalformedDiagram("dangling attachment " + to_string(diagram.passages[p->second].start));
      }
      cur = next->second;
    }
    if (cur != first) throw MalformedDiagram("strand " + diagram.strands[first].id + " is not closed by any passage cycle");
    out.push_back(std::move(cycle));
  }
  for (std::size_t k = 0; k < diagram.circles.size(); ++k) out.push_back(ComponentCycle{{{true, k}}, {}});
  return out;
}

}  // namespace heegaard
