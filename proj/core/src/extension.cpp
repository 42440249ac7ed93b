#include "heegaard/extension.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "heegaard/errors.hpp"

namespace heegaard {

BalanceReport is_balanced(const HeegaardGraph& graph, const LinkDiagram& diagram) {
  BalanceReport out;
  for (int i = 1; i <= graph.genus; ++i) out.vertices.push_back({i, 0, 0});
  for (const auto& s : diagram.strands) {
    if (s.end.vertex.side == Side::Plus) ++out.vertices.at(static_cast<std::size_t>(s.end.vertex.handle - 1)).forward_ends;
    if (s.start.vertex.side == Side::Plus) {
      ++out.vertices.at(static_cast<std::size_t>(s.start.vertex.handle - 1)).backward_ends;
    }
  }
  for (const auto& v : out.vertices) out.balanced = out.balanced && v.balanced();
  return out;
}

bool ExtensionPlan::is_extension_strand(const std::string& strand_id) const {
  for (const auto& c : copies) {
    if (std::find(c.strands.begin(), c.strands.end(), strand_id) != c.strands.end()) return true;
  }
  return false;
}

ExtensionPlan plan_extension(std::span<const Int> x) {
  ExtensionPlan plan;
  plan.x.assign(x.begin(), x.end());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] > 1000000 || x[j] < -1000000) throw Error("extension coefficient too large to synthesise");
    for (Int c = 1; c <= std::abs(x[j]); ++c) {
      ExtensionCopy copy;
      copy.color = static_cast<int>(j) + 1;
      copy.index = static_cast<int>(c);
      copy.orientation = x[j] > 0 ? -1 : 1;
      copy.component = "E" + std::to_string(copy.color) + "c" + std::to_string(copy.index);
      plan.copies.push_back(std::move(copy));
    }
  }
  return plan;
}

namespace {

struct TransversalRef {
  int slot;
  int sign;
};

std::string head_position(const ExtensionCopy& c, const std::string& edge) { return c.component + "_" + edge + "_h"; }
std::string tail_position(const ExtensionCopy& c, const std::string& edge) { return c.component + "_" + edge + "_t"; }
std::string crossing_id(const ExtensionCopy& c, const std::string& edge, int slot) {
  return "X" + c.component.substr(1) + "_" + edge + "_" + std::to_string(slot);
}

}  // namespace

ExtendedDiagram synthesize_extension_link(const HeegaardGraph& graph, const LinkDiagram& diagram,
                                          std::span<const Int> x) {
  if (x.size() != static_cast<std::size_t>(graph.genus)) {
    throw std::invalid_argument("coefficient vector has length " + std::to_string(x.size()) + ", expected " +
                                std::to_string(graph.genus));
  }
  const auto report = validate_diagram(graph, diagram);
  if (!report.ok()) throw MalformedDiagram(report.errors.front());

  ExtendedDiagram out{diagram, plan_extension(x)};
  if (out.plan.copies.empty()) return out;
  LinkDiagram& d = out.diagram;

  std::map<int, std::vector<const ExtensionCopy*>> copies_of;
  for (const auto& c : out.plan.copies) copies_of[c.color].push_back(&c);

  // Ids already taken, to refuse silent clashes with the generated names.
  std::set<std::string> taken;
  for (const auto& s : diagram.strands) taken.insert(s.id);
  for (const auto& c : diagram.circles) taken.insert(c.id);
  std::set<std::string> taken_crossings;
  for (const auto& c : diagram.crossings) taken_crossings.insert(c.id);
  std::set<std::string> taken_positions;
  for (const auto& v : graph.vertices) {
    for (const auto& item : diagram.order_at(graph, v.id)) taken_positions.insert(item);
  }
  auto claim = [](std::set<std::string>& pool, const std::string& id) {
    if (!pool.insert(id).second) throw Error("generated id " + id + " clashes with an existing one");
  };

  // Original link: each crossing with a copied edge gains one crossing per copy.
  std::map<std::string, std::vector<TransversalRef>> along;
  auto rewrite = [&](std::vector<Event>& events) {
    std::vector<Event> next;
    for (const auto& ev : events) {
      const auto* t = std::get_if<TransversalEvent>(&ev);
      const Edge* e = t ? graph.find_edge(t->edge) : nullptr;
      if (!e || !copies_of.count(e->color)) {
        next.push_back(ev);
        continue;
      }
      along[e->id].push_back({t->slot, t->sign});
      const auto& copies = copies_of[e->color];
      std::vector<Event> xs;
      for (const auto* c : copies) {
        const std::string id = crossing_id(*c, e->id, t->slot);
        claim(taken_crossings, id);
        const int sign = -c->orientation * t->sign;
        d.crossings.push_back({id, sign, canonical_crossing_order(sign)});
        xs.push_back(CrossingEvent{id, Role::Over});
      }
      // Copies sit on the left: a left-going strand meets the edge first.
      if (t->sign > 0) {
        next.push_back(ev);
        next.insert(next.end(), xs.begin(), xs.end());
      } else {
        next.insert(next.end(), xs.rbegin(), xs.rend());
        next.push_back(ev);
      }
    }
    events = std::move(next);
  };
  for (auto& s : d.strands) rewrite(s.events);
  for (auto& c : d.circles) rewrite(c.events);
  for (auto& [edge, refs] : along) {
    std::sort(refs.begin(), refs.end(), [](const auto& a, const auto& b) { return a.slot < b.slot; });
  }

  // The copies themselves, one strand per edge of the cycle.
  for (auto& copy : out.plan.copies) {
    const auto cycle = graph.color_cycle(copy.color);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Edge& e = graph.edges[cycle[k]];
      const Edge& next = graph.edges[cycle[(k + 1) % cycle.size()]];
      Strand s;
      s.id = copy.component + "_" + e.id;
      claim(taken, s.id);
      claim(taken_positions, head_position(copy, e.id));
      claim(taken_positions, tail_position(copy, e.id));
      const Attachment head{e.head.vertex, head_position(copy, e.id)};
      const Attachment tail{e.tail.vertex, tail_position(copy, e.id)};
      for (const auto& r : along[e.id]) s.events.push_back(CrossingEvent{crossing_id(copy, e.id, r.slot), Role::Under});
      if (copy.orientation > 0) {
        s.start = tail;
        s.end = head;
        d.passages.push_back({head, Attachment{next.tail.vertex, tail_position(copy, next.id)}});
      } else {
        std::reverse(s.events.begin(), s.events.end());
        s.start = head;
        s.end = tail;
        d.passages.push_back({Attachment{next.tail.vertex, tail_position(copy, next.id)}, head});
      }
      copy.strands.push_back(s.id);
      d.strands.push_back(std::move(s));
    }
  }

  // Vertex orders: copy attachments hug their edge marker on its left side.
  std::vector<VertexOrder> orders;
  for (const auto& v : graph.vertices) {
    VertexOrder o{v.id, {}};
    for (const auto& item : diagram.order_at(graph, v.id)) {
      const auto as_head = graph.edge_with_head({v.id, item});
      const auto as_tail = graph.edge_with_tail({v.id, item});
      const Edge* e = as_head ? &graph.edges[*as_head] : as_tail ? &graph.edges[*as_tail] : nullptr;
      if (!e || !copies_of.count(e->color)) {
        o.items.push_back(item);
        continue;
      }
      const auto& copies = copies_of[e->color];
      if (as_head) {
        for (auto it = copies.rbegin(); it != copies.rend(); ++it) o.items.push_back(head_position(**it, e->id));
        o.items.push_back(item);
      } else {
        o.items.push_back(item);
        for (const auto* c : copies) o.items.push_back(tail_position(*c, e->id));
      }
    }
    orders.push_back(std::move(o));
  }
  d.orders = std::move(orders);
  return out;
}

}  // namespace heegaard
