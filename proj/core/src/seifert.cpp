#include "heegaard/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "heegaard/errors.hpp"
#include "heegaard/homology.hpp"

namespace heegaard {

std::size_t PairingMatching::chord_count() const {
  std::size_t n = 0;
  for (const auto& v : plus) n += v.chords.size();
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> match_cyclic_signs(const std::vector<int>& signs) {
  const auto pos = std::count(signs.begin(), signs.end(), 1);
  if (pos * 2 != static_cast<std::ptrdiff_t>(signs.size())) {
    throw UnbalancedVertex(std::to_string(pos) + " forward and " + std::to_string(signs.size() - static_cast<std::size_t>(pos)) +
                           " backward ends");
  }
  // Stack elimination: once nothing adjacent cancels, what is left is
  // single-signed, hence empty for balanced input.
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<std::size_t> stack;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (!stack.empty() && signs[stack.back()] == -signs[k]) {
      const std::size_t other = stack.back();
      stack.pop_back();
      out.emplace_back(signs[k] > 0 ? k : other, signs[k] > 0 ? other : k);
    } else {
      stack.push_back(k);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PairingMatching pairing_matching(const HeegaardGraph& graph, const LinkDiagram& diagram) {
  std::map<Attachment, bool> is_end;
  for (const auto& s : diagram.strands) {
    is_end[s.start] = false;
    is_end[s.end] = true;
  }
  PairingMatching m;
  for (int i = 1; i <= graph.genus; ++i) {
    const VertexId plus{i, Side::Plus};
    std::vector<std::string> attachments;
    for (const auto& item : diagram.order_at(graph, plus)) {
      if (is_end.count({plus, item})) attachments.push_back(item);
    }
    if (!attachments.empty()) {
      std::rotate(attachments.begin(), std::min_element(attachments.begin(), attachments.end()), attachments.end());
    }
    std::vector<int> signs;
    for (const auto& a : attachments) signs.push_back(is_end.at({plus, a}) ? 1 : -1);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    try {
      pairs = match_cyclic_signs(signs);
    } catch (const UnbalancedVertex& e) {
      throw UnbalancedVertex("vertex " + to_string(plus) + " has " + e.what());
    }
    VertexChords up{plus, {}}, down{plus.mirror(), {}};
    for (const auto& [e, s] : pairs) {
      const Attachment end{plus, attachments[e]}, start{plus, attachments[s]};
      const Passage* out = diagram.passage_from_end(end);
      const Passage* in = diagram.passage_to_start(start);
      if (!out || !in) throw MalformedDiagram("attachment without passage at " + to_string(plus));
      up.chords.push_back({end, start});
      down.chords.push_back({in->end, out->start});
    }
    m.plus.push_back(std::move(up));
    m.minus.push_back(std::move(down));
  }
  return m;
}

ResolvedSystem resolve_crossings(const LinkDiagram& diagram) {
  ResolvedSystem r;
  std::map<std::string, ResolvedCrossing> by_id;
  auto in_port = [](const CrossingEvent& c) {
    return CrossingPort{c.crossing, c.role == Role::Over ? CrossingEnd::OverIn : CrossingEnd::UnderIn};
  };
  auto out_port = [](const CrossingEvent& c) {
    return CrossingPort{c.crossing, c.role == Role::Over ? CrossingEnd::OverOut : CrossingEnd::UnderOut};
  };
  auto note = [&](const CrossingPort& p, std::size_t seg) {
    auto& x = by_id[p.crossing];
    switch (p.end) {
      case CrossingEnd::OverIn: x.over_in = seg; break;
      case CrossingEnd::UnderIn: x.under_in = seg; break;
      case CrossingEnd::OverOut: x.over_out = seg; break;
      case CrossingEnd::UnderOut: x.under_out = seg; break;
    }
  };
  auto cut = [&](const std::string& owner, std::optional<SegmentEnd> first, const std::vector<Event>& events,
                 std::optional<SegmentEnd> last, bool closed) {
    std::vector<const CrossingEvent*> xs;
    for (const auto& ev : events) {
      if (const auto* c = std::get_if<CrossingEvent>(&ev)) xs.push_back(c);
    }
    if (closed && xs.empty()) {
      r.segments.push_back({owner, std::nullopt, std::nullopt});
      return;
    }
    std::optional<SegmentEnd> from = closed ? std::optional<SegmentEnd>(out_port(*xs.back())) : first;
    for (const auto* c : xs) {
      const std::size_t seg = r.segments.size();
      r.segments.push_back({owner, from, in_port(*c)});
      note(in_port(*c), seg);
      if (from && std::holds_alternative<CrossingPort>(*from)) note(std::get<CrossingPort>(*from), seg);
      from = out_port(*c);
    }
    if (!closed) {
      const std::size_t seg = r.segments.size();
      r.segments.push_back({owner, from, last});
      if (std::holds_alternative<CrossingPort>(*from)) note(std::get<CrossingPort>(*from), seg);
    }
  };
  for (const auto& s : diagram.strands) cut(s.id, s.start, s.events, s.end, false);
  for (const auto& c : diagram.circles) cut(c.id, std::nullopt, c.events, std::nullopt, true);
  for (const auto& x : diagram.crossings) {
    auto it = by_id.find(x.id);
    if (it == by_id.end()) continue;
    it->second.id = x.id;
    it->second.sign = x.sign;
    r.crossings.push_back(it->second);
  }
  return r;
}

namespace {

std::vector<std::size_t> successors(const ResolvedSystem& r, const PairingMatching& m) {
  std::map<Attachment, std::size_t> starting_at;
  std::map<std::pair<std::string, CrossingEnd>, std::size_t> leaving;
  for (std::size_t k = 0; k < r.segments.size(); ++k) {
    const auto& from = r.segments[k].from;
    if (!from) continue;
    if (const auto* a = std::get_if<Attachment>(&*from)) {
      starting_at[*a] = k;
    } else {
      const auto& p = std::get<CrossingPort>(*from);
      leaving[{p.crossing, p.end}] = k;
    }
  }
  std::map<Attachment, Attachment> chord;
  for (const auto* side : {&m.plus, &m.minus}) {
    for (const auto& v : *side) {
      for (const auto& c : v.chords) chord[c.end] = c.start;
    }
  }
  std::vector<std::size_t> next(r.segments.size());
  for (std::size_t k = 0; k < r.segments.size(); ++k) {
    const auto& to = r.segments[k].to;
    if (!to) {
      next[k] = k;
      continue;
    }
    std::optional<std::size_t> found;
    if (const auto* a = std::get_if<Attachment>(&*to)) {
      auto c = chord.find(*a);
      if (c != chord.end()) {
        auto s = starting_at.find(c->second);
        if (s != starting_at.end()) found = s->second;
      }
      if (!found) throw MalformedDiagram("open arc at " + to_string(*a) + ": no chord closes it");
    } else {
      const auto& p = std::get<CrossingPort>(*to);
      const CrossingEnd exit = p.end == CrossingEnd::OverIn ? CrossingEnd::UnderOut : CrossingEnd::OverOut;
      auto s = leaving.find({p.crossing, exit});
      if (s == leaving.end()) throw MalformedDiagram("open arc at crossing " + p.crossing);
      found = s->second;
    }
    next[k] = *found;
  }
  std::vector<int> preds(r.segments.size(), 0);
  for (auto n : next) {
    if (++preds[n] > 1) throw MalformedDiagram("resolved arcs do not close up consistently");
  }
  return next;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

SeifertCircles count_seifert_circles(const ResolvedSystem& resolved, const PairingMatching& matching) {
  const auto next = successors(resolved, matching);
  SeifertCircles out;
  constexpr auto unset = static_cast<std::size_t>(-1);
  out.circle_of.assign(next.size(), unset);
  for (std::size_t k = 0; k < next.size(); ++k) {
    if (out.circle_of[k] != unset) continue;
    std::vector<std::size_t> members;
    for (std::size_t cur = k; out.circle_of[cur] == unset; cur = next[cur]) {
      out.circle_of[cur] = out.count;
      members.push_back(cur);
    }
    out.members.push_back(std::move(members));
    ++out.count;
  }
  return out;
}

SpanningSurface assemble_surface(const HeegaardGraph& graph, const LinkDiagram& diagram, const ExtensionPlan& plan,
                                 const PairingMatching& matching) {
  (void)graph;
  const ResolvedSystem resolved = resolve_crossings(diagram);
  const SeifertCircles circles = count_seifert_circles(resolved, matching);

  std::map<Attachment, std::size_t> ending_at;
  std::map<std::string, std::size_t> first_segment;
  std::map<std::string, int> piece_count;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < resolved.segments.size(); ++k) {
    const auto& seg = resolved.segments[k];
    if (seg.to) {
      if (const auto* a = std::get_if<Attachment>(&*seg.to)) ending_at[*a] = k;
    }
    first_segment.emplace(seg.owner, k);
    labels.push_back(seg.owner + ":" + std::to_string(++piece_count[seg.owner]));
  }

  SpanningSurface s;
  s.h0 = static_cast<int>(circles.count);
  for (const auto& members : circles.members) {
    std::vector<std::string> names;
    for (auto k : members) names.push_back(labels[k]);
    s.circles.push_back(std::move(names));
  }
  for (std::size_t v = 0; v < matching.plus.size(); ++v) {
    const auto& up = matching.plus[v];
    const auto& down = matching.minus[v];
    for (std::size_t k = 0; k < up.chords.size(); ++k) {
      s.bands.push_back({BandKind::Pairing, std::to_string(up.vertex.handle), 0,
                         circles.circle_of[ending_at.at(up.chords[k].end)],
                         circles.circle_of[ending_at.at(down.chords[k].end)]});
      ++s.h1_pairing;
    }
  }
  for (const auto& x : resolved.crossings) {
    s.bands.push_back({BandKind::Twist, x.id, x.sign, circles.circle_of[x.over_in], circles.circle_of[x.under_in]});
    ++s.h1_twist;
  }
  for (const auto& copy : plan.copies) {
    if (copy.strands.empty()) continue;
    s.caps.push_back({copy.component, circles.circle_of[first_segment.at(copy.strands.front())]});
  }
  s.h2 = static_cast<int>(s.caps.size());
  s.chi = s.h0 - s.h1() + s.h2;

  // Boundary: components of the original link only; caps close the rest.
  std::vector<std::size_t> boundary_circles;
  for (const auto& cycle : component_walk(diagram)) {
    const auto& piece = cycle.pieces.front();
    const std::string& id = piece.is_circle ? diagram.circles[piece.index].id : diagram.strands[piece.index].id;
    if (!piece.is_circle && plan.is_extension_strand(id)) continue;
    boundary_circles.push_back(circles.circle_of[first_segment.at(id)]);
  }
  s.mu = static_cast<int>(boundary_circles.size());

  DisjointSets sets(circles.count);
  for (const auto& b : s.bands) sets.unite(b.circle_a, b.circle_b);
  std::map<std::size_t, int> chi_c, mu_c;
  for (std::size_t c = 0; c < circles.count; ++c) ++chi_c[sets.find(c)];
  for (const auto& b : s.bands) --chi_c[sets.find(b.circle_a)];
  for (const auto& c : s.caps) ++chi_c[sets.find(c.circle)];
  for (auto c : boundary_circles) ++mu_c[sets.find(c)];
  for (const auto& [root, chi] : chi_c) {
    const int twice = 2 - chi - mu_c[root];
    if (twice < 0 || twice % 2 != 0) {
      throw std::logic_error("surface piece with chi " + std::to_string(chi) + " and " + std::to_string(mu_c[root]) +
                             " boundary circles is not orientable");
    }
    s.genus += twice / 2;
    ++s.surface_components;
  }
  return s;
}

SeifertRun run_seifert(const HeegaardGraph& graph, const LinkDiagram& diagram) {
  if (auto r = validate_graph(graph); !r.ok()) throw MalformedDiagram(r.errors.front());
  if (auto r = validate_diagram(graph, diagram); !r.ok()) throw MalformedDiagram(r.errors.front());
  SeifertRun run;
  run.link_class = link_class(graph, diagram);
  const auto x = solve_extension_coefficients(relator_matrix(graph), run.link_class);
  run.extended = synthesize_extension_link(graph, diagram, x);
  run.matching = pairing_matching(graph, run.extended.diagram);
  run.surface = assemble_surface(graph, run.extended.diagram, run.extended.plan, run.matching);
  return run;
}

}  // namespace heegaard
