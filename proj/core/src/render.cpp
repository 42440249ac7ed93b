#include "heegaard/render.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace heegaard {

namespace {

struct Pt {
  double x = 0;
  double y = 0;
};

Pt operator+(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
Pt operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
Pt operator*(double k, Pt a) { return {k * a.x, k * a.y}; }

constexpr double kSize = 800;
constexpr double kLayoutRadius = 280;
constexpr double kVertexRadius = 42;
constexpr double kGap = 7;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
                                "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#637939"};

std::string colour(std::size_t k) { return kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))]; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

std::string points(const std::vector<Pt>& pts) {
  std::string out;
  for (std::size_t k = 0; k < pts.size(); ++k) out += (k ? " " : "") + num(pts[k].x) + "," + num(pts[k].y);
  return out;
}

Pt on_circle(Pt c, double r, double angle) { return {c.x + r * std::cos(angle), c.y - r * std::sin(angle)}; }

// Shorten the polyline's end (or start) by `by` pixels.
Pt pull_back(Pt from, Pt to, double by) {
  const Pt d = to - from;
  const double len = std::hypot(d.x, d.y);
  if (len <= by * 2) return from + 0.5 * d;
  return to - (by / len) * d;
}

}  // namespace

std::string render_svg(const HeegaardGraph& graph, const LinkDiagram* diagram, const SpanningSurface* surface) {
  const Pt centre{kSize / 2, kSize / 2};
  std::map<VertexId, Pt> vertex_at;
  std::map<std::pair<VertexId, std::string>, Pt> item_at;
  const std::size_t n = graph.vertices.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    const Pt c = on_circle(centre, kLayoutRadius, angle);
    const auto& v = graph.vertices[k];
    vertex_at[v.id] = c;
    const auto items = diagram ? diagram->order_at(graph, v.id) : v.markers;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(items.size());
      item_at[{v.id, items[i]}] = on_circle(c, kVertexRadius, a);
    }
  }

  // Transversal points spread along their edge.
  std::map<std::pair<std::string, int>, Pt> transversal_at;
  std::map<std::string, int> slots_on;
  if (diagram) {
    auto scan = [&](const std::vector<Event>& evs) {
      for (const auto& ev : evs) {
        if (const auto* t = std::get_if<TransversalEvent>(&ev)) slots_on[t->edge] = std::max(slots_on[t->edge], t->slot);
      }
    };
    for (const auto& s : diagram->strands) scan(s.events);
    for (const auto& c : diagram->circles) scan(c.events);
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kSize) << "\" height=\"" << num(kSize)
      << "\" viewBox=\"0 0 " << num(kSize) << " " << num(kSize) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(kSize) << "\" height=\"" << num(kSize) << "\" fill=\"white\"/>\n";

  out << "<g id=\"edges\">\n";
  for (const auto& e : graph.edges) {
    const Pt a = item_at[{e.tail.vertex, e.tail.marker}];
    const Pt b = item_at[{e.head.vertex, e.head.marker}];
    // Bow the edge towards the centre so parallel edges stay apart.
    const Pt mid = 0.5 * (a + b);
    const Pt bend = mid + 0.25 * (centre - mid);
    std::vector<Pt> pts{a};
    const int k = slots_on[e.id];
    for (int s = 1; s <= k; ++s) {
      const double t = static_cast<double>(s) / (k + 1);
      const Pt p = (1 - t) * (1 - t) * a + 2 * t * (1 - t) * bend + t * t * b;
      transversal_at[{e.id, s}] = p;
    }
    for (int s = 1; s <= 8; ++s) {
      const double t = s / 9.0;
      pts.push_back((1 - t) * (1 - t) * a + 2 * t * (1 - t) * bend + t * t * b);
    }
    pts.push_back(b);
    out << "<polyline class=\"edge color-" << e.color << "\" data-id=\"" << e.id << "\" fill=\"none\" stroke=\""
        << colour(static_cast<std::size_t>(e.color - 1)) << "\" stroke-width=\"2.00\" points=\"" << points(pts) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"vertices\">\n";
  for (const auto& v : graph.vertices) {
    const Pt c = vertex_at[v.id];
    out << "<circle class=\"fat-vertex\" data-id=\"" << to_string(v.id) << "\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y)
        << "\" r=\"" << num(kVertexRadius) << "\" fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"1.50\"/>\n";
    out << "<text x=\"" << num(c.x) << "\" y=\"" << num(c.y + 5) << "\" text-anchor=\"middle\" font-size=\"14\">V"
        << v.id.handle << (v.id.side == Side::Plus ? "+" : "-") << "</text>\n";
  }
  out << "</g>\n";

  if (diagram) {
    // Crossings: relax each to the mean of its neighbours along the link.
    std::map<std::string, Pt> crossing_at;
    std::map<std::string, std::vector<std::string>> neighbours;
    std::map<std::string, std::vector<Pt>> anchors;
    auto collect = [&](const std::vector<Event>& evs, const Pt* start, const Pt* end, bool closed) {
      for (std::size_t k = 0; k < evs.size(); ++k) {
        const auto* c = std::get_if<CrossingEvent>(&evs[k]);
        if (!c) continue;
        for (int dir : {-1, 1}) {
          const auto j = static_cast<long>(k) + dir;
          if (j < 0 || j >= static_cast<long>(evs.size())) {
            if (closed) {
              const auto w = static_cast<std::size_t>((j + static_cast<long>(evs.size())) % static_cast<long>(evs.size()));
              if (const auto* o = std::get_if<CrossingEvent>(&evs[w])) {
                if (o->crossing != c->crossing) neighbours[c->crossing].push_back(o->crossing);
              } else {
                const auto& t = std::get<TransversalEvent>(evs[w]);
                anchors[c->crossing].push_back(transversal_at[{t.edge, t.slot}]);
              }
            } else if (const Pt* p = j < 0 ? start : end) {
              anchors[c->crossing].push_back(*p);
            }
            continue;
          }
          if (const auto* o = std::get_if<CrossingEvent>(&evs[static_cast<std::size_t>(j)])) {
            if (o->crossing != c->crossing) neighbours[c->crossing].push_back(o->crossing);
          } else {
            const auto& t = std::get<TransversalEvent>(evs[static_cast<std::size_t>(j)]);
            anchors[c->crossing].push_back(transversal_at[{t.edge, t.slot}]);
          }
        }
      }
    };
    for (const auto& s : diagram->strands) {
      const Pt a = item_at[{s.start.vertex, s.start.position}];
      const Pt b = item_at[{s.end.vertex, s.end.position}];
      collect(s.events, &a, &b, false);
    }
    for (const auto& c : diagram->circles) collect(c.events, nullptr, nullptr, true);
    for (std::size_t k = 0; k < diagram->crossings.size(); ++k) {
      const double a = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(diagram->crossings.size());
      crossing_at[diagram->crossings[k].id] = on_circle(centre, kLayoutRadius * 0.45, a);
    }
    for (int iter = 0; iter < 200; ++iter) {
      for (const auto& x : diagram->crossings) {
        Pt sum{0, 0};
        int count = 0;
        for (const auto& p : anchors[x.id]) sum = sum + p, ++count;
        for (const auto& o : neighbours[x.id]) sum = sum + crossing_at[o], ++count;
        if (count == 0) continue;
        // Keep a little of the old position so pure crossing cycles stay spread out.
        crossing_at[x.id] = 0.5 * crossing_at[x.id] + (0.5 / count) * sum;
      }
    }

    // Seifert-circle index per strand piece, if a surface is given.
    std::map<std::string, std::size_t> circle_of_piece;
    if (surface) {
      for (std::size_t c = 0; c < surface->circles.size(); ++c) {
        for (const auto& label : surface->circles[c]) circle_of_piece[label] = c;
      }
    }

    auto draw = [&](const std::string& owner, std::vector<Pt> lead, const std::vector<Event>& evs,
                    std::vector<Pt> tail, bool closed) {
      // Split into pieces at crossing events, as the resolution does.
      struct Piece {
        std::vector<Pt> pts;
        bool gap_at_start = false;
      };
      std::vector<Piece> pieces(1);
      pieces.back().pts = lead;
      for (const auto& ev : evs) {
        if (const auto* t = std::get_if<TransversalEvent>(&ev)) {
          pieces.back().pts.push_back(transversal_at[{t->edge, t->slot}]);
          continue;
        }
        const auto& c = std::get<CrossingEvent>(ev);
        const Pt p = crossing_at[c.crossing];
        const bool under = c.role == Role::Under;
        auto& cur = pieces.back().pts;
        cur.push_back(under && !cur.empty() ? pull_back(cur.back(), p, kGap) : p);
        pieces.push_back({{p}, under});
      }
      for (const auto& p : tail) pieces.back().pts.push_back(p);
      if (closed && pieces.size() > 1) {
        // The piece after the last crossing runs on into the first one.
        auto& last = pieces.back();
        last.pts.insert(last.pts.end(), pieces.front().pts.begin(), pieces.front().pts.end());
        pieces.front() = std::move(last);
        pieces.pop_back();
      }
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        auto& pts = pieces[k].pts;
        if (pieces[k].gap_at_start && pts.size() >= 2) pts.front() = pull_back(pts[1], pts.front(), kGap);
        if (pts.size() < 2) continue;
        const std::string label = owner + ":" + std::to_string(k + 1);
        std::string stroke = "black", cls = "strand";
        if (auto it = circle_of_piece.find(label); it != circle_of_piece.end()) {
          stroke = colour(it->second);
          cls += " seifert-" + std::to_string(it->second + 1);
        }
        out << "<polyline class=\"" << cls << "\" data-id=\"" << label << "\" fill=\"none\" stroke=\"" << stroke
            << "\" stroke-width=\"3.00\" points=\"" << points(pts) << "\"/>\n";
      }
    };

    out << "<g id=\"link\">\n";
    for (const auto& s : diagram->strands) {
      const Pt a = item_at[{s.start.vertex, s.start.position}];
      const Pt b = item_at[{s.end.vertex, s.end.position}];
      draw(s.id, {vertex_at[s.start.vertex], a}, s.events, {b, vertex_at[s.end.vertex]}, false);
    }
    std::size_t free_circles = 0;
    for (const auto& c : diagram->circles) {
      if (c.events.empty()) {
        const Pt at{90.0 + 110.0 * static_cast<double>(free_circles % 6), 90.0 + 110.0 * static_cast<double>(free_circles / 6)};
        ++free_circles;
        std::string stroke = "black", cls = "closed-curve";
        if (auto it = circle_of_piece.find(c.id + ":1"); it != circle_of_piece.end()) {
          stroke = colour(it->second);
          cls += " seifert-" + std::to_string(it->second + 1);
        }
        out << "<circle class=\"" << cls << "\" data-id=\"" << c.id << "\" cx=\"" << num(at.x) << "\" cy=\"" << num(at.y)
            << "\" r=\"40.00\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"3.00\"/>\n";
        continue;
      }
      out << "<g class=\"closed-curve\" data-id=\"" << c.id << "\">\n";
      draw(c.id, {}, c.events, {}, true);
      out << "</g>\n";
    }
    out << "</g>\n";
  }

  out << "<g id=\"legend\" font-size=\"13\">\n";
  for (int j = 1; j <= graph.genus; ++j) {
    const double y = 20.0 + 18.0 * (j - 1);
    out << "<line x1=\"" << num(kSize - 120) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kSize - 95) << "\" y2=\"" << num(y)
        << "\" stroke=\"" << colour(static_cast<std::size_t>(j - 1)) << "\" stroke-width=\"3.00\"/>\n";
    out << "<text x=\"" << num(kSize - 88) << "\" y=\"" << num(y + 4) << "\">R" << j << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace heegaard
