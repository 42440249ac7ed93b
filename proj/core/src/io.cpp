#include "heegaard/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace heegaard {

std::string to_string(const Diagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.message;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || s.size() > 256) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

namespace {

constexpr int kMaxGenus = 100000;

struct Tok {
  std::string text;
  int col = 1;
};

struct Line {
  int number = 0;
  std::vector<Tok> toks;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t k = 0;
    while (k < raw.size()) {
      while (k < raw.size() && (raw[k] == ' ' || raw[k] == '\t' || raw[k] == '\r')) ++k;
      std::size_t start = k;
      while (k < raw.size() && raw[k] != ' ' && raw[k] != '\t' && raw[k] != '\r') ++k;
      if (k > start) line.toks.push_back({std::string(raw.substr(start, k - start)), static_cast<int>(start) + 1});
    }
    if (!line.toks.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

class Sink {
 public:
  void error(int line, int col, std::string message) { diags.push_back({line, col, std::move(message)}); }
  void error(const Line& l, const Tok& t, std::string message) { error(l.number, t.col, std::move(message)); }
  std::vector<Diagnostic> diags;
};

bool parse_int(std::string_view s, int& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Items of a comma list after "... :", possibly spread over several tokens.
std::vector<Tok> list_after(const Line& l, std::size_t from) {
  std::vector<Tok> items;
  for (std::size_t k = from; k < l.toks.size(); ++k) {
    const auto& t = l.toks[k];
    std::size_t start = 0;
    while (start <= t.text.size()) {
      std::size_t comma = t.text.find(',', start);
      if (comma == std::string::npos) comma = t.text.size();
      if (comma > start) items.push_back({t.text.substr(start, comma - start), t.col + static_cast<int>(start)});
      if (comma == t.text.size()) break;
      start = comma + 1;
    }
  }
  return items;
}

bool expect_colon(Sink& sink, const Line& l, std::size_t at) {
  if (l.toks.size() <= at || l.toks[at].text != ":") {
    const Tok& t = l.toks.size() > at ? l.toks[at] : l.toks.back();
    sink.error(l, t, "expected ':' after '" + l.toks[0].text + " " + l.toks[std::min(at, l.toks.size()) - 1].text + "'");
    return false;
  }
  return true;
}

std::string join(const std::vector<std::string>& items, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? sep : "") + items[k];
  return out;
}

// "2-.p" -> vertex and name.
bool parse_point(Sink& sink, const Line& l, const Tok& t, VertexId& v, std::string& name) {
  const auto dot = t.text.find('.');
  if (dot == std::string::npos) {
    sink.error(l, t, "expected <vertex>.<id>, got '" + t.text + "'");
    return false;
  }
  auto vid = parse_vertex_id(t.text.substr(0, dot));
  if (!vid) {
    sink.error(l, t, "bad vertex '" + t.text.substr(0, dot) + "'");
    return false;
  }
  name = t.text.substr(dot + 1);
  if (!is_identifier(name)) {
    sink.error(l.number, t.col + static_cast<int>(dot) + 1, "bad identifier '" + name + "'");
    return false;
  }
  v = *vid;
  return true;
}

std::string sign_text(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

HeegaardGraph canonicalize(HeegaardGraph graph) {
  for (auto& v : graph.vertices) v.markers = canonical_rotation(v.markers);
  std::map<int, int> seen;
  for (auto& e : graph.edges) e.ordinal = ++seen[e.color];
  return graph;
}

LinkDiagram canonicalize(LinkDiagram diagram) {
  for (auto& o : diagram.orders) o.items = canonical_rotation(o.items);
  for (auto& x : diagram.crossings) {
    auto it = std::find(x.order.begin(), x.order.end(), CrossingEnd::OverIn);
    if (it != x.order.end()) std::rotate(x.order.begin(), it, x.order.end());
  }
  return diagram;
}

// ---------------------------------------------------------------- .hg

ParseResult<HeegaardGraph> parse_hg(std::string_view text) {
  Sink sink;
  const auto lines = split_lines(text);
  std::optional<int> genus;
  struct PendingEdge {
    const Line* line;
    Edge edge;
  };
  std::vector<std::pair<const Line*, VertexId>> vertex_lines;
  std::vector<std::pair<const Line*, int>> reflect_lines;
  std::vector<PendingEdge> edges;

  for (const auto& l : lines) {
    const std::string& kw = l.toks[0].text;
    if (kw == "genus") {
      int g = 0;
      if (l.toks.size() != 2 || !parse_int(l.toks[1].text, g) || g < 0 || g > kMaxGenus) {
        sink.error(l, l.toks.back(), "expected 'genus <g>' with 0 <= g <= " + std::to_string(kMaxGenus));
      } else if (genus) {
        sink.error(l, l.toks[0], "genus given twice");
      } else {
        genus = g;
      }
    } else if (kw == "vertex" || kw == "reflect") {
      if (l.toks.size() < 3) {
        sink.error(l, l.toks.back(), "incomplete '" + kw + "' line");
        continue;
      }
      if (!expect_colon(sink, l, 2)) continue;
      if (kw == "vertex") {
        auto v = parse_vertex_id(l.toks[1].text);
        if (!v) {
          sink.error(l, l.toks[1], "bad vertex '" + l.toks[1].text + "'");
          continue;
        }
        vertex_lines.push_back({&l, *v});
      } else {
        int i = 0;
        if (!parse_int(l.toks[1].text, i) || i < 1) {
          sink.error(l, l.toks[1], "bad handle number '" + l.toks[1].text + "'");
          continue;
        }
        reflect_lines.push_back({&l, i});
      }
    } else if (kw == "edge") {
      if (l.toks.size() != 7 || l.toks[2].text != "color" || l.toks[5].text != "->") {
        sink.error(l, l.toks[0], "expected 'edge <id> color <j> <vertex>.<marker> -> <vertex>.<marker>'");
        continue;
      }
      Edge e;
      e.id = l.toks[1].text;
      if (!is_identifier(e.id)) {
        sink.error(l, l.toks[1], "bad identifier '" + e.id + "'");
        continue;
      }
      if (!parse_int(l.toks[3].text, e.color)) {
        sink.error(l, l.toks[3], "bad colour '" + l.toks[3].text + "'");
        continue;
      }
      if (!parse_point(sink, l, l.toks[4], e.tail.vertex, e.tail.marker)) continue;
      if (!parse_point(sink, l, l.toks[6], e.head.vertex, e.head.marker)) continue;
      edges.push_back({&l, std::move(e)});
    } else {
      sink.error(l, l.toks[0], "unknown keyword '" + kw + "'");
    }
  }
  if (!genus) {
    sink.error(lines.empty() ? 1 : lines.front().number, 1, "missing genus");
    return {std::nullopt, sink.diags};
  }

  HeegaardGraph g = make_empty_graph(*genus);
  std::set<VertexId> seen_vertices;
  for (const auto& [l, v] : vertex_lines) {
    if (v.handle > *genus) {
      sink.error(*l, l->toks[1], "vertex " + to_string(v) + " exceeds genus " + std::to_string(*genus));
      continue;
    }
    if (!seen_vertices.insert(v).second) {
      sink.error(*l, l->toks[1], "vertex " + to_string(v) + " given twice");
      continue;
    }
    auto& markers = g.vertex(v).markers;
    for (const auto& t : list_after(*l, 3)) {
      if (!is_identifier(t.text)) {
        sink.error(l->number, t.col, "bad identifier '" + t.text + "'");
        continue;
      }
      markers.push_back(t.text);
    }
    markers = canonical_rotation(markers);
  }
  auto has_marker = [&](VertexId v, const std::string& m) {
    const auto& ms = g.vertex(v).markers;
    return std::find(ms.begin(), ms.end(), m) != ms.end();
  };
  std::set<int> seen_reflect;
  for (const auto& [l, i] : reflect_lines) {
    if (i > *genus) {
      sink.error(*l, l->toks[1], "reflection " + std::to_string(i) + " exceeds genus");
      continue;
    }
    if (!seen_reflect.insert(i).second) {
      sink.error(*l, l->toks[1], "reflection " + std::to_string(i) + " given twice");
      continue;
    }
    auto& r = g.reflection[static_cast<std::size_t>(i - 1)];
    for (const auto& t : list_after(*l, 3)) {
      const auto arrow = t.text.find("->");
      if (arrow == std::string::npos) {
        sink.error(l->number, t.col, "expected <marker>-><marker>, got '" + t.text + "'");
        continue;
      }
      const std::string from = t.text.substr(0, arrow), to = t.text.substr(arrow + 2);
      if (!has_marker({i, Side::Plus}, from)) {
        sink.error(l->number, t.col, "unknown marker " + std::to_string(i) + "+." + from);
        continue;
      }
      if (!has_marker({i, Side::Minus}, to)) {
        sink.error(l->number, t.col + static_cast<int>(arrow) + 2, "unknown marker " + std::to_string(i) + "-." + to);
        continue;
      }
      if (!r.emplace(from, to).second) sink.error(l->number, t.col, "marker " + from + " reflected twice");
    }
  }
  std::set<std::string> ids;
  std::map<int, int> ordinal;
  for (auto& [l, e] : edges) {
    if (!ids.insert(e.id).second) {
      sink.error(*l, l->toks[1], "duplicate edge id " + e.id);
      continue;
    }
    bool ok = true;
    for (const auto& [end, tok] : {std::pair{&e.tail, &l->toks[4]}, std::pair{&e.head, &l->toks[6]}}) {
      if (end->vertex.handle > *genus) {
        sink.error(*l, *tok, "vertex " + to_string(end->vertex) + " exceeds genus");
        ok = false;
      } else if (!has_marker(end->vertex, end->marker)) {
        sink.error(*l, *tok, "unknown marker " + to_string(end->vertex) + "." + end->marker);
        ok = false;
      }
    }
    if (!ok) continue;
    e.ordinal = ++ordinal[e.color];
    g.edges.push_back(std::move(e));
  }
  if (!sink.diags.empty()) return {std::nullopt, sink.diags};
  return {std::move(g), {}};
}

std::string serialize_hg(const HeegaardGraph& graph) {
  std::ostringstream out;
  out << "genus " << graph.genus << "\n";
  for (const auto& v : graph.vertices) {
    out << "vertex " << to_string(v.id) << " :";
    if (!v.markers.empty()) out << " " << join(canonical_rotation(v.markers));
    out << "\n";
  }
  for (std::size_t i = 0; i < graph.reflection.size(); ++i) {
    out << "reflect " << i + 1 << " :";
    std::vector<std::string> pairs;
    for (const auto& [from, to] : graph.reflection[i]) pairs.push_back(from + "->" + to);
    if (!pairs.empty()) out << " " << join(pairs);
    out << "\n";
  }
  for (const auto& e : graph.edges) {
    out << "edge " << e.id << " color " << e.color << " " << to_string(e.tail.vertex) << "." << e.tail.marker << " -> "
        << to_string(e.head.vertex) << "." << e.head.marker << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- .tgl

namespace {

bool parse_event(Sink& sink, const Line& l, const Tok& t, const HeegaardGraph& graph, Event& out) {
  const std::string& s = t.text;
  if (s.size() > 1 && s[0] == 'x') {
    const auto colon = s.find(':');
    const std::string id = s.substr(1, colon == std::string::npos ? std::string::npos : colon - 1);
    const std::string role = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (!is_identifier(id) || (role != "over" && role != "under")) {
      sink.error(l, t, "expected x<crossing>:<over|under>, got '" + s + "'");
      return false;
    }
    out = CrossingEvent{id, role == "over" ? Role::Over : Role::Under};
    return true;
  }
  if (s.size() > 1 && s[0] == 't') {
    const auto c1 = s.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
    TransversalEvent ev;
    if (c2 == std::string::npos) {
      sink.error(l, t, "expected t<edge>:<slot>:<+|->, got '" + s + "'");
      return false;
    }
    ev.edge = s.substr(1, c1 - 1);
    const std::string sign = s.substr(c2 + 1);
    if (!is_identifier(ev.edge) || !parse_int(s.substr(c1 + 1, c2 - c1 - 1), ev.slot) || ev.slot < 1 ||
        (sign != "+" && sign != "-")) {
      sink.error(l, t, "expected t<edge>:<slot>:<+|->, got '" + s + "'");
      return false;
    }
    if (!graph.find_edge(ev.edge)) {
      sink.error(l, t, "unknown edge " + ev.edge);
      return false;
    }
    ev.sign = sign == "+" ? 1 : -1;
    out = ev;
    return true;
  }
  sink.error(l, t, "unexpected token '" + s + "'");
  return false;
}

bool parse_attachment(Sink& sink, const Line& l, const Tok& t, const HeegaardGraph& graph, Attachment& a) {
  if (!parse_point(sink, l, t, a.vertex, a.position)) return false;
  if (a.vertex.handle > graph.genus) {
    sink.error(l, t, "vertex " + to_string(a.vertex) + " exceeds genus " + std::to_string(graph.genus));
    return false;
  }
  return true;
}

std::string event_text(const Event& ev) {
  if (const auto* c = std::get_if<CrossingEvent>(&ev)) {
    return "x" + c->crossing + (c->role == Role::Over ? ":over" : ":under");
  }
  const auto& t = std::get<TransversalEvent>(ev);
  return "t" + t.edge + ":" + std::to_string(t.slot) + ":" + sign_text(t.sign);
}

}  // namespace

ParseResult<LinkDiagram> parse_tgl(std::string_view text, const HeegaardGraph& graph) {
  Sink sink;
  const auto lines = split_lines(text);
  LinkDiagram d;
  std::set<std::string> component_ids, crossing_ids;
  std::vector<std::pair<std::pair<int, int>, std::string>> crossing_refs;
  std::set<VertexId> ordered;

  auto read_events = [&](const Line& l, std::size_t from, std::size_t to, std::vector<Event>& events) {
    bool ok = true;
    for (std::size_t k = from; k < to; ++k) {
      Event ev;
      if (!parse_event(sink, l, l.toks[k], graph, ev)) {
        ok = false;
        continue;
      }
      if (const auto* c = std::get_if<CrossingEvent>(&ev)) crossing_refs.push_back({{l.number, l.toks[k].col}, c->crossing});
      events.push_back(std::move(ev));
    }
    return ok;
  };

  for (const auto& l : lines) {
    const std::string& kw = l.toks[0].text;
    if (kw == "strand" || kw == "circle") {
      if (l.toks.size() < 3 || !expect_colon(sink, l, 2)) {
        if (l.toks.size() < 3) sink.error(l, l.toks.back(), "incomplete '" + kw + "' line");
        continue;
      }
      const std::string& id = l.toks[1].text;
      if (!is_identifier(id)) {
        sink.error(l, l.toks[1], "bad identifier '" + id + "'");
        continue;
      }
      if (!component_ids.insert(id).second) {
        sink.error(l, l.toks[1], "duplicate component id " + id);
        continue;
      }
      if (kw == "circle") {
        Circle c{id, {}};
        if (read_events(l, 3, l.toks.size(), c.events)) d.circles.push_back(std::move(c));
        continue;
      }
      if (l.toks.size() < 5) {
        sink.error(l, l.toks.back(), "strand needs a start and an end attachment");
        continue;
      }
      Strand s;
      s.id = id;
      bool ok = parse_attachment(sink, l, l.toks[3], graph, s.start);
      ok = parse_attachment(sink, l, l.toks.back(), graph, s.end) && ok;
      ok = read_events(l, 4, l.toks.size() - 1, s.events) && ok;
      if (ok) d.strands.push_back(std::move(s));
    } else if (kw == "crossing") {
      if (l.toks.size() != 6 || l.toks[2].text != "sign" || l.toks[4].text != "order") {
        sink.error(l, l.toks[0], "expected 'crossing <id> sign <+|-> order <end>,<end>,<end>,<end>'");
        continue;
      }
      Crossing x;
      x.id = l.toks[1].text;
      if (!is_identifier(x.id)) {
        sink.error(l, l.toks[1], "bad identifier '" + x.id + "'");
        continue;
      }
      if (!crossing_ids.insert(x.id).second) {
        sink.error(l, l.toks[1], "duplicate crossing id " + x.id);
        continue;
      }
      if (l.toks[3].text != "+" && l.toks[3].text != "-") {
        sink.error(l, l.toks[3], "crossing sign must be + or -");
        continue;
      }
      x.sign = l.toks[3].text == "+" ? 1 : -1;
      const auto ends = list_after(l, 5);
      bool ok = ends.size() == 4;
      if (!ok) sink.error(l, l.toks[5], "crossing order needs exactly four ends");
      for (std::size_t k = 0; ok && k < 4; ++k) {
        auto e = parse_crossing_end(ends[k].text);
        if (!e) {
          sink.error(l.number, ends[k].col, "unknown crossing end '" + ends[k].text + "'");
          ok = false;
        } else {
          x.order[k] = *e;
        }
      }
      if (ok) d.crossings.push_back(canonicalize(LinkDiagram{{}, {}, {x}, {}, {}}).crossings.front());
    } else if (kw == "passage") {
      if (l.toks.size() != 4 || l.toks[2].text != "~") {
        sink.error(l, l.toks[0], "expected 'passage <vertex>.<pos> ~ <vertex>.<pos>'");
        continue;
      }
      Passage p;
      bool ok = parse_attachment(sink, l, l.toks[1], graph, p.end);
      ok = parse_attachment(sink, l, l.toks[3], graph, p.start) && ok;
      if (ok) d.passages.push_back(std::move(p));
    } else if (kw == "order") {
      if (l.toks.size() < 3 || !expect_colon(sink, l, 2)) {
        if (l.toks.size() < 3) sink.error(l, l.toks.back(), "incomplete 'order' line");
        continue;
      }
      auto v = parse_vertex_id(l.toks[1].text);
      if (!v || v->handle > graph.genus) {
        sink.error(l, l.toks[1], "bad vertex '" + l.toks[1].text + "'");
        continue;
      }
      if (!ordered.insert(*v).second) {
        sink.error(l, l.toks[1], "order for " + to_string(*v) + " given twice");
        continue;
      }
      VertexOrder o{*v, {}};
      for (const auto& t : list_after(l, 3)) {
        if (!is_identifier(t.text)) {
          sink.error(l.number, t.col, "bad identifier '" + t.text + "'");
          continue;
        }
        o.items.push_back(t.text);
      }
      o.items = canonical_rotation(o.items);
      d.orders.push_back(std::move(o));
    } else {
      sink.error(l, l.toks[0], "unknown keyword '" + kw + "'");
    }
  }
  for (const auto& [pos, id] : crossing_refs) {
    if (!crossing_ids.count(id)) sink.error(pos.first, pos.second, "unknown crossing " + id);
  }
  if (!sink.diags.empty()) return {std::nullopt, sink.diags};
  return {std::move(d), {}};
}

std::string serialize_tgl(const LinkDiagram& diagram) {
  std::ostringstream out;
  for (const auto& s : diagram.strands) {
    out << "strand " << s.id << " : " << to_string(s.start);
    for (const auto& ev : s.events) out << " " << event_text(ev);
    out << " " << to_string(s.end) << "\n";
  }
  for (const auto& c : diagram.circles) {
    out << "circle " << c.id << " :";
    for (const auto& ev : c.events) out << " " << event_text(ev);
    out << "\n";
  }
  for (const auto& x : canonicalize(LinkDiagram{{}, {}, diagram.crossings, {}, {}}).crossings) {
    std::vector<std::string> ends;
    for (auto e : x.order) ends.push_back(to_string(e));
    out << "crossing " << x.id << " sign " << sign_text(x.sign) << " order " << join(ends) << "\n";
  }
  for (const auto& p : diagram.passages) out << "passage " << to_string(p.end) << " ~ " << to_string(p.start) << "\n";
  for (const auto& o : diagram.orders) {
    out << "order " << to_string(o.vertex) << " :";
    if (!o.items.empty()) out << " " << join(canonical_rotation(o.items));
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- .plat

ParseResult<FlatPlat> parse_plat(std::string_view text) {
  Sink sink;
  FlatPlat plat;
  std::vector<std::pair<const Line*, std::size_t>> foot_refs;  // line, token index
  std::vector<std::pair<const Line*, std::pair<std::size_t, int>>> bridge_refs;
  const auto lines = split_lines(text);
  std::set<std::string> ids;
  for (const auto& l : lines) {
    const std::string& kw = l.toks[0].text;
    if (kw == "bridge") {
      Bridge b;
      if (l.toks.size() != 5 || l.toks[2].text != "feet" || !parse_int(l.toks[1].text, b.index) ||
          !parse_int(l.toks[3].text, b.left) || !parse_int(l.toks[4].text, b.right)) {
        sink.error(l, l.toks[0], "expected 'bridge <b> feet <p1> <p2>'");
        continue;
      }
      plat.bridges.push_back(b);
    } else if (kw == "arc") {
      if (l.toks.size() < 5 || l.toks[2].text != ":") {
        sink.error(l, l.toks[0], "expected 'arc <id> : <foot> [u<bridge>:<+|->]* <foot>'");
        continue;
      }
      PlatArc a;
      a.id = l.toks[1].text;
      if (!is_identifier(a.id)) {
        sink.error(l, l.toks[1], "bad identifier '" + a.id + "'");
        continue;
      }
      if (!ids.insert(a.id).second) {
        sink.error(l, l.toks[1], "duplicate arc id " + a.id);
        continue;
      }
      bool ok = true;
      if (!parse_int(l.toks[3].text, a.from)) {
        sink.error(l, l.toks[3], "bad foot '" + l.toks[3].text + "'");
        ok = false;
      }
      if (!parse_int(l.toks.back().text, a.to)) {
        sink.error(l, l.toks.back(), "bad foot '" + l.toks.back().text + "'");
        ok = false;
      }
      for (std::size_t k = 4; k + 1 < l.toks.size(); ++k) {
        const std::string& s = l.toks[k].text;
        const auto colon = s.find(':');
        UnderPass p;
        bool good = s.size() > 1 && s[0] == 'u' && colon != std::string::npos;
        if (good) {
          std::string where = s.substr(1, colon - 1);
          const std::string sign = s.substr(colon + 1);
          if (const auto dot = where.find('.'); dot != std::string::npos) {
            good = parse_int(where.substr(dot + 1), p.slot) && p.slot >= 1;
            where = where.substr(0, dot);
          }
          good = good && parse_int(where, p.bridge) && (sign == "+" || sign == "-");
          p.sign = sign == "+" ? 1 : -1;
        }
        if (!good) {
          sink.error(l, l.toks[k], "expected u<bridge>[.<slot>]:<+|->, got '" + s + "'");
          ok = false;
          continue;
        }
        bridge_refs.push_back({&l, {k, p.bridge}});
        a.passes.push_back(p);
      }
      if (!ok) continue;
      foot_refs.push_back({&l, 3});
      foot_refs.push_back({&l, l.toks.size() - 1});
      plat.arcs.push_back(std::move(a));
    } else if (kw == "framing") {
      Framing f;
      if (l.toks.size() != 3 || !parse_int(l.toks[1].text, f.component) || !parse_int(l.toks[2].text, f.value)) {
        sink.error(l, l.toks[0], "expected 'framing <component> <int>'");
        continue;
      }
      plat.framings.push_back(f);
    } else {
      sink.error(l, l.toks[0], "unknown keyword '" + kw + "'");
    }
  }
  for (const auto& [l, k] : foot_refs) {
    int pos = 0;
    parse_int(l->toks[k].text, pos);
    if (!plat.bridge_at_foot(pos)) sink.error(*l, l->toks[k], "no bridge has a foot at " + l->toks[k].text);
  }
  for (const auto& [l, ref] : bridge_refs) {
    if (!plat.find_bridge(ref.second)) sink.error(*l, l->toks[ref.first], "unknown bridge " + std::to_string(ref.second));
  }
  if (lines.empty()) sink.error(1, 1, "empty plat");
  if (!sink.diags.empty()) return {std::nullopt, sink.diags};
  return {std::move(plat), {}};
}

std::string serialize_plat(const FlatPlat& plat) {
  std::ostringstream out;
  for (const auto& b : plat.bridges) out << "bridge " << b.index << " feet " << b.left << " " << b.right << "\n";
  for (const auto& a : plat.arcs) {
    out << "arc " << a.id << " : " << a.from;
    for (const auto& p : a.passes) {
      out << " u" << p.bridge;
      if (p.slot > 0) out << "." << p.slot;
      out << ":" << sign_text(p.sign);
    }
    out << " " << a.to << "\n";
  }
  for (const auto& f : plat.framings) out << "framing " << f.component << " " << (f.value > 0 ? "+" : "") << f.value << "\n";
  return out.str();
}

// ---------------------------------------------------------------- .surf

std::string serialize_surf(const SpanningSurface& s) {
  std::ostringstream out;
  out << "h0 " << s.h0 << "\n"
      << "h1_pairing " << s.h1_pairing << "\n"
      << "h1_twist " << s.h1_twist << "\n"
      << "h1 " << s.h1() << "\n"
      << "h2 " << s.h2 << "\n"
      << "chi " << s.chi << "\n"
      << "mu " << s.mu << "\n"
      << "genus " << s.genus << "\n"
      << "components " << s.surface_components << "\n";
  for (std::size_t k = 0; k < s.circles.size(); ++k) out << "circle " << k + 1 << " : " << join(s.circles[k]) << "\n";
  for (const auto& b : s.bands) {
    if (b.kind == BandKind::Pairing) {
      out << "band pairing " << b.label;
    } else {
      out << "band twist " << b.label << " sign " << sign_text(b.sign);
    }
    out << " joins " << b.circle_a + 1 << " " << b.circle_b + 1 << "\n";
  }
  for (const auto& c : s.caps) out << "cap " << c.component << " on " << c.circle + 1 << "\n";
  return out.str();
}

ParseResult<SpanningSurface> parse_surf(std::string_view text) {
  Sink sink;
  SpanningSurface s;
  std::optional<int> h1;
  std::set<std::string> seen;
  const std::map<std::string, int SpanningSurface::*> counts{
      {"h0", &SpanningSurface::h0},         {"h1_pairing", &SpanningSurface::h1_pairing},
      {"h1_twist", &SpanningSurface::h1_twist}, {"h2", &SpanningSurface::h2},
      {"chi", &SpanningSurface::chi},       {"mu", &SpanningSurface::mu},
      {"genus", &SpanningSurface::genus},   {"components", &SpanningSurface::surface_components}};
  auto circle_index = [&](const Line& l, const Tok& t, std::size_t& out) {
    int v = 0;
    if (!parse_int(t.text, v) || v < 1) {
      sink.error(l, t, "bad circle number '" + t.text + "'");
      return false;
    }
    out = static_cast<std::size_t>(v - 1);
    return true;
  };
  for (const auto& l : split_lines(text)) {
    const std::string& kw = l.toks[0].text;
    if (auto c = counts.find(kw); c != counts.end() || kw == "h1") {
      int v = 0;
      if (l.toks.size() != 2 || !parse_int(l.toks[1].text, v)) {
        sink.error(l, l.toks[0], "expected '" + kw + " <int>'");
      } else if (!seen.insert(kw).second) {
        sink.error(l, l.toks[0], kw + " given twice");
      } else if (kw == "h1") {
        h1 = v;
      } else {
        s.*(c->second) = v;
      }
    } else if (kw == "circle") {
      std::size_t k = 0;
      if (l.toks.size() < 4 || l.toks[2].text != ":" || !circle_index(l, l.toks[1], k) || k != s.circles.size()) {
        sink.error(l, l.toks[0], "expected 'circle <n> : <segment>,...' numbered consecutively");
        continue;
      }
      std::vector<std::string> names;
      for (const auto& t : list_after(l, 3)) names.push_back(t.text);
      s.circles.push_back(std::move(names));
    } else if (kw == "band") {
      Band b;
      std::size_t at = 3;
      if (l.toks.size() >= 2 && l.toks[1].text == "twist") {
        if (l.toks.size() != 8 || l.toks[3].text != "sign" || (l.toks[4].text != "+" && l.toks[4].text != "-")) {
          sink.error(l, l.toks[0], "expected 'band twist <crossing> sign <+|-> joins <a> <b>'");
          continue;
        }
        b.kind = BandKind::Twist;
        b.sign = l.toks[4].text == "+" ? 1 : -1;
        at = 5;
      } else if (l.toks.size() != 6 || l.toks[1].text != "pairing") {
        sink.error(l, l.toks[0], "expected 'band pairing <handle> joins <a> <b>'");
        continue;
      }
      b.label = l.toks[2].text;
      if (l.toks[at].text != "joins" || !circle_index(l, l.toks[at + 1], b.circle_a) ||
          !circle_index(l, l.toks[at + 2], b.circle_b)) {
        sink.error(l, l.toks[0], "band needs 'joins <a> <b>'");
        continue;
      }
      s.bands.push_back(std::move(b));
    } else if (kw == "cap") {
      Cap c;
      if (l.toks.size() != 4 || l.toks[2].text != "on" || !circle_index(l, l.toks[3], c.circle)) {
        sink.error(l, l.toks[0], "expected 'cap <component> on <circle>'");
        continue;
      }
      c.component = l.toks[1].text;
      s.caps.push_back(std::move(c));
    } else {
      sink.error(l, l.toks[0], "unknown keyword '" + kw + "'");
    }
  }
  for (const auto* key : {"h0", "h1_pairing", "h1_twist", "h2", "chi", "mu", "genus"}) {
    if (!seen.count(key)) sink.error(1, 1, std::string("missing ") + key);
  }
  if (h1 && *h1 != s.h1()) sink.error(1, 1, "h1 disagrees with h1_pairing + h1_twist");
  for (const auto& b : s.bands) {
    if (b.circle_a >= s.circles.size() || b.circle_b >= s.circles.size()) {
      sink.error(1, 1, "band " + b.label + " joins a circle that is not listed");
    }
  }
  for (const auto& c : s.caps) {
    if (c.circle >= s.circles.size()) sink.error(1, 1, "cap " + c.component + " sits on a circle that is not listed");
  }
  if (!sink.diags.empty()) return {std::nullopt, sink.diags};
  return {std::move(s), {}};
}

}  // namespace heegaard
