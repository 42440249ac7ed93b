#include "heegaard/plat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "heegaard/errors.hpp"
#include "heegaard/planarity.hpp"

namespace heegaard {

const Bridge* FlatPlat::find_bridge(int index) const {
  for (const auto& b : bridges) {
    if (b.index == index) return &b;
  }
  return nullptr;
}

const Bridge* FlatPlat::bridge_at_foot(int position) const {
  for (const auto& b : bridges) {
    if (b.left == position || b.right == position) return &b;
  }
  return nullptr;
}

namespace {

int other_foot(const Bridge& b, int foot) { return foot == b.left ? b.right : b.left; }

std::map<int, std::size_t> arc_at_foot(const FlatPlat& plat) {
  std::map<int, std::size_t> out;
  for (std::size_t k = 0; k < plat.arcs.size(); ++k) {
    out.emplace(plat.arcs[k].from, k);
    out.emplace(plat.arcs[k].to, k);
  }
  return out;
}

// Component index per arc and per bridge (-1 when not on a closed component).
struct Membership {
  std::vector<int> of_arc;
  std::map<int, int> of_bridge;
  std::map<int, bool> bridge_east;
  std::vector<bool> arc_forward;
};

Membership membership(const FlatPlat& plat, const std::vector<PlatComponent>& comps) {
  Membership m{std::vector<int>(plat.arcs.size(), -1), {}, {}, std::vector<bool>(plat.arcs.size(), true)};
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t k = 0; k < comps[c].arcs.size(); ++k) {
      m.of_arc[comps[c].arcs[k]] = static_cast<int>(c);
      m.arc_forward[comps[c].arcs[k]] = comps[c].arc_forward[k];
      m.of_bridge[comps[c].bridges[k]] = static_cast<int>(c);
      m.bridge_east[comps[c].bridges[k]] = comps[c].bridge_east[k];
    }
  }
  return m;
}

// Does the arc, read in file order, go from south to north at this pass?
bool north_in_file_order(const Membership& m, std::size_t arc, const UnderPass& p) {
  auto east = m.bridge_east.find(p.bridge);
  const int e = east == m.bridge_east.end() || east->second ? 1 : -1;
  const int forward = m.arc_forward[arc] ? 1 : -1;
  return p.sign * e * forward > 0;
}

}  // namespace

std::vector<PlatComponent> link_components(const FlatPlat& plat) {
  const auto at_foot = arc_at_foot(plat);
  std::vector<bool> seen(plat.arcs.size(), false);
  std::vector<PlatComponent> out;
  for (std::size_t first = 0; first < plat.arcs.size(); ++first) {
    if (seen[first]) continue;
    PlatComponent comp;
    std::size_t arc = first;
    int foot = plat.arcs[first].from;
    bool closed = false;
    std::set<std::size_t> local;
    while (local.insert(arc).second) {
      const PlatArc& a = plat.arcs[arc];
      const bool forward = a.from == foot;
      const int exit = forward ? a.to : a.from;
      const Bridge* b = plat.bridge_at_foot(exit);
      if (!b) break;
      comp.arcs.push_back(arc);
      comp.arc_forward.push_back(forward);
      comp.bridges.push_back(b->index);
      comp.bridge_east.push_back(exit == b->left);
      foot = other_foot(*b, exit);
      auto next = at_foot.find(foot);
      if (next == at_foot.end()) break;
      if (next->second == first) {
        closed = plat.arcs[first].from == foot;
        break;
      }
      arc = next->second;
    }
    for (auto k : local) seen[k] = true;
    if (closed) out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<int>> passage_slots(const FlatPlat& plat) {
  std::vector<std::vector<int>> out(plat.arcs.size());
  std::map<int, int> next_slot;
  for (std::size_t k = 0; k < plat.arcs.size(); ++k) {
    for (const auto& p : plat.arcs[k].passes) out[k].push_back(p.slot > 0 ? p.slot : ++next_slot[p.bridge]);
  }
  return out;
}

ValidationReport validate_plat(const FlatPlat& plat) {
  ValidationReport report;
  if (plat.bridges.empty()) report.add("plat has no bridges");

  std::set<int> indices;
  std::map<int, int> foot_owner;
  for (const auto& b : plat.bridges) {
    if (!indices.insert(b.index).second) report.add("duplicate bridge " + std::to_string(b.index));
    if (b.left >= b.right) report.add("bridge " + std::to_string(b.index) + " feet must be increasing positions");
    for (int f : {b.left, b.right}) {
      if (!foot_owner.emplace(f, b.index).second) report.add("foot position " + std::to_string(f) + " is shared by two bridges");
    }
  }
  for (int k = 1; k <= static_cast<int>(plat.bridges.size()); ++k) {
    if (!indices.count(k)) report.add("bridges must be numbered 1.." + std::to_string(plat.bridges.size()));
  }
  auto sorted = plat.bridges;
  std::sort(sorted.begin(), sorted.end(), [](const Bridge& a, const Bridge& b) { return a.left < b.left; });
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k].left <= sorted[k - 1].right) {
      report.add("bridges " + std::to_string(sorted[k - 1].index) + " and " + std::to_string(sorted[k].index) + " overlap");
    }
  }
  if (!report.ok()) return report;

  std::set<std::string> ids;
  std::map<int, int> foot_use;
  std::map<int, std::vector<int>> given_slots;
  std::map<int, int> passes_per_bridge, unslotted;
  for (const auto& a : plat.arcs) {
    if (!ids.insert(a.id).second) report.add("duplicate arc id " + a.id);
    for (int f : {a.from, a.to}) {
      if (!foot_owner.count(f)) report.add("arc " + a.id + " ends at " + std::to_string(f) + ", which is not a foot");
      ++foot_use[f];
    }
    if (a.from == a.to) report.add("arc " + a.id + " starts and ends at the same foot");
    for (const auto& p : a.passes) {
      if (!plat.find_bridge(p.bridge)) {
        report.add("arc " + a.id + " passes under unknown bridge " + std::to_string(p.bridge));
        continue;
      }
      if (p.sign != 1 && p.sign != -1) report.add("arc " + a.id + " has an under-pass sign other than +-1");
      ++passes_per_bridge[p.bridge];
      if (p.slot > 0) {
        given_slots[p.bridge].push_back(p.slot);
      } else {
        ++unslotted[p.bridge];
      }
    }
  }
  for (const auto& [foot, owner] : foot_owner) {
    const int n = foot_use[foot];
    if (n != 1) report.add("foot " + std::to_string(foot) + " of bridge " + std::to_string(owner) + " is used by " + std::to_string(n) + " arc ends");
  }
  for (auto& [bridge, slots] : given_slots) {
    if (unslotted[bridge] > 0) report.add("bridge " + std::to_string(bridge) + " mixes slotted and unslotted under-passes");
    std::sort(slots.begin(), slots.end());
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (slots[k] != static_cast<int>(k) + 1) {
        report.add("bridge " + std::to_string(bridge) + " under-pass slots are not 1.." + std::to_string(slots.size()));
        break;
      }
    }
  }
  if (!report.ok()) return report;

  const auto comps = link_components(plat);
  std::size_t covered = 0;
  for (const auto& c : comps) covered += c.arcs.size();
  if (covered != plat.arcs.size()) report.add("arcs and bridges do not close up into components");

  std::set<int> framed;
  for (const auto& f : plat.framings) {
    if (f.component < 1 || f.component > static_cast<int>(comps.size())) {
      report.add("framing for missing component " + std::to_string(f.component));
    } else if (!framed.insert(f.component).second) {
      report.add("duplicate framing for component " + std::to_string(f.component));
    } else if (f.value != 1 && f.value != -1) {
      report.warn("component " + std::to_string(f.component) + " framing " + std::to_string(f.value) +
                  " does not give an integral homology sphere");
    }
  }
  for (int c = 1; c <= static_cast<int>(comps.size()); ++c) {
    if (!framed.count(c)) report.warn("component " + std::to_string(c) + " has no framing");
  }
  if (!report.ok()) return report;

  // Planarity: contract each bridge's shadow to a node whose rotation is
  // left foot, bottom slots left to right, right foot, top slots right to left.
  const auto m = membership(plat, comps);
  const auto slots = passage_slots(plat);
  RotationSystem rs;
  std::map<int, int> node;
  for (const auto& b : plat.bridges) {
    std::vector<std::string> rot{"L"};
    const int k = passes_per_bridge[b.index];
    for (int s = 1; s <= k; ++s) rot.push_back("b" + std::to_string(s));
    rot.push_back("R");
    for (int s = k; s >= 1; --s) rot.push_back("t" + std::to_string(s));
    node[b.index] = rs.add_node("bridge " + std::to_string(b.index), rot);
  }
  auto foot_slot = [&](int foot) {
    const Bridge* b = plat.bridge_at_foot(foot);
    return std::pair{node[b->index], std::string(foot == b->left ? "L" : "R")};
  };
  for (std::size_t k = 0; k < plat.arcs.size(); ++k) {
    const auto& a = plat.arcs[k];
    auto prev = foot_slot(a.from);
    for (std::size_t e = 0; e < a.passes.size(); ++e) {
      const auto& p = a.passes[e];
      const std::string s = std::to_string(slots[k][e]);
      const bool north = north_in_file_order(m, k, p);
      rs.connect(prev.first, prev.second, node[p.bridge], (north ? "b" : "t") + s);
      prev = {node[p.bridge], (north ? "t" : "b") + s};
    }
    const auto last = foot_slot(a.to);
    rs.connect(prev.first, prev.second, last.first, last.second);
  }
  const auto summary = rs.summarize();
  for (const auto& p : summary.problems) report.add("arcs are not realisable as disjoint planar arcs: " + p);
  return report;
}

int writhe(const FlatPlat& plat, std::size_t component) {
  const auto comps = link_components(plat);
  const auto m = membership(plat, comps);
  int w = 0;
  for (std::size_t k = 0; k < plat.arcs.size(); ++k) {
    if (m.of_arc[k] != static_cast<int>(component)) continue;
    for (const auto& p : plat.arcs[k].passes) {
      auto b = m.of_bridge.find(p.bridge);
      if (b != m.of_bridge.end() && b->second == static_cast<int>(component)) w += p.sign;
    }
  }
  return w;
}

std::vector<CharacteristicCurve> select_characteristic_curves(const FlatPlat& plat) {
  const auto comps = link_components(plat);
  std::vector<CharacteristicCurve> out;
  std::map<int, int> parent;
  for (const auto& b : plat.bridges) parent[b.index] = b.index;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < comps.size(); ++c) out.push_back({CharacteristicCurve::Kind::Component, c});
  const std::size_t n = plat.bridges.size();
  if (comps.size() > n) throw InsufficientCurves("more components than bridges");
  const std::size_t needed = n - comps.size();
  std::size_t chosen = 0;
  for (std::size_t k = 0; k < plat.arcs.size() && chosen < needed; ++k) {
    const Bridge* a = plat.bridge_at_foot(plat.arcs[k].from);
    const Bridge* b = plat.bridge_at_foot(plat.arcs[k].to);
    if (!a || !b || a->index == b->index) continue;
    // Two neighbourhood curves closing a cycle of bridges are dependent.
    if (find(a->index) == find(b->index)) continue;
    parent[find(a->index)] = find(b->index);
    out.push_back({CharacteristicCurve::Kind::Neighborhood, k});
    ++chosen;
  }
  if (chosen < needed) {
    throw InsufficientCurves("need " + std::to_string(needed) + " neighbourhood curves of arcs joining distinct bridges, found " +
                             std::to_string(chosen));
  }
  return out;
}

namespace {

// One crossing of a curve with the shadow of a bridge: the point `key`
// counts along the bridge from its left foot (feet at 1 and 3k+2, pass s at
// 3s with its two flanks at 3s -+ 1).
struct CoreCrossing {
  int bridge;
  int key;
  bool north;
};

}  // namespace

CompiledPlat compile_heegaard_graph(const FlatPlat& plat, const CompileOptions& options) {
  const auto report = validate_plat(plat);
  if (!report.ok()) throw CompileError(report.errors.front());
  CompiledPlat out;
  out.warnings = report.warnings;

  const auto comps = link_components(plat);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const int w = writhe(plat, c);
    out.writhes.push_back(w);
    const Framing* f = nullptr;
    for (const auto& fr : plat.framings) {
      if (fr.component == static_cast<int>(c) + 1) f = &fr;
    }
    if (!f || f->value != w) {
      const std::string msg = "component " + std::to_string(c + 1) + " has writhe " + std::to_string(w) +
                              (f ? " but framing " + std::to_string(f->value) : " and no framing");
      if (!options.allow_framing_mismatch) throw FramingMismatch(msg);
      out.warnings.push_back(msg);
    }
  }
  out.curves = select_characteristic_curves(plat);

  const auto m = membership(plat, comps);
  const auto slots = passage_slots(plat);
  std::map<int, int> passes_per_bridge;
  for (const auto& a : plat.arcs) {
    for (const auto& p : a.passes) ++passes_per_bridge[p.bridge];
  }
  auto foot_crossing = [&](int foot) {
    const Bridge* b = plat.bridge_at_foot(foot);
    // The curve turns counterclockwise around the foot.
    if (foot == b->left) return CoreCrossing{b->index, 1, true};
    return CoreCrossing{b->index, 3 * passes_per_bridge[b->index] + 2, false};
  };

  std::vector<std::vector<CoreCrossing>> crossings;
  for (const auto& curve : out.curves) {
    std::vector<CoreCrossing> cs;
    if (curve.kind == CharacteristicCurve::Kind::Component) {
      const auto& comp = comps[curve.index];
      for (std::size_t k = 0; k < comp.arcs.size(); ++k) {
        const auto arc = comp.arcs[k];
        const auto& passes = plat.arcs[arc].passes;
        std::vector<std::size_t> order(passes.size());
        std::iota(order.begin(), order.end(), 0);
        if (!comp.arc_forward[k]) std::reverse(order.begin(), order.end());
        for (auto e : order) {
          const bool north = north_in_file_order(m, arc, passes[e]) == comp.arc_forward[k];
          cs.push_back({passes[e].bridge, 3 * slots[arc][e], north});
        }
      }
    } else {
      // Counterclockwise boundary of a thin strip: right side forwards,
      // round the far foot, left side backwards, round the near foot.
      const auto arc = curve.index;
      const auto& a = plat.arcs[arc];
      for (std::size_t e = 0; e < a.passes.size(); ++e) {
        const bool north = north_in_file_order(m, arc, a.passes[e]);
        cs.push_back({a.passes[e].bridge, 3 * slots[arc][e] + (north ? 1 : -1), north});
      }
      cs.push_back(foot_crossing(a.to));
      for (std::size_t e = a.passes.size(); e-- > 0;) {
        const bool north = north_in_file_order(m, arc, a.passes[e]);
        cs.push_back({a.passes[e].bridge, 3 * slots[arc][e] + (north ? -1 : 1), !north});
      }
      cs.push_back(foot_crossing(a.from));
    }
    if (cs.empty()) {
      throw CompileError("characteristic curve " + std::to_string(crossings.size() + 1) + " never passes under a bridge");
    }
    crossings.push_back(std::move(cs));
  }

  const int g = static_cast<int>(plat.bridges.size());
  HeegaardGraph graph = make_empty_graph(g);
  std::map<int, std::set<int>> keys;
  for (const auto& cs : crossings) {
    for (const auto& c : cs) {
      if (!keys[c.bridge].insert(c.key).second) throw CompileError("two curves meet bridge " + std::to_string(c.bridge) + " at one point");
    }
  }
  auto marker = [](int key) { return "p" + std::to_string(key); };
  for (int b = 1; b <= g; ++b) {
    auto& plus = graph.vertex({b, Side::Plus}).markers;   // south side, left to right
    auto& minus = graph.vertex({b, Side::Minus}).markers;  // north side
    for (int key : keys[b]) {
      plus.push_back(marker(key));
      graph.reflection[static_cast<std::size_t>(b - 1)][marker(key)] = marker(key);
    }
    minus.assign(plus.rbegin(), plus.rend());
  }
  for (std::size_t j = 0; j < crossings.size(); ++j) {
    const auto& cs = crossings[j];
    for (std::size_t l = 0; l < cs.size(); ++l) {
      const auto& from = cs[l];
      const auto& to = cs[(l + 1) % cs.size()];
      Edge e;
      e.id = "e" + std::to_string(j + 1) + "_" + std::to_string(l + 1);
      e.color = static_cast<int>(j) + 1;
      e.ordinal = static_cast<int>(l) + 1;
      e.tail = {{from.bridge, from.north ? Side::Minus : Side::Plus}, marker(from.key)};
      e.head = {{to.bridge, to.north ? Side::Plus : Side::Minus}, marker(to.key)};
      graph.edges.push_back(std::move(e));
    }
  }
  if (const auto r = validate_graph(graph); !r.ok()) throw CompileError("compiled graph is invalid: " + r.errors.front());
  out.graph = std::move(graph);
  return out;
}

}  // namespace heegaard
