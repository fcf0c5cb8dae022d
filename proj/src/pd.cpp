#include "plumb/pd.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "plumb/errors.hpp"
#include "plumb/seifert_graph.hpp"

namespace plumb {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw InputError("parse_error", msg); }

// Darts are (crossing, slot) pairs packed as 4 * crossing + slot.
int through(int dart) { return (dart & ~3) | ((dart + 2) & 3); }
int rotate_ccw(int dart) { return (dart & ~3) | ((dart + 1) & 3); }
int slot_of(int dart) { return dart & 3; }
int crossing_of(int dart) { return dart >> 2; }

// mate[d] is the other dart carrying the same arc label.
std::vector<int> dart_mates(const std::vector<std::array<int, 4>>& crossings) {
  std::unordered_map<int, int> first;
  std::vector<int> mate(crossings.size() * 4, -1);
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    for (int slot = 0; slot < 4; ++slot) {
      const int dart = static_cast<int>(k) * 4 + slot;
      const int label = crossings[k][static_cast<std::size_t>(slot)];
      const auto [it, fresh] = first.emplace(label, dart);
      if (!fresh) {
        mate[static_cast<std::size_t>(dart)] = it->second;
        mate[static_cast<std::size_t>(it->second)] = dart;
      }
    }
  }
  return mate;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

PDCode parse_pd(std::string_view text) {
  PDCode pd;
  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto expect = [&](char ch) {
    if (pos >= text.size() || text[pos] != ch)
      parse_fail(std::string("expected '") + ch + "' at offset " + std::to_string(pos));
    ++pos;
  };

  skip_space();
  if (pos == text.size()) parse_fail("empty diagram; use U for the crossingless unknot");
  while (pos < text.size()) {
    if (text[pos] == 'U') {
      ++pos;
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
        parse_fail("unexpected character after U");
      if (pd.unknot || !pd.crossings.empty()) parse_fail("U must be the only token");
      pd.unknot = true;
    } else {
      if (pd.unknot) parse_fail("U must be the only token");
      expect('X');
      expect('[');
      PDCrossing crossing;
      for (int slot = 0; slot < 4; ++slot) {
        if (slot > 0) expect(',');
        std::size_t end = pos;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        int label = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, label);
        if (end == pos || ec != std::errc{} || ptr != text.data() + end)
          parse_fail("expected a positive arc label at offset " + std::to_string(pos));
        if (label < 1) parse_fail("arc labels must be positive");
        crossing.arcs[static_cast<std::size_t>(slot)] = label;
        pos = end;
      }
      expect(']');
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
        parse_fail("crossings must be separated by whitespace");
      pd.crossings.push_back(crossing);
    }
    skip_space();
  }

  std::map<int, int> uses;
  for (const auto& x : pd.crossings)
    for (const int label : x.arcs) ++uses[label];
  for (const auto& [label, count] : uses)
    if (count != 2)
      parse_fail("arc " + std::to_string(label) + " occurs " + std::to_string(count) +
                 " times; every arc must occur exactly twice");
  return pd;
}

OrientedDiagram orient_diagram(const PDCode& pd) {
  OrientedDiagram out;
  if (pd.unknot) {
    out.components = 1;
    out.walks.emplace_back();
    return out;
  }
  const std::size_t c = pd.crossings.size();
  if (c == 0) throw InputError("parse_error", "diagram has no crossings; use U for the unknot");

  std::vector<std::array<int, 4>> arcs;
  arcs.reserve(c);
  for (const auto& x : pd.crossings) arcs.push_back(x.arcs);
  const auto mate = dart_mates(arcs);
  const int darts = static_cast<int>(c * 4);
  const auto label_of = [&](int dart) {
    return arcs[static_cast<std::size_t>(crossing_of(dart))][static_cast<std::size_t>(slot_of(dart))];
  };

  {
    std::vector<int> parent(c);
    std::iota(parent.begin(), parent.end(), 0);
    for (int d = 0; d < darts; ++d)
      parent[static_cast<std::size_t>(find_root(parent, crossing_of(d)))] =
          find_root(parent, crossing_of(mate[static_cast<std::size_t>(d)]));
    std::set<int> roots;
    for (std::size_t k = 0; k < c; ++k) roots.insert(find_root(parent, static_cast<int>(k)));
    if (roots.size() > 1)
      throw InputError("split_link", "split diagram: handle each connected piece separately");
  }

  {
    std::vector<char> seen(static_cast<std::size_t>(darts), 0);
    std::size_t faces = 0;
    for (int d = 0; d < darts; ++d) {
      if (seen[static_cast<std::size_t>(d)]) continue;
      ++faces;
      for (int x = d; !seen[static_cast<std::size_t>(x)]; x = rotate_ccw(mate[static_cast<std::size_t>(x)]))
        seen[static_cast<std::size_t>(x)] = 1;
    }
    if (faces != c + 2)
      throw InputError("non_planar", "diagram is not planar: " + std::to_string(faces) +
                                         " faces for " + std::to_string(c) + " crossings (expected " +
                                         std::to_string(c + 2) + ")");
  }

  std::vector<char> incoming(static_cast<std::size_t>(darts), 0);
  std::vector<char> traced(static_cast<std::size_t>(darts), 0);
  for (int start = 0; start < darts; ++start) {
    if (traced[static_cast<std::size_t>(start)]) continue;

    // Trace treating `start` as incoming; the opposite direction uses the
    // out-darts of this trace as its in-darts.
    std::vector<int> ins;
    for (int d = start;;) {
      ins.push_back(d);
      const int out_dart = through(d);
      traced[static_cast<std::size_t>(d)] = traced[static_cast<std::size_t>(out_dart)] = 1;
      d = mate[static_cast<std::size_t>(out_dart)];
      if (d == start) break;
    }

    int forward_votes = 0;
    int backward_votes = 0;
    for (const int d : ins) {
      if (slot_of(d) == 0) ++forward_votes;
      if (slot_of(d) == 2) ++backward_votes;
    }
    if (forward_votes > 0 && backward_votes > 0)
      throw InputError("inconsistent_orientation",
                       "under-strand directions disagree along the component through arc " +
                           std::to_string(label_of(start)));

    bool forward = forward_votes > 0;
    if (forward_votes == 0 && backward_votes == 0) {
      // Seed: lowest label, directed into its first listed occurrence.
      int best_label = label_of(ins.front());
      for (const int d : ins) best_label = std::min(best_label, label_of(d));
      int first = -1;
      for (const int d : ins) {
        if (label_of(d) == best_label) first = first < 0 ? d : std::min(first, d);
        const int o = through(d);
        if (label_of(o) == best_label) first = first < 0 ? o : std::min(first, o);
      }
      forward = std::find(ins.begin(), ins.end(), first) != ins.end();
    }

    std::vector<int> walk_ins;
    if (forward) {
      walk_ins = ins;
    } else {
      for (auto it = ins.rbegin(); it != ins.rend(); ++it) walk_ins.push_back(through(*it));
    }
    const int component = static_cast<int>(out.walks.size());
    std::vector<PassageVisit> walk;
    for (const int d : walk_ins) {
      incoming[static_cast<std::size_t>(d)] = 1;
      walk.push_back({crossing_of(d), slot_of(d) % 2 == 0 ? Passage::under : Passage::over});
      out.arc_component[label_of(d)] = component;
      out.arc_component[label_of(through(d))] = component;
    }
    out.walks.push_back(std::move(walk));
  }
  out.components = static_cast<int>(out.walks.size());

  out.crossings.reserve(c);
  for (std::size_t k = 0; k < c; ++k) {
    OrientedCrossing x;
    x.arcs = arcs[k];
    for (int slot = 0; slot < 4; ++slot)
      x.incoming[static_cast<std::size_t>(slot)] = incoming[k * 4 + static_cast<std::size_t>(slot)] != 0;
    x.over_in_slot = x.incoming[1] ? 1 : 3;
    // Under-strand points up (slot 0 -> 2); an over-strand entering from
    // slot 3 runs left to right over it, which is the right-handed crossing.
    x.sign = x.over_in_slot == 3 ? 1 : -1;
    out.crossings.push_back(x);
  }
  return out;
}

SeifertGraph seifert_circles(const OrientedDiagram& diagram) {
  Provenance prov;
  prov.kind = SourceKind::pd;
  const std::size_t c = diagram.crossings.size();
  prov.descriptor = "pd: " + std::to_string(c) + " crossings";
  if (c == 0) {
    prov.vertex_link_components = {{0}};
    return SeifertGraph(1, {}, diagram.components, std::move(prov));
  }

  std::vector<std::array<int, 4>> arcs;
  arcs.reserve(c);
  for (const auto& x : diagram.crossings) arcs.push_back(x.arcs);
  const auto mate = dart_mates(arcs);

  // Oriented smoothing: under-in joins over-out, over-in joins under-out.
  const auto smooth = [&](int dart) {
    const auto& x = diagram.crossings[static_cast<std::size_t>(crossing_of(dart))];
    const int base = dart & ~3;
    if (slot_of(dart) == 0) return base + (x.over_in_slot + 2) % 4;
    return base + 2;
  };

  std::vector<int> circle(c * 4, 0);
  int circles = 0;
  std::vector<std::set<int>> touching;
  for (std::size_t k = 0; k < c; ++k) {
    const auto& x = diagram.crossings[k];
    for (const int slot : {0, x.over_in_slot}) {
      const int start = static_cast<int>(k) * 4 + slot;
      if (circle[static_cast<std::size_t>(start)] != 0) continue;
      ++circles;
      touching.emplace_back();
      for (int d = start; circle[static_cast<std::size_t>(d)] == 0;) {
        circle[static_cast<std::size_t>(d)] = circles;
        const int out_dart = smooth(d);
        const int label = arcs[static_cast<std::size_t>(crossing_of(out_dart))][static_cast<std::size_t>(slot_of(out_dart))];
        touching.back().insert(diagram.arc_component.at(label));
        d = mate[static_cast<std::size_t>(out_dart)];
      }
    }
  }

  std::vector<SignedEdge> edges;
  edges.reserve(c);
  for (std::size_t k = 0; k < c; ++k) {
    const auto& x = diagram.crossings[k];
    const int a = circle[k * 4];
    const int b = circle[k * 4 + static_cast<std::size_t>(x.over_in_slot)];
    if (a == b)
      throw InputError("non_planar", "smoothing crossing " + std::to_string(k + 1) +
                                         " joins a Seifert circle to itself");
    edges.push_back({a, b, x.sign, static_cast<int>(k)});
  }
  for (const auto& set : touching) prov.vertex_link_components.emplace_back(set.begin(), set.end());
  return SeifertGraph(circles, std::move(edges), diagram.components, std::move(prov));
}

bool is_alternating_diagram(const OrientedDiagram& diagram) {
  for (const auto& walk : diagram.walks) {
    for (std::size_t i = 0; i < walk.size(); ++i)
      if (walk[i].passage == walk[(i + 1) % walk.size()].passage) return false;
  }
  return true;
}

}  // namespace plumb
