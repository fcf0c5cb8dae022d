#include "plumb/seifert_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "plumb/errors.hpp"

namespace plumb {

const char* to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::braid: return "braid";
    case SourceKind::pd: return "pd";
    case SourceKind::raw: return "raw";
  }
  return "raw";
}

SeifertGraph::SeifertGraph(int circles, std::vector<SignedEdge> edges, int boundary_components,
                           Provenance provenance)
    : circles_(circles),
      edges_(std::move(edges)),
      boundary_components_(boundary_components),
      provenance_(std::move(provenance)) {
  adjacency_.resize(static_cast<std::size_t>(std::max(circles_, 0)) + 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    by_id_.emplace(e.id, i);
    // Out-of-range endpoints are left for validate() to report.
    if (e.u >= 1 && e.u <= circles_ && e.v >= 1 && e.v <= circles_) {
      adjacency_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.id);
      if (e.u != e.v) adjacency_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.id);
    }
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

SeifertGraph SeifertGraph::from_triples(int circles, const std::vector<Triple>& edges,
                                        int boundary_components, Provenance provenance) {
  std::vector<SignedEdge> list;
  list.reserve(edges.size());
  int id = 0;
  for (const auto& t : edges) list.push_back({t.u, t.v, t.sign, id++});
  return SeifertGraph(circles, std::move(list), boundary_components, std::move(provenance));
}

const SignedEdge& SeifertGraph::edge(int id) const {
  const auto it = by_id_.find(id);
  if (it == by_id_.end()) throw std::out_of_range("no edge with id " + std::to_string(id));
  return edges_[it->second];
}

namespace {

// -1 for unreached vertices; otherwise the piece index in order of lowest vertex.
std::vector<int> piece_labels(const SeifertGraph& g, int& pieces) {
  const auto& adj = g.adjacency();
  std::vector<int> label(static_cast<std::size_t>(g.circles()) + 1, -1);
  pieces = 0;
  for (int start = 1; start <= g.circles(); ++start) {
    if (label[static_cast<std::size_t>(start)] >= 0) continue;
    std::queue<int> frontier;
    frontier.push(start);
    label[static_cast<std::size_t>(start)] = pieces;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (const auto& [w, id] : adj[static_cast<std::size_t>(v)]) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = pieces;
          frontier.push(w);
        }
      }
    }
    ++pieces;
  }
  return label;
}

}  // namespace

bool has_odd_cycle(const SeifertGraph& g) {
  const auto& adj = g.adjacency();
  std::vector<int> color(static_cast<std::size_t>(g.circles()) + 1, -1);
  for (int start = 1; start <= g.circles(); ++start) {
    if (color[static_cast<std::size_t>(start)] >= 0) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (const auto& [w, id] : adj[static_cast<std::size_t>(v)]) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - color[static_cast<std::size_t>(v)];
          frontier.push(w);
        } else if (cw == color[static_cast<std::size_t>(v)]) {
          return true;
        }
      }
    }
  }
  return false;
}

ValidationReport validate(const SeifertGraph& g) {
  const auto fail = [](const std::string& msg) { throw InputError("invalid_graph", msg); };
  if (g.circles() < 1) fail("graph needs at least one vertex");
  if (g.boundary_components() < 1) fail("boundary component count l must be at least 1");
  std::set<int> ids;
  for (const auto& e : g.edges()) {
    if (e.u < 1 || e.u > g.circles() || e.v < 1 || e.v > g.circles())
      fail("edge " + std::to_string(e.id) + " has an endpoint outside 1.." +
           std::to_string(g.circles()));
    if (e.u == e.v) fail("edge " + std::to_string(e.id) + " is a loop at vertex " + std::to_string(e.u));
    if (e.sign != 1 && e.sign != -1) fail("edge " + std::to_string(e.id) + " sign must be 1 or -1");
    if (!ids.insert(e.id).second) fail("duplicate edge id " + std::to_string(e.id));
  }
  ValidationReport report;
  if (has_odd_cycle(g))
    report.warnings.push_back("graph has an odd cycle; induced graphs of oriented surfaces are bipartite");
  return report;
}

bool is_connected(const SeifertGraph& g) {
  int pieces = 0;
  piece_labels(g, pieces);
  return pieces == 1;
}

std::vector<SeifertGraph> split_components(const SeifertGraph& g) {
  const auto& prov = g.provenance();
  int pieces = 0;
  const auto label = piece_labels(g, pieces);
  if (pieces > 1 && (prov.kind == SourceKind::raw || prov.vertex_link_components.empty()))
    throw InputError("split_link",
                     "cannot split a raw graph: boundary components per piece are unknown");

  std::vector<int> new_id(label.size(), 0);
  std::vector<int> next(static_cast<std::size_t>(pieces), 1);
  for (int v = 1; v <= g.circles(); ++v)
    new_id[static_cast<std::size_t>(v)] = next[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])]++;

  std::vector<SeifertGraph> out;
  for (int piece = 0; piece < pieces; ++piece) {
    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges()) {
      if (label[static_cast<std::size_t>(e.u)] != piece) continue;
      edges.push_back({new_id[static_cast<std::size_t>(e.u)], new_id[static_cast<std::size_t>(e.v)],
                       e.sign, static_cast<int>(edges.size())});
    }
    Provenance sub;
    sub.kind = prov.kind;
    sub.descriptor = prov.descriptor + " [piece " + std::to_string(piece + 1) + "]";
    std::set<int> comps;
    for (int v = 1; v <= g.circles(); ++v) {
      if (label[static_cast<std::size_t>(v)] != piece) continue;
      const auto& list = prov.vertex_link_components[static_cast<std::size_t>(v - 1)];
      sub.vertex_link_components.push_back(list);
      comps.insert(list.begin(), list.end());
    }
    const int circles = next[static_cast<std::size_t>(piece)] - 1;
    const int l = pieces == 1 ? g.boundary_components() : static_cast<int>(comps.size());
    out.emplace_back(circles, std::move(edges), l, std::move(sub));
  }
  return out;
}

int euler_characteristic(const SeifertGraph& g) { return g.circles() - g.crossings(); }

int canonical_surface_genus(const SeifertGraph& g) {
  if (!is_connected(g))
    throw InputError("disconnected", "canonical surface genus needs a connected Seifert graph");
  const int twice = 2 - g.boundary_components() - g.circles() + g.crossings();
  if (twice < 0 || twice % 2 != 0)
    throw InputError("genus_parity", "inconsistent (s, c, l) = (" + std::to_string(g.circles()) +
                                         ", " + std::to_string(g.crossings()) + ", " +
                                         std::to_string(g.boundary_components()) +
                                         "): 2 - l - s + c must be even and nonnegative");
  return twice / 2;
}

}  // namespace plumb
