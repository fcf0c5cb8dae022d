#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace plumb {

struct SignedEdge {
  int u = 1;
  int v = 1;
  int sign = 1;
  int id = 0;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

enum class SourceKind { braid, pd, raw };

const char* to_string(SourceKind kind);

struct Provenance {
  SourceKind kind = SourceKind::raw;
  std::string descriptor;
  // For braid and pd sources: the link components whose arcs make up each
  // Seifert circle (index v-1). Empty for raw graphs, where the number of
  // boundary components of a piece cannot be recovered.
  std::vector<std::vector<int>> vertex_link_components;
};

// The induced signed multigraph of a canonical Seifert surface: one vertex per
// Seifert circle, one signed edge per half-twisted band. Vertices are 1..s.
//
// The boundary component count l is carried alongside; it is not a function
// of the abstract graph (the cyclic order of bands around each circle is
// lost), so every producer has to supply it.
class SeifertGraph {
 public:
  SeifertGraph(int circles, std::vector<SignedEdge> edges, int boundary_components,
               Provenance provenance = {});

  // Ids assigned by list position.
  struct Triple {
    int u, v, sign;
  };
  static SeifertGraph from_triples(int circles, const std::vector<Triple>& edges,
                                   int boundary_components, Provenance provenance = {});

  int circles() const noexcept { return circles_; }
  int crossings() const noexcept { return static_cast<int>(edges_.size()); }
  int boundary_components() const noexcept { return boundary_components_; }
  const std::vector<SignedEdge>& edges() const noexcept { return edges_; }
  const Provenance& provenance() const noexcept { return provenance_; }

  // Throws std::out_of_range for unknown ids.
  const SignedEdge& edge(int id) const;

  // Incident (neighbor, edge id) pairs per vertex, ascending by neighbor then
  // edge id. Index 0 is unused.
  const std::vector<std::vector<std::pair<int, int>>>& adjacency() const noexcept {
    return adjacency_;
  }

 private:
  int circles_;
  std::vector<SignedEdge> edges_;
  int boundary_components_;
  Provenance provenance_;
  std::unordered_map<int, std::size_t> by_id_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

struct ValidationReport {
  std::vector<std::string> warnings;
};

// Throws InputError (code invalid_graph) on a loop, an endpoint outside
// 1..s, a duplicate edge id, s < 1 or l < 1. An odd cycle is only a warning.
ValidationReport validate(const SeifertGraph& g);

bool is_connected(const SeifertGraph& g);
bool has_odd_cycle(const SeifertGraph& g);

// Connected pieces, vertices renumbered in ascending order of their original
// ids and edge ids reassigned by position. Requires braid or pd provenance.
std::vector<SeifertGraph> split_components(const SeifertGraph& g);

int euler_characteristic(const SeifertGraph& g);

// Genus of this diagram's canonical surface from chi = 2 - 2g - l.
// Throws InputError (genus_parity) when (2 - l - s + c) is odd or negative,
// and InputError (disconnected) for a disconnected graph.
int canonical_surface_genus(const SeifertGraph& g);

}  // namespace plumb
