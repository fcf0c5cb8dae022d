#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace plumb {

class SeifertGraph;

struct TreeLink {
  int parent = 0;
  int edge_id = 0;
};

// Rooted spanning tree. Vectors are indexed by vertex id; index 0 unused.
struct SpanningTree {
  int root = 1;
  std::vector<std::optional<TreeLink>> parent;
  std::vector<int> depth;
  std::vector<int> tree_edge_ids;  // ascending

  int vertex_count() const noexcept { return static_cast<int>(depth.size()) - 1; }
  bool contains_edge(int edge_id) const;
  // Tree edge ids on the unique path u ~> v, ordered from u.
  std::vector<int> path_edges(int u, int v) const;
};

// Tree edge whose child endpoint has depth d carries top_sign * (-1)^(d-1).
struct DepthSigning {
  int top_sign = 1;
  std::map<int, int> assignment;  // tree edge id -> +-1
};

enum class FpbkPolicy { min_beta, min_bound };

const char* to_string(FpbkPolicy policy);

struct TreeAnalysis {
  SpanningTree tree;
  DepthSigning signing;
  int beta = 0;
  int gamma = 0;
  std::map<int, int> path_sums;  // non-tree edge id -> tree path sign sum
  FpbkPolicy policy = FpbkPolicy::min_beta;
};

// Throws InputError (disconnected).
SpanningTree bfs_spanning_tree(const SeifertGraph& g, int root = 1);

// Roots the tree spanned by `edge_ids` at `root`. Throws InputError if the
// ids do not form a spanning tree of g.
SpanningTree tree_from_edges(const SeifertGraph& g, const std::vector<int>& edge_ids,
                             int root = 1);

DepthSigning alternating_depth_signing(const SpanningTree& tree, int top_sign);

int tree_path_sign_sum(const SpanningTree& tree, const DepthSigning& signing, int u, int v);

bool check_sign_sum_lemma(const SeifertGraph& g, const SpanningTree& tree,
                          const DepthSigning& signing);

// Number of tree edges whose signing differs from the diagram sign.
int signing_mismatches(const SeifertGraph& g, const SpanningTree& tree,
                       const DepthSigning& signing);

int compute_gamma(const SeifertGraph& g, const SpanningTree& tree, const DepthSigning& signing);

struct BetaChoice {
  int beta = 0;
  DepthSigning signing;
};

// Picks the top sign with fewer mismatches; ties go to the larger gamma,
// then to +1. Throws InvariantError if beta exceeds ceil((s-1)/2).
BetaChoice compute_beta(const SeifertGraph& g, const SpanningTree& tree);

// Full analysis of one tree under `policy`. min-bound evaluates both top signs
// and keeps the one with the smaller fpbk value beta + gamma + 3(c-s+1-gamma).
TreeAnalysis analyze_tree(const SeifertGraph& g, const SpanningTree& tree, FpbkPolicy policy);

struct Augmentation {
  std::vector<int> tree_edge_ids;  // ascending
  bool exact = true;
};

// Exhaustive search is used up to this many tree edges, greedy beyond.
inline constexpr int kExhaustiveAugmentationLimit = 20;

// Smallest set of tree edges to double with a +/- pair so that every
// non-tree edge of sign e has a tree path of sign sum -e. Throws
// InputError (unsatisfiable_augmentation) when some non-tree edge closes an
// odd cycle, since then no choice works.
Augmentation minimal_augmentation_fp(const SeifertGraph& g, const SpanningTree& tree);

// Whether `free_edges` (ascending tree edge ids) satisfies every non-tree edge.
bool augmentation_feasible(const SeifertGraph& g, const SpanningTree& tree,
                           const std::vector<int>& free_edges);

struct TreeEnumeration {
  std::vector<SpanningTree> trees;
  bool truncated = false;
};

// All spanning trees (parallel edges are distinct), rooted at vertex 1, in
// lexicographic order of their sorted edge-id lists. Stops after `limit`.
TreeEnumeration enumerate_spanning_trees(const SeifertGraph& g, std::size_t limit);

}  // namespace plumb
