#include "plumb/spanning.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <queue>

#include "plumb/errors.hpp"
#include "plumb/seifert_graph.hpp"

namespace plumb {

const char* to_string(FpbkPolicy policy) {
  return policy == FpbkPolicy::min_beta ? "min-beta" : "min-bound";
}

bool SpanningTree::contains_edge(int edge_id) const {
  return std::binary_search(tree_edge_ids.begin(), tree_edge_ids.end(), edge_id);
}

std::vector<int> SpanningTree::path_edges(int u, int v) const {
  std::vector<int> from_u;
  std::vector<int> from_v;
  const auto up = [&](int& x, std::vector<int>& acc) {
    const auto& link = *parent[static_cast<std::size_t>(x)];
    acc.push_back(link.edge_id);
    x = link.parent;
  };
  while (depth[static_cast<std::size_t>(u)] > depth[static_cast<std::size_t>(v)]) up(u, from_u);
  while (depth[static_cast<std::size_t>(v)] > depth[static_cast<std::size_t>(u)]) up(v, from_v);
  while (u != v) {
    up(u, from_u);
    up(v, from_v);
  }
  from_u.insert(from_u.end(), from_v.rbegin(), from_v.rend());
  return from_u;
}

namespace {

// BFS over the edges accepted by `use`, exploring neighbors in ascending
// (vertex id, edge id) order.
template <typename Filter>
SpanningTree bfs_tree(const SeifertGraph& g, int root, Filter use) {
  const auto n = static_cast<std::size_t>(g.circles());
  SpanningTree tree;
  tree.root = root;
  tree.parent.assign(n + 1, std::nullopt);
  tree.depth.assign(n + 1, -1);
  tree.depth[static_cast<std::size_t>(root)] = 0;
  std::queue<int> frontier;
  frontier.push(root);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (const auto& [w, id] : g.adjacency()[static_cast<std::size_t>(v)]) {
      if (!use(id) || tree.depth[static_cast<std::size_t>(w)] >= 0) continue;
      tree.depth[static_cast<std::size_t>(w)] = tree.depth[static_cast<std::size_t>(v)] + 1;
      tree.parent[static_cast<std::size_t>(w)] = TreeLink{v, id};
      tree.tree_edge_ids.push_back(id);
      frontier.push(w);
    }
  }
  std::sort(tree.tree_edge_ids.begin(), tree.tree_edge_ids.end());
  return tree;
}

void check_root(const SeifertGraph& g, int root) {
  if (root < 1 || root > g.circles())
    throw InputError("invalid_graph", "root " + std::to_string(root) + " is not a vertex");
}

bool spans(const SpanningTree& tree) {
  return std::all_of(tree.depth.begin() + 1, tree.depth.end(), [](int d) { return d >= 0; });
}

int depth_sign(int top_sign, int depth) { return (depth - 1) % 2 == 0 ? top_sign : -top_sign; }

}  // namespace

SpanningTree bfs_spanning_tree(const SeifertGraph& g, int root) {
  check_root(g, root);
  auto tree = bfs_tree(g, root, [](int) { return true; });
  if (!spans(tree)) throw InputError("disconnected", "Seifert graph is not connected");
  return tree;
}

SpanningTree tree_from_edges(const SeifertGraph& g, const std::vector<int>& edge_ids, int root) {
  check_root(g, root);
  std::vector<int> ids = edge_ids;
  std::sort(ids.begin(), ids.end());
  auto tree = bfs_tree(g, root, [&](int id) { return std::binary_search(ids.begin(), ids.end(), id); });
  if (!spans(tree) || tree.tree_edge_ids != ids)
    throw InputError("invalid_graph", "edge set is not a spanning tree");
  return tree;
}

DepthSigning alternating_depth_signing(const SpanningTree& tree, int top_sign) {
  DepthSigning signing;
  signing.top_sign = top_sign;
  for (std::size_t v = 1; v < tree.parent.size(); ++v) {
    if (const auto& link = tree.parent[v])
      signing.assignment[link->edge_id] = depth_sign(top_sign, tree.depth[v]);
  }
  return signing;
}

int tree_path_sign_sum(const SpanningTree& tree, const DepthSigning& signing, int u, int v) {
  int sum = 0;
  for (const int id : tree.path_edges(u, v)) sum += signing.assignment.at(id);
  return sum;
}

bool check_sign_sum_lemma(const SeifertGraph& g, const SpanningTree& tree,
                          const DepthSigning& signing) {
  for (const auto& e : g.edges()) {
    if (tree.contains_edge(e.id)) continue;
    const int sum = tree_path_sign_sum(tree, signing, e.u, e.v);
    if (sum != 1 && sum != -1) return false;
  }
  return true;
}

int signing_mismatches(const SeifertGraph& g, const SpanningTree& tree,
                       const DepthSigning& signing) {
  int count = 0;
  for (const int id : tree.tree_edge_ids)
    if (signing.assignment.at(id) != g.edge(id).sign) ++count;
  return count;
}

int compute_gamma(const SeifertGraph& g, const SpanningTree& tree, const DepthSigning& signing) {
  int gamma = 0;
  for (const auto& e : g.edges()) {
    if (tree.contains_edge(e.id)) continue;
    if (e.sign != tree_path_sign_sum(tree, signing, e.u, e.v)) ++gamma;
  }
  return gamma;
}

BetaChoice compute_beta(const SeifertGraph& g, const SpanningTree& tree) {
  auto plus = alternating_depth_signing(tree, 1);
  auto minus = alternating_depth_signing(tree, -1);
  const int beta_plus = signing_mismatches(g, tree, plus);
  const int beta_minus = signing_mismatches(g, tree, minus);

  bool take_plus = beta_plus < beta_minus;
  if (beta_plus == beta_minus)
    take_plus = compute_gamma(g, tree, plus) >= compute_gamma(g, tree, minus);

  BetaChoice choice{take_plus ? beta_plus : beta_minus, take_plus ? std::move(plus) : std::move(minus)};
  const int cap = g.circles() / 2;  // ceil((s - 1) / 2)
  if (choice.beta > cap)
    throw InvariantError("beta = " + std::to_string(choice.beta) + " exceeds ceil((s-1)/2) = " +
                         std::to_string(cap));
  return choice;
}

TreeAnalysis analyze_tree(const SeifertGraph& g, const SpanningTree& tree, FpbkPolicy policy) {
  TreeAnalysis analysis;
  analysis.tree = tree;
  analysis.policy = policy;
  if (policy == FpbkPolicy::min_beta) {
    auto choice = compute_beta(g, tree);
    analysis.beta = choice.beta;
    analysis.signing = std::move(choice.signing);
    analysis.gamma = compute_gamma(g, tree, analysis.signing);
  } else {
    const int base = g.crossings() - g.circles() + 1;
    int best_value = 0;
    bool have = false;
    for (const int top : {1, -1}) {
      auto signing = alternating_depth_signing(tree, top);
      const int beta = signing_mismatches(g, tree, signing);
      const int gamma = compute_gamma(g, tree, signing);
      const int value = beta + gamma + 3 * (base - gamma);
      const bool better = !have || value < best_value ||
                          (value == best_value && beta < analysis.beta);
      if (better) {
        have = true;
        best_value = value;
        analysis.beta = beta;
        analysis.gamma = gamma;
        analysis.signing = std::move(signing);
      }
    }
  }
  for (const auto& e : g.edges())
    if (!tree.contains_edge(e.id))
      analysis.path_sums[e.id] = tree_path_sign_sum(tree, analysis.signing, e.u, e.v);
  return analysis;
}

namespace {

// One non-tree edge seen from the tree: which tree positions its path uses.
struct PathDemand {
  int edge_id = 0;
  int target = 0;  // required sign sum, -epsilon
  std::vector<int> positions;
};

struct AugmentationProblem {
  std::vector<int> tree_ids;   // ascending
  std::vector<int> tree_sign;  // diagram sign per position
  std::vector<PathDemand> demands;
};

AugmentationProblem build_problem(const SeifertGraph& g, const SpanningTree& tree) {
  AugmentationProblem p;
  p.tree_ids = tree.tree_edge_ids;
  for (const int id : p.tree_ids) p.tree_sign.push_back(g.edge(id).sign);
  for (const auto& e : g.edges()) {
    if (tree.contains_edge(e.id)) continue;
    PathDemand d{e.id, -e.sign, {}};
    for (const int id : tree.path_edges(e.u, e.v)) {
      const auto it = std::lower_bound(p.tree_ids.begin(), p.tree_ids.end(), id);
      d.positions.push_back(static_cast<int>(it - p.tree_ids.begin()));
    }
    p.demands.push_back(std::move(d));
  }
  return p;
}

// Free positions contribute any of +-1, kept positions their diagram sign.
bool demand_met(const PathDemand& d, const std::vector<int>& tree_sign,
                const std::vector<char>& is_free) {
  int free_count = 0;
  int kept = 0;
  for (const int pos : d.positions) {
    if (is_free[static_cast<std::size_t>(pos)])
      ++free_count;
    else
      kept += tree_sign[static_cast<std::size_t>(pos)];
  }
  const int gap = d.target - kept;
  return std::abs(gap) <= free_count && (gap - free_count) % 2 == 0;
}

bool all_met(const AugmentationProblem& p, const std::vector<char>& is_free) {
  return std::all_of(p.demands.begin(), p.demands.end(),
                     [&](const PathDemand& d) { return demand_met(d, p.tree_sign, is_free); });
}

// Bitmask form for the exhaustive search (at most kExhaustiveAugmentationLimit positions).
struct MaskDemand {
  std::uint32_t path = 0;
  std::uint32_t positive = 0;
  std::uint32_t negative = 0;
  int target = 0;
};

bool mask_met(const MaskDemand& d, std::uint32_t free_set) {
  const std::uint32_t kept = d.path & ~free_set;
  const int sum = std::popcount(d.positive & kept) - std::popcount(d.negative & kept);
  const int free_count = std::popcount(d.path & free_set);
  const int gap = d.target - sum;
  return std::abs(gap) <= free_count && (gap - free_count) % 2 == 0;
}

std::vector<int> exhaustive_minimum(const AugmentationProblem& p) {
  const int k = static_cast<int>(p.tree_ids.size());
  std::vector<MaskDemand> masks;
  for (const auto& d : p.demands) {
    MaskDemand m;
    m.target = d.target;
    for (const int pos : d.positions) {
      const std::uint32_t bit = std::uint32_t{1} << pos;
      m.path |= bit;
      (p.tree_sign[static_cast<std::size_t>(pos)] > 0 ? m.positive : m.negative) |= bit;
    }
    masks.push_back(m);
  }
  const auto feasible = [&](std::uint32_t set) {
    return std::all_of(masks.begin(), masks.end(), [set](const MaskDemand& m) { return mask_met(m, set); });
  };

  for (int size = 0; size <= k; ++size) {
    // Gosper's hack: k-bit masks of `size` bits in increasing numeric order.
    std::uint32_t set = size == 0 ? 0 : (std::uint32_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << k;
    while (set < limit) {
      if (feasible(set)) {
        std::vector<int> out;
        for (int pos = 0; pos < k; ++pos)
          if (set >> pos & 1U) out.push_back(p.tree_ids[static_cast<std::size_t>(pos)]);
        return out;
      }
      if (set == 0) break;
      const std::uint32_t low = set & (~set + 1);
      const std::uint32_t ripple = set + low;
      set = (((ripple ^ set) >> 2) / low) | ripple;
      if (ripple == 0) break;
    }
  }
  return p.tree_ids;  // unreachable once satisfiability has been checked
}

std::vector<int> greedy_cover(const AugmentationProblem& p) {
  const std::size_t k = p.tree_ids.size();
  std::vector<char> is_free(k, 0);
  for (;;) {
    std::vector<int> violated_hits(k, 0);
    bool any = false;
    for (const auto& d : p.demands) {
      if (demand_met(d, p.tree_sign, is_free)) continue;
      any = true;
      for (const int pos : d.positions)
        if (!is_free[static_cast<std::size_t>(pos)]) ++violated_hits[static_cast<std::size_t>(pos)];
    }
    if (!any) break;
    const auto best = std::max_element(violated_hits.begin(), violated_hits.end());
    is_free[static_cast<std::size_t>(best - violated_hits.begin())] = 1;
  }
  // Drop members that turned out to be unnecessary.
  for (std::size_t pos = 0; pos < k; ++pos) {
    if (!is_free[pos]) continue;
    is_free[pos] = 0;
    if (!all_met(p, is_free)) is_free[pos] = 1;
  }
  std::vector<int> out;
  for (std::size_t pos = 0; pos < k; ++pos)
    if (is_free[pos]) out.push_back(p.tree_ids[pos]);
  return out;
}

}  // namespace

bool augmentation_feasible(const SeifertGraph& g, const SpanningTree& tree,
                           const std::vector<int>& free_edges) {
  const auto p = build_problem(g, tree);
  std::vector<char> is_free(p.tree_ids.size(), 0);
  for (const int id : free_edges) {
    const auto it = std::lower_bound(p.tree_ids.begin(), p.tree_ids.end(), id);
    if (it == p.tree_ids.end() || *it != id)
      throw InputError("invalid_graph", "edge " + std::to_string(id) + " is not a tree edge");
    is_free[static_cast<std::size_t>(it - p.tree_ids.begin())] = 1;
  }
  return all_met(p, is_free);
}

Augmentation minimal_augmentation_fp(const SeifertGraph& g, const SpanningTree& tree) {
  const auto p = build_problem(g, tree);
  for (const auto& d : p.demands) {
    // With every position free the reachable sums share the path length's parity.
    if (d.positions.size() % 2 == 0)
      throw InputError("unsatisfiable_augmentation",
                       "edge " + std::to_string(d.edge_id) +
                           " closes an odd cycle; no augmentation gives it an odd tree path");
  }
  Augmentation result;
  if (static_cast<int>(p.tree_ids.size()) <= kExhaustiveAugmentationLimit) {
    result.tree_edge_ids = exhaustive_minimum(p);
    result.exact = true;
  } else {
    result.tree_edge_ids = greedy_cover(p);
    result.exact = false;
  }
  return result;
}

namespace {

struct EnumerationState {
  const SeifertGraph& g;
  std::size_t limit;
  std::vector<int> chosen;
  TreeEnumeration out;
};

int find_set(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
  return x;
}

bool connectable(const SeifertGraph& g, const std::vector<int>& chosen, std::size_t from) {
  std::vector<int> parent(static_cast<std::size_t>(g.circles()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  int pieces = g.circles();
  const auto join = [&](const SignedEdge& e) {
    const int a = find_set(parent, e.u);
    const int b = find_set(parent, e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --pieces;
    }
  };
  for (const int id : chosen) join(g.edge(id));
  for (std::size_t i = from; i < g.edges().size(); ++i) join(g.edges()[i]);
  return pieces == 1;
}

void extend(EnumerationState& st, std::size_t next, std::vector<int>& parent) {
  if (st.out.truncated) return;
  const auto need = static_cast<std::size_t>(st.g.circles() - 1);
  if (st.chosen.size() == need) {
    if (st.out.trees.size() == st.limit) {
      st.out.truncated = true;
      return;
    }
    st.out.trees.push_back(tree_from_edges(st.g, st.chosen, 1));
    return;
  }
  const auto& edges = st.g.edges();
  if (next >= edges.size() || edges.size() - next < need - st.chosen.size()) return;

  const auto& e = edges[next];
  const int a = find_set(parent, e.u);
  const int b = find_set(parent, e.v);
  if (a != b) {
    auto saved = parent;
    parent[static_cast<std::size_t>(a)] = b;
    st.chosen.push_back(e.id);
    extend(st, next + 1, parent);
    st.chosen.pop_back();
    parent = std::move(saved);
  }
  if (connectable(st.g, st.chosen, next + 1)) extend(st, next + 1, parent);
}

}  // namespace

TreeEnumeration enumerate_spanning_trees(const SeifertGraph& g, std::size_t limit) {
  if (!is_connected(g)) throw InputError("disconnected", "Seifert graph is not connected");
  // Edges are visited in list order; sort a copy by id so the order is by id.
  std::vector<SignedEdge> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end(), [](const SignedEdge& x, const SignedEdge& y) { return x.id < y.id; });
  const SeifertGraph by_id(g.circles(), std::move(sorted), g.boundary_components(), g.provenance());

  EnumerationState st{by_id, limit, {}, {}};
  std::vector<int> parent(static_cast<std::size_t>(g.circles()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  extend(st, 0, parent);
  return std::move(st.out);
}

}  // namespace plumb
