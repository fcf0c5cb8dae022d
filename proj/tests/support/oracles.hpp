#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "plumb/braid.hpp"
#include "plumb/pd.hpp"
#include "plumb/seifert_graph.hpp"

namespace oracle {

// Closure of a braid as a Knot-Atlas PD code. Strands run upward; positive
// sigma_i has the strand from position i crossing over toward i+1.
inline plumb::PDCode braid_closure_pd(const plumb::BraidWord& w) {
  const int n = w.strands();
  int next_label = n + 1;
  std::vector<int> current(static_cast<std::size_t>(n));
  std::iota(current.begin(), current.end(), 1);
  std::vector<std::array<int, 4>> raw;
  for (const auto& letter : w.letters()) {
    const auto i = static_cast<std::size_t>(letter.index - 1);
    const int in_left = current[i];
    const int in_right = current[i + 1];
    const int out_left = next_label++;
    const int out_right = next_label++;
    if (letter.sign > 0)
      raw.push_back({in_right, out_right, out_left, in_left});
    else
      raw.push_back({in_left, in_right, out_right, out_left});
    current[i] = out_left;
    current[i + 1] = out_right;
  }
  // Closure: the arc leaving the top at position p is the arc entering at p.
  std::map<int, int> rename;
  for (int p = 0; p < n; ++p) rename[current[static_cast<std::size_t>(p)]] = p + 1;
  plumb::PDCode pd;
  for (auto x : raw) {
    for (auto& label : x)
      if (const auto it = rename.find(label); it != rename.end()) label = it->second;
    pd.crossings.push_back({x});
  }
  return pd;
}

inline std::string pd_text(const plumb::PDCode& pd) {
  if (pd.unknot) return "U";
  std::string out;
  for (const auto& x : pd.crossings) {
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(x.arcs[0]) + "," + std::to_string(x.arcs[1]) + "," +
           std::to_string(x.arcs[2]) + "," + std::to_string(x.arcs[3]) + "]";
  }
  return out;
}

// Kirchhoff: spanning tree count = any cofactor of the Laplacian, computed
// with fraction-free Bareiss elimination.
inline std::int64_t matrix_tree_count(const plumb::SeifertGraph& g) {
  const int n = g.circles();
  if (n == 1) return 1;
  std::vector<std::vector<std::int64_t>> lap(static_cast<std::size_t>(n),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (const auto& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u - 1);
    const auto v = static_cast<std::size_t>(e.v - 1);
    ++lap[u][u];
    ++lap[v][v];
    --lap[u][v];
    --lap[v][u];
  }
  const int m = n - 1;  // drop last row and column
  std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r)
    a[static_cast<std::size_t>(r)].assign(lap[static_cast<std::size_t>(r)].begin(),
                                          lap[static_cast<std::size_t>(r)].begin() + m);
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < m - 1; ++k) {
    auto K = static_cast<std::size_t>(k);
    if (a[K][K] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < m; ++r)
        if (a[static_cast<std::size_t>(r)][K] != 0) swap_row = r;
      if (swap_row < 0) return 0;
      std::swap(a[K], a[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j) {
        auto I = static_cast<std::size_t>(i), J = static_cast<std::size_t>(j);
        a[I][J] = (a[I][J] * a[K][K] - a[I][K] * a[K][J]) / prev;
      }
    prev = a[K][K];
  }
  return sign * a[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(m - 1)];
}

// Tree path between u and v by depth-first search over `tree_ids` only.
inline std::vector<int> tree_path(const plumb::SeifertGraph& g, const std::vector<int>& tree_ids,
                                  int u, int v) {
  std::vector<int> path;
  std::function<bool(int, int)> dfs = [&](int x, int via) {
    if (x == v) return true;
    for (const int id : tree_ids) {
      if (id == via) continue;
      const auto& e = g.edge(id);
      const int y = e.u == x ? e.v : (e.v == x ? e.u : 0);
      if (y == 0) continue;
      path.push_back(id);
      if (dfs(y, id)) return true;
      path.pop_back();
    }
    return false;
  };
  dfs(u, -1);
  return path;
}

// Tries every +-1 choice on the free edges of every non-tree path.
inline bool brute_feasible(const plumb::SeifertGraph& g, const std::vector<int>& tree_ids,
                           const std::vector<int>& free_ids) {
  for (const auto& e : g.edges()) {
    if (std::find(tree_ids.begin(), tree_ids.end(), e.id) != tree_ids.end()) continue;
    const auto path = tree_path(g, tree_ids, e.u, e.v);
    std::vector<int> fixed_signs;
    int free_count = 0;
    for (const int id : path) {
      if (std::find(free_ids.begin(), free_ids.end(), id) != free_ids.end())
        ++free_count;
      else
        fixed_signs.push_back(g.edge(id).sign);
    }
    const int kept = std::accumulate(fixed_signs.begin(), fixed_signs.end(), 0);
    bool ok = false;
    for (std::uint32_t choice = 0; choice < (1U << free_count) && !ok; ++choice) {
      int sum = kept;
      for (int b = 0; b < free_count; ++b) sum += (choice >> b & 1U) ? 1 : -1;
      ok = sum == -e.sign;
    }
    if (!ok) return false;
  }
  return true;
}

// Minimum size of a feasible free set, over all subsets of the tree edges.
inline int brute_min_augmentation(const plumb::SeifertGraph& g, const std::vector<int>& tree_ids) {
  const auto k = tree_ids.size();
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    std::vector<int> chosen;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1U) chosen.push_back(tree_ids[b]);
    if ((best < 0 || static_cast<int>(chosen.size()) < best) && brute_feasible(g, tree_ids, chosen))
      best = static_cast<int>(chosen.size());
  }
  return best;
}

// Signed multigraph isomorphism (plus equal l) by trying every relabeling.
inline bool isomorphic(const plumb::SeifertGraph& a, const plumb::SeifertGraph& b) {
  if (a.circles() != b.circles() || a.crossings() != b.crossings() ||
      a.boundary_components() != b.boundary_components())
    return false;
  const auto key = [](int u, int v, int s) {
    return std::tuple{std::min(u, v), std::max(u, v), s};
  };
  std::vector<std::tuple<int, int, int>> target;
  for (const auto& e : b.edges()) target.push_back(key(e.u, e.v, e.sign));
  std::sort(target.begin(), target.end());
  std::vector<int> perm(static_cast<std::size_t>(a.circles()));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<std::tuple<int, int, int>> mapped;
    for (const auto& e : a.edges())
      mapped.push_back(key(perm[static_cast<std::size_t>(e.u - 1)], perm[static_cast<std::size_t>(e.v - 1)], e.sign));
    std::sort(mapped.begin(), mapped.end());
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
