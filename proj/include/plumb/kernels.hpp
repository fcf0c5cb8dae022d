#pragma once

// Data-parallel loops of the engine. Every kernel has a serial reference with
// the same signature; the OpenMP version must return identical results and is
// what the CLI uses. Without OpenMP the parallel entry points run serially.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "plumb/braid.hpp"
#include "plumb/seifert_graph.hpp"
#include "plumb/spanning.hpp"

namespace plumb {

struct TreeMinimum {
  int value = 0;
  std::size_t tree_index = 0;  // first tree attaining the value

  friend bool operator==(const TreeMinimum&, const TreeMinimum&) = default;
};

// Minimum of fpbk_value_for_tree over `trees` (non-empty).
TreeMinimum min_fpbk_over_trees_serial(const SeifertGraph& g, std::span<const SpanningTree> trees);
TreeMinimum min_fpbk_over_trees_parallel(const SeifertGraph& g,
                                         std::span<const SpanningTree> trees);

// Applies `job` to every index in [0, count) and keeps results in order.
// Jobs must not share mutable state.
std::vector<std::string> map_ordered_serial(std::size_t count,
                                            const std::function<std::string(std::size_t)>& job);
std::vector<std::string> map_ordered_parallel(std::size_t count,
                                              const std::function<std::string(std::size_t)>& job);

int available_threads();

}  // namespace plumb
