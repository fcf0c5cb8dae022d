#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plumb/bounds.hpp"
#include "plumb/braid.hpp"
#include "plumb/seifert_graph.hpp"

namespace plumb {

struct ExpectedBound {
  std::string name;
  int value = 0;
};

// A link with hand-checked data. Expected tables are for the default engine
// options (min-beta policy, no exhaustive search).
struct Fixture {
  std::string name;
  std::string description;
  std::optional<BraidWord> braid;
  std::optional<SeifertGraph> raw_graph;
  int components = 1;
  int genus = 0;
  bool alternating = false;
  bool positive = false;
  std::vector<ExpectedBound> expected;
  BestBounds expected_best;
  std::optional<int> expected_exact_bk;

  SeifertGraph graph() const;
};

const std::vector<Fixture>& load_fixtures();

// nullptr when unknown.
const Fixture* find_fixture(std::string_view name);

// Boundary components of the two-figure example link (vertices a, b, c, d).
int fixture_l_for_figure2();

SeifertGraph figure2_graph();

}  // namespace plumb
