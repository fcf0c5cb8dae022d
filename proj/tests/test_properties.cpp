#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plumb/bounds.hpp"
#include "plumb/catalog.hpp"
#include "plumb/pd.hpp"
#include "plumb/suite.hpp"
#include "support/oracles.hpp"

using namespace plumb;

namespace {
const std::vector<BraidWord>& words() {
  static const auto w = random_connected_braids(1000, 7);
  return w;
}

// Arcs of a component that never goes under carry no orientation; the PD
// frontend then picks one, which may disagree with the braid direction.
bool every_strand_goes_under(const BraidWord& w) {
  const auto pd = oracle::braid_closure_pd(w);
  const auto d = orient_diagram(pd);
  std::vector<bool> under(static_cast<std::size_t>(d.components), false);
  for (const auto& walk : d.walks)
    for (const auto& v : walk)
      if (v.passage == Passage::under) under[static_cast<std::size_t>(&walk - d.walks.data())] = true;
  return std::all_of(under.begin(), under.end(), [](bool b) { return b; });
}
}  // namespace

TEST_CASE("identity and lemma suite") {
  const auto summary = run_suite_serial(words());
  CHECK(summary.total == 1000);
  for (const auto& f : summary.failures) FAIL_CHECK(f.word << ": " << f.detail);
  CHECK(summary.all_passed());
}

TEST_CASE("single cases") {
  CHECK(check_braid_case(parse_braid_word("1 1 1")).passed());
  CHECK(check_braid_case(parse_braid_word("1 -2 1 -2")).passed());
}

TEST_CASE("every bfs tree signing satisfies the lemma, from every root") {
  for (const auto& w : words()) {
    const auto g = closure_seifert_graph(w);
    for (int root = 1; root <= g.circles(); ++root) {
      const auto t = bfs_spanning_tree(g, root);
      for (int top : {1, -1}) {
        const auto s = alternating_depth_signing(t, top);
        for (const auto& e : g.edges()) {
          if (t.contains_edge(e.id)) continue;
          const int sum = tree_path_sign_sum(t, s, e.u, e.v);
          CHECK((sum == 1 || sum == -1));
        }
      }
    }
  }
}

TEST_CASE("gamma complement and beta bound") {
  for (const auto& w : words()) {
    const auto g = closure_seifert_graph(w);
    const auto t = bfs_spanning_tree(g);
    const int nontree = g.crossings() - (g.circles() - 1);
    CHECK(compute_gamma(g, t, alternating_depth_signing(t, 1)) +
              compute_gamma(g, t, alternating_depth_signing(t, -1)) ==
          nontree);
    CHECK(compute_beta(g, t).beta <= g.circles() / 2);
  }
}

TEST_CASE("refinement dominance and brute-force augmentation") {
  std::size_t checked = 0;
  for (const auto& w : words()) {
    const auto g = closure_seifert_graph(w);
    const auto refined = fp_bound_refined(g);
    CHECK(bk_bound_diagram(g) <= refined.value);
    CHECK(refined.value <= fp_bound_diagram(g));
    if (g.circles() - 1 <= 8) {
      const auto t = bfs_spanning_tree(g);
      CHECK(static_cast<int>(refined.augmentation.tree_edge_ids.size()) ==
            oracle::brute_min_augmentation(g, t.tree_edge_ids));
      ++checked;
    }
  }
  CHECK(checked == words().size());
}

TEST_CASE("braid and pd frontends agree") {
  std::size_t compared = 0;
  for (const auto& w : words()) {
    if (!every_strand_goes_under(w)) continue;
    CAPTURE(w.to_string());
    const auto pd = parse_pd(oracle::pd_text(oracle::braid_closure_pd(w)));
    const auto d = orient_diagram(pd);
    const auto from_pd = seifert_circles(d);
    const auto from_braid = closure_seifert_graph(w);
    CHECK(oracle::isomorphic(from_pd, from_braid));
    const auto a = evaluate(d);
    const auto b = evaluate(w);
    CHECK(a.find("bk_diagram")->value == b.find("bk_diagram")->value);
    // fpbk_diagram depends on vertex numbering through the BFS tree
    CHECK(a.genus.g_diagram == b.genus.g_diagram);
    ++compared;
  }
  MESSAGE("compared " << compared << " diagrams");
  CHECK(compared > 500);
}
