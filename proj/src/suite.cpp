#include "plumb/suite.hpp"

#include <exception>
#include <random>

#include "plumb/bounds.hpp"
#include "plumb/seifert_graph.hpp"
#include "plumb/spanning.hpp"

namespace plumb {

const char* to_string(SuiteCheck check) {
  switch (check) {
    case SuiteCheck::bk_genus_identity: return "bk_diagram = 2g_S + l - 1";
    case SuiteCheck::fpbk_decomposition: return "fpbk = beta + gamma + 3(c - s + 1 - gamma)";
    case SuiteCheck::orientation_parity: return "c - s + l even";
    case SuiteCheck::cascade_monotone: return "best.bk <= best.fp <= best.fpbk";
    case SuiteCheck::beta_bound: return "beta <= ceil((s - 1)/2)";
    case SuiteCheck::sign_sum_lemma: return "non-tree path sign sums are +-1";
    case SuiteCheck::refinement_dominance: return "bk_diagram <= fp_refined <= fp_diagram";
    case SuiteCheck::gamma_complement: return "gamma(+) + gamma(-) = non-tree edges";
  }
  return "?";
}

std::vector<BraidWord> random_connected_braids(std::size_t count, std::uint64_t seed,
                                               const RandomBraidSpec& spec) {
  std::mt19937_64 rng(seed);
  std::vector<BraidWord> out;
  out.reserve(count);
  while (out.size() < count) {
    const int n = std::uniform_int_distribution<int>(spec.min_strands, spec.max_strands)(rng);
    const int m = std::uniform_int_distribution<int>(n - 1, std::max(n - 1, spec.max_length))(rng);
    std::uniform_int_distribution<int> index(1, n - 1);
    std::bernoulli_distribution positive(0.5);
    std::vector<BraidLetter> letters;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < m; ++k) {
      const BraidLetter letter{index(rng), positive(rng) ? 1 : -1};
      used[static_cast<std::size_t>(letter.index)] = 1;
      letters.push_back(letter);
    }
    bool connected = true;
    for (int i = 1; i < n; ++i) connected = connected && used[static_cast<std::size_t>(i)];
    if (connected) out.emplace_back(n, std::move(letters));
  }
  return out;
}

CaseOutcome check_braid_case(const BraidWord& word) {
  CaseOutcome outcome;
  const auto fail = [&](SuiteCheck check) { outcome.failed.push_back(check); };
  try {
    const auto g = closure_seifert_graph(word);
    const int s = g.circles();
    const int c = g.crossings();
    const int l = g.boundary_components();

    if ((c - s + l) % 2 != 0) fail(SuiteCheck::orientation_parity);
    const int genus = canonical_surface_genus(g);
    const int bk = bk_bound_diagram(g);
    if (bk != 2 * genus + l - 1) fail(SuiteCheck::bk_genus_identity);

    bool decomposition_ok = true;
    for (const auto policy : {FpbkPolicy::min_beta, FpbkPolicy::min_bound}) {
      const auto bound = fpbk_bound_diagram(g, policy);
      const int beta = bound.analysis.beta;
      const int gamma = bound.analysis.gamma;
      decomposition_ok = decomposition_ok && bound.value == beta + gamma + 3 * (c - s + 1 - gamma);
    }
    if (!decomposition_ok) fail(SuiteCheck::fpbk_decomposition);

    const auto tree = bfs_spanning_tree(g, 1);
    if (compute_beta(g, tree).beta > s / 2) fail(SuiteCheck::beta_bound);

    const auto plus = alternating_depth_signing(tree, 1);
    const auto minus = alternating_depth_signing(tree, -1);
    if (!check_sign_sum_lemma(g, tree, plus) || !check_sign_sum_lemma(g, tree, minus))
      fail(SuiteCheck::sign_sum_lemma);
    const int non_tree = c - static_cast<int>(tree.tree_edge_ids.size());
    if (compute_gamma(g, tree, plus) + compute_gamma(g, tree, minus) != non_tree)
      fail(SuiteCheck::gamma_complement);

    const int refined = fp_bound_refined(g).value;
    if (!(bk <= refined && refined <= fp_bound_diagram(g))) fail(SuiteCheck::refinement_dominance);

    const auto report = evaluate(word);
    if (!(report.best.bk <= report.best.fp && report.best.fp <= report.best.fpbk))
      fail(SuiteCheck::cascade_monotone);
  } catch (const std::exception& e) {
    outcome.error = e.what();
  }
  return outcome;
}

namespace {

SuiteSummary summarize(std::span<const BraidWord> words, const std::vector<CaseOutcome>& outcomes) {
  SuiteSummary summary;
  summary.total = words.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.passed()) {
      ++summary.passed;
      continue;
    }
    std::string detail = o.error;
    for (const auto check : o.failed) {
      ++summary.failures_per_check[static_cast<std::size_t>(check)];
      if (!detail.empty()) detail += "; ";
      detail += to_string(check);
    }
    summary.failures.push_back({i, words[i].to_string(), detail});
  }
  return summary;
}

}  // namespace

SuiteSummary run_suite_serial(std::span<const BraidWord> words) {
  std::vector<CaseOutcome> outcomes(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) outcomes[i] = check_braid_case(words[i]);
  return summarize(words, outcomes);
}

SuiteSummary run_suite_parallel(std::span<const BraidWord> words) {
  std::vector<CaseOutcome> outcomes(words.size());
  const auto n = static_cast<std::ptrdiff_t>(words.size());
  // check_braid_case never throws; failures are recorded in the outcome.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    outcomes[static_cast<std::size_t>(i)] = check_braid_case(words[static_cast<std::size_t>(i)]);
  return summarize(words, outcomes);
}

}  // namespace plumb
