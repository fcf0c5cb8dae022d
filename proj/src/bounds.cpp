#include "plumb/bounds.hpp"

#include <algorithm>
#include <limits>

#include "plumb/errors.hpp"
#include "plumb/kernels.hpp"

namespace plumb {

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::bk: return "bk";
    case Quantity::fp: return "fp";
    case Quantity::fpbk: return "fpbk";
  }
  return "bk";
}

const BoundEntry* BoundsReport::find(const std::string& name) const {
  const auto it = std::find_if(bounds.begin(), bounds.end(),
                               [&](const BoundEntry& e) { return e.name == name; });
  return it == bounds.end() ? nullptr : &*it;
}

namespace {

void require_connected(const SeifertGraph& g) {
  if (!is_connected(g))
    throw InputError("disconnected",
                     "Seifert graph is not connected (split link); evaluate each piece separately");
}

int positive_letters(const BraidWord& word) {
  return static_cast<int>(std::count_if(word.letters().begin(), word.letters().end(),
                                        [](const BraidLetter& l) { return l.sign > 0; }));
}

int fpbk_formula(int c, int s, int beta, int gamma) { return (3 * c - 2 * gamma) - (3 * s - beta) + 3; }

void check_decomposition(int value, int c, int s, int beta, int gamma) {
  const int decomposed = beta + gamma + 3 * (c - s + 1 - gamma);
  if (value != decomposed)
    throw InvariantError("fpbk diagram value " + std::to_string(value) +
                         " != beta + gamma + 3(c - s + 1 - gamma) = " + std::to_string(decomposed));
}

}  // namespace

std::optional<int> bk_bound_braid(const BraidWord& word) {
  const auto coil = find_coil_prefix(word);
  if (!coil) return std::nullopt;
  return static_cast<int>(coil->remainder.length());
}

int bk_bound_diagram(const SeifertGraph& g) {
  require_connected(g);
  return g.crossings() - g.circles() + 1;
}

int fp_bound_braid(const BraidWord& word) {
  return static_cast<int>(word.length()) + word.strands() - 1;
}

int fp_bound_diagram(const SeifertGraph& g) {
  require_connected(g);
  return g.crossings() + g.circles() - 1;
}

RefinedFp fp_bound_refined(const SeifertGraph& g) {
  require_connected(g);
  const auto tree = bfs_spanning_tree(g, 1);
  RefinedFp out;
  out.augmentation = minimal_augmentation_fp(g, tree);
  out.value = bk_bound_diagram(g) + 2 * static_cast<int>(out.augmentation.tree_edge_ids.size());
  return out;
}

std::optional<int> fpbk_bound_braid(const BraidWord& word) {
  const auto coil = find_coil_prefix(word);
  if (!coil) return std::nullopt;
  return static_cast<int>(coil->remainder.length()) + 2 * positive_letters(coil->remainder);
}

std::optional<int> fpbk_bound_signed_counts(const BraidWord& word) {
  if (word.strands() < 2) return std::nullopt;
  const auto counts = letter_counts(ensure_all_generators_both_signs(word));
  int total = 0;
  for (int i = 1; i <= counts.generators(); ++i) {
    const int diff = counts.count(i, 1) - counts.count(i, -1);
    // A tie leaves epsilon undefined; either choice contributes the same.
    const int epsilon = diff > 0 ? -1 : (diff < 0 ? 1 : -1);
    total += counts.count(i, -epsilon) + 2 * (counts.count(i, epsilon) - 1);
  }
  return total;
}

FpbkDiagramBound fpbk_bound_diagram(const SeifertGraph& g, FpbkPolicy policy) {
  require_connected(g);
  FpbkDiagramBound out;
  out.analysis = analyze_tree(g, bfs_spanning_tree(g, 1), policy);
  out.value = fpbk_formula(g.crossings(), g.circles(), out.analysis.beta, out.analysis.gamma);
  check_decomposition(out.value, g.crossings(), g.circles(), out.analysis.beta, out.analysis.gamma);
  return out;
}

int fpbk_value_for_tree(const SeifertGraph& g, const SpanningTree& tree) {
  const auto choice = compute_beta(g, tree);
  const int gamma = compute_gamma(g, tree, choice.signing);
  const int value = fpbk_formula(g.crossings(), g.circles(), choice.beta, gamma);
  check_decomposition(value, g.crossings(), g.circles(), choice.beta, gamma);
  return value;
}

GenusBlock genus_relations(const SeifertGraph& g, const BraidWord* braid,
                           const OrientedDiagram* diagram, bool user_asserts_minimal) {
  GenusBlock block;
  block.g_diagram = canonical_surface_genus(g);
  block.l = g.boundary_components();
  const int upper = 2 * block.g_diagram + block.l - 1;
  if (upper != g.crossings() - g.circles() + 1)
    throw InvariantError("2 g_S + l - 1 = " + std::to_string(upper) + " differs from c - s + 1");

  std::vector<std::string> reasons;
  if (braid && is_positive(*braid)) reasons.emplace_back("positive braid closure");
  if (braid && is_alternating_closure(*braid)) reasons.emplace_back("alternating braid closure");
  if (diagram && is_alternating_diagram(*diagram)) reasons.emplace_back("alternating diagram");
  if (user_asserts_minimal) reasons.emplace_back("canonical surface asserted minimal genus");
  for (const auto& r : reasons) {
    if (!block.reason.empty()) block.reason += "; ";
    block.reason += r;
  }
  if (!reasons.empty()) {
    block.exact_bk = upper;
    block.lower_bk = upper;
  }
  return block;
}

CascadeResult cascade(const std::vector<BoundEntry>& entries) {
  constexpr int none = std::numeric_limits<int>::max();
  int bk = none;
  int fp = none;
  int fpbk = none;
  for (const auto& e : entries) {
    int& slot = e.quantity == Quantity::bk ? bk : (e.quantity == Quantity::fp ? fp : fpbk);
    slot = std::min(slot, e.value);
  }
  if (fpbk == none) throw InvariantError("cascade needs at least one fpbk bound");
  CascadeResult out;
  out.best.fpbk = fpbk;
  out.best.fp = std::min(fp, out.best.fpbk);
  out.best.bk = std::min(bk, out.best.fp);
  out.possibly_trivial = out.best.fp < 3;
  return out;
}

namespace {

BoundsReport evaluate_graph(const SeifertGraph& g, const BraidWord* braid,
                            const OrientedDiagram* diagram, const EngineOptions& options,
                            InputSummary input) {
  BoundsReport report;
  report.input = std::move(input);
  report.options = options;
  report.flags.warnings = validate(g).warnings;
  if (!is_connected(g))
    throw InputError("split_link",
                     "closure is a split diagram (Seifert graph disconnected); evaluate each piece separately");
  report.s = g.circles();
  report.c = g.crossings();
  report.l = g.boundary_components();

  auto add = [&](std::string name, Quantity q, int value, std::string ref, std::string note = {}) {
    report.bounds.push_back({std::move(name), q, value, std::move(ref), std::move(note)});
  };

  const auto coil = braid ? find_coil_prefix(*braid) : std::nullopt;
  if (coil) {
    add("bk_braid", Quantity::bk, *bk_bound_braid(*braid), "coil-braid: bk <= |W|",
        "rotation " + std::to_string(coil->rotation) + ", W = " +
            (coil->remainder.empty() ? std::string("(empty)") : coil->remainder.to_string()));
  }
  add("bk_diagram", Quantity::bk, bk_bound_diagram(g), "seifert-tree: bk <= c - s + 1");
  if (braid) add("fp_braid", Quantity::fp, fp_bound_braid(*braid), "braid: fp <= m + n - 1");
  add("fp_diagram", Quantity::fp, fp_bound_diagram(g), "seifert-tree: fp <= c + s - 1");
  try {
    auto refined = fp_bound_refined(g);
    add("fp_refined", Quantity::fp, refined.value,
        "seifert-tree: fp <= (c - s + 1) + 2|S|",
        std::string(refined.augmentation.exact ? "exact" : "greedy") + " augmentation, |S| = " +
            std::to_string(refined.augmentation.tree_edge_ids.size()));
    report.flags.augmentation_exact = refined.augmentation.exact;
    report.augmentation = std::move(refined.augmentation);
  } catch (const InputError& e) {
    if (e.code() != "unsatisfiable_augmentation") throw;
    report.flags.warnings.push_back(std::string("fp_refined omitted: ") + e.what());
  }
  if (coil) {
    add("fpbk_braid", Quantity::fpbk, *fpbk_bound_braid(*braid), "coil-braid: fpbk <= |W| + 2 pos(W)");
  }
  if (braid) {
    if (const auto v = fpbk_bound_signed_counts(*braid))
      add("fpbk_signed_counts", Quantity::fpbk, *v,
          "braid: fpbk <= sum a_i(-e_i) + 2(a_i(e_i) - 1)", "word padded with cancelling pairs");
  }

  auto min_beta = fpbk_bound_diagram(g, FpbkPolicy::min_beta);
  add("fpbk_diagram", Quantity::fpbk, min_beta.value,
      "seifert-tree: fpbk <= (3c - 2 gamma) - (3s - beta) + 3",
      "min-beta: beta = " + std::to_string(min_beta.analysis.beta) +
          ", gamma = " + std::to_string(min_beta.analysis.gamma));
  report.analysis = std::move(min_beta.analysis);
  if (options.policy == FpbkPolicy::min_bound) {
    auto min_bound = fpbk_bound_diagram(g, FpbkPolicy::min_bound);
    add("fpbk_diagram_min_bound", Quantity::fpbk, min_bound.value,
        "seifert-tree: fpbk <= (3c - 2 gamma) - (3s - beta) + 3",
        "min-bound: beta = " + std::to_string(min_bound.analysis.beta) + ", gamma = " +
            std::to_string(min_bound.analysis.gamma) +
            "; signing chosen to minimize the value, interpretation ambiguous");
    report.analysis = std::move(min_bound.analysis);
    report.flags.policy_ambiguous = true;
  }
  if (options.exhaustive) {
    const auto trees = enumerate_spanning_trees(g, options.tree_limit);
    const auto best = min_fpbk_over_trees_parallel(g, trees.trees);
    add("fpbk_diagram_exhaustive", Quantity::fpbk, best.value,
        "seifert-tree: fpbk <= (3c - 2 gamma) - (3s - beta) + 3",
        "min-beta, minimum over " + std::to_string(trees.trees.size()) + " spanning trees" +
            (trees.truncated ? " (truncated)" : ""));
    report.flags.trees_truncated = trees.truncated;
  }

  report.genus = genus_relations(g, braid, diagram, options.assert_minimal);
  const auto result = cascade(report.bounds);
  report.best = result.best;
  report.flags.possibly_trivial = result.possibly_trivial;
  if (!(report.best.bk <= report.best.fp && report.best.fp <= report.best.fpbk))
    throw InvariantError("cascade is not monotone");
  if (report.genus.lower_bk && *report.genus.lower_bk > report.best.bk)
    throw InvariantError("lower bound 2g + l - 1 exceeds the best upper bound for bk");
  return report;
}

}  // namespace

BoundsReport evaluate(const BraidWord& word, const EngineOptions& options) {
  return evaluate_graph(closure_seifert_graph(word), &word, nullptr, options,
                        {"braid", word.to_string(), word.strands()});
}

BoundsReport evaluate(const OrientedDiagram& diagram, const EngineOptions& options) {
  return evaluate_graph(seifert_circles(diagram), nullptr, &diagram, options,
                        {"pd", std::to_string(diagram.crossings.size()) + " crossings", std::nullopt});
}

BoundsReport evaluate(const SeifertGraph& g, const EngineOptions& options) {
  return evaluate_graph(g, nullptr, nullptr, options, {"graph", g.provenance().descriptor, std::nullopt});
}

}  // namespace plumb
