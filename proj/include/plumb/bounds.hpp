#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plumb/braid.hpp"
#include "plumb/pd.hpp"
#include "plumb/seifert_graph.hpp"
#include "plumb/spanning.hpp"

namespace plumb {

enum class Quantity { bk, fp, fpbk };

const char* to_string(Quantity q);

struct BoundEntry {
  std::string name;
  Quantity quantity = Quantity::bk;
  int value = 0;
  std::string ref;
  std::string note;
};

struct BestBounds {
  int bk = 0;
  int fp = 0;
  int fpbk = 0;

  friend bool operator==(const BestBounds&, const BestBounds&) = default;
};

struct GenusBlock {
  int g_diagram = 0;
  int l = 1;
  std::optional<int> lower_bk;
  std::optional<int> exact_bk;
  std::string reason;
};

struct BoundsFlags {
  bool possibly_trivial = false;
  bool policy_ambiguous = false;
  bool trees_truncated = false;
  std::optional<bool> augmentation_exact;
  std::vector<std::string> warnings;
};

struct InputSummary {
  std::string kind;  // braid | pd | graph | known
  std::string source;
  std::optional<int> strands;
};

struct EngineOptions {
  FpbkPolicy policy = FpbkPolicy::min_beta;
  bool exhaustive = false;
  bool assert_minimal = false;
  std::size_t tree_limit = 100000;
};

struct BoundsReport {
  InputSummary input;
  EngineOptions options;
  int s = 0;
  int c = 0;
  int l = 1;
  std::vector<BoundEntry> bounds;
  BestBounds best;
  GenusBlock genus;
  BoundsFlags flags;
  TreeAnalysis analysis;
  std::optional<Augmentation> augmentation;

  // First entry with this name, if any.
  const BoundEntry* find(const std::string& name) const;
};

// --- per-construction bounds -------------------------------------------

// |W| when the word has a coil prefix sigma_{n-1}..sigma_1 W.
std::optional<int> bk_bound_braid(const BraidWord& word);

// c - s + 1. Throws InputError (disconnected).
int bk_bound_diagram(const SeifertGraph& g);

// m + n - 1 over the full word.
int fp_bound_braid(const BraidWord& word);

// c + s - 1.
int fp_bound_diagram(const SeifertGraph& g);

struct RefinedFp {
  int value = 0;
  Augmentation augmentation;
};

// (c - s + 1) + 2 |S| with S the minimal augmentation of the BFS tree.
RefinedFp fp_bound_refined(const SeifertGraph& g);

// |W| + 2 * (positive letters of W) when a coil prefix exists.
std::optional<int> fpbk_bound_braid(const BraidWord& word);

// sum_i a_i(-e_i) + 2(a_i(e_i) - 1) after padding with cancelling pairs,
// e_i = -sign(a_i(+1) - a_i(-1)) and -1 on a tie. Absent for n < 2.
std::optional<int> fpbk_bound_signed_counts(const BraidWord& word);

struct FpbkDiagramBound {
  int value = 0;
  TreeAnalysis analysis;
};

// (3c - 2 gamma) - (3s - beta) + 3 on the BFS tree. Cross-checks the value
// against beta + gamma + 3(c - s + 1 - gamma) and throws InvariantError on
// mismatch.
FpbkDiagramBound fpbk_bound_diagram(const SeifertGraph& g, FpbkPolicy policy);

// Same formula on an arbitrary tree, min-beta signing.
int fpbk_value_for_tree(const SeifertGraph& g, const SpanningTree& tree);

// Genus of the canonical surface and, when the link is known to have
// g = g_c (positive braid, alternating, or asserted), the exact basket number
// 2g + l - 1.
GenusBlock genus_relations(const SeifertGraph& g, const BraidWord* braid,
                           const OrientedDiagram* diagram, bool user_asserts_minimal);

struct CascadeResult {
  BestBounds best;
  bool possibly_trivial = false;
};

// best.fpbk = min fpbk; best.fp = min(fp, best.fpbk); best.bk = min(bk,
// best.fp). A nontrivial link has fp >= 3, so best.fp < 3 flags a possibly
// trivial link. Throws InvariantError when no fpbk entry exists.
CascadeResult cascade(const std::vector<BoundEntry>& entries);

// --- full pipeline ---------------------------------------------------------

BoundsReport evaluate(const BraidWord& word, const EngineOptions& options = {});
BoundsReport evaluate(const OrientedDiagram& diagram, const EngineOptions& options = {});
BoundsReport evaluate(const SeifertGraph& g, const EngineOptions& options = {});

}  // namespace plumb
