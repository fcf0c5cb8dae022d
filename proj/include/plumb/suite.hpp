#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plumb/braid.hpp"

namespace plumb {

struct RandomBraidSpec {
  int min_strands = 2;
  int max_strands = 6;
  int max_length = 20;
};

// Seeded random words whose closures have connected Seifert graphs: n and
// m = length are uniform in [min_strands, max_strands] and [n-1, max_length],
// letters uniform over index and sign, disconnected closures rejected.
std::vector<BraidWord> random_connected_braids(std::size_t count, std::uint64_t seed,
                                               const RandomBraidSpec& spec = {});

// The checks every braid closure must satisfy.
enum class SuiteCheck {
  bk_genus_identity,     // bk_diagram = 2 g_S + l - 1
  fpbk_decomposition,    // fpbk_diagram = beta + gamma + 3(c - s + 1 - gamma), both policies
  orientation_parity,    // c - s + l even
  cascade_monotone,      // best.bk <= best.fp <= best.fpbk
  beta_bound,            // beta <= ceil((s-1)/2)
  sign_sum_lemma,        // BFS tree, both depth signings
  refinement_dominance,  // bk_diagram <= fp_refined <= fp_diagram
  gamma_complement,      // gamma(+) + gamma(-) = non-tree edge count
};

inline constexpr std::size_t kSuiteCheckCount = 8;

const char* to_string(SuiteCheck check);

struct CaseOutcome {
  std::vector<SuiteCheck> failed;
  std::string error;  // an exception escaped the pipeline

  bool passed() const noexcept { return failed.empty() && error.empty(); }
};

CaseOutcome check_braid_case(const BraidWord& word);

struct SuiteFailure {
  std::size_t index = 0;
  std::string word;
  std::string detail;
};

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<std::size_t> failures_per_check = std::vector<std::size_t>(kSuiteCheckCount, 0);
  std::vector<SuiteFailure> failures;  // ascending index

  bool all_passed() const noexcept { return passed == total; }
};

SuiteSummary run_suite_serial(std::span<const BraidWord> words);
SuiteSummary run_suite_parallel(std::span<const BraidWord> words);

}  // namespace plumb
