#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plumb {

class SeifertGraph;

// sigma_index^sign
struct BraidLetter {
  int index = 1;
  int sign = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  // Throws InputError if strands < 1, a sign is not +-1, or an index is
  // outside [1, strands-1].
  BraidWord(int strands, std::vector<BraidLetter> letters);

  int strands() const noexcept { return strands_; }
  std::span<const BraidLetter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Same grammar parse_braid_word accepts: "1 -2 1 -2".
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

// A bijection on {1..n}; images[p-1] is the image of p.
struct Permutation {
  std::vector<int> images;

  int size() const noexcept { return static_cast<int>(images.size()); }
  int operator()(int p) const { return images.at(static_cast<std::size_t>(p - 1)); }
  int cycle_count() const;
  bool is_identity() const;
};

// Occurrence counts a_i(+1), a_i(-1) for i = 1..n-1.
class LetterCounts {
 public:
  explicit LetterCounts(int strands)
      : positive_(static_cast<std::size_t>(strands > 1 ? strands - 1 : 0), 0),
        negative_(positive_.size(), 0) {}

  int generators() const noexcept { return static_cast<int>(positive_.size()); }
  int count(int index, int sign) const {
    return (sign > 0 ? positive_ : negative_).at(static_cast<std::size_t>(index - 1));
  }
  void add(const BraidLetter& letter) {
    ++(letter.sign > 0 ? positive_ : negative_).at(static_cast<std::size_t>(letter.index - 1));
  }

 private:
  std::vector<int> positive_;
  std::vector<int> negative_;
};

struct CoilSplit {
  std::size_t rotation = 0;
  BraidWord remainder;
};

// Tokens are whitespace separated nonzero integers; k is sigma_k, -k its
// inverse. Without `strands` the count is max|k|+1 and an empty word is an
// error.
BraidWord parse_braid_word(std::string_view text, std::optional<int> strands = std::nullopt);

// Letters act left to right: the first letter's transposition is applied
// first, so sigma1 sigma2 in B_3 maps 1->3, 2->1, 3->2.
Permutation underlying_permutation(const BraidWord& word);

int closure_component_count(const BraidWord& word);

// First cyclic rotation that starts with sigma_{n-1} ... sigma_1 (all
// positive); the rest of the rotated word is returned as the remainder.
std::optional<CoilSplit> find_coil_prefix(const BraidWord& word);

LetterCounts letter_counts(const BraidWord& word);

// Appends sigma_i sigma_i^{-1} for every i missing one of the two signs.
BraidWord ensure_all_generators_both_signs(const BraidWord& word);

// One vertex per strand, one signed edge (i, i+1) per letter.
SeifertGraph closure_seifert_graph(const BraidWord& word);

bool is_positive(const BraidWord& word);

// Sufficient condition: letters of index i all carry sign f * (-1)^i for a
// single f. A false result does not certify a non-alternating link.
bool is_alternating_closure(const BraidWord& word);

}  // namespace plumb
