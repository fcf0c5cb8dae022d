#include "plumb/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "plumb/errors.hpp"
#include "plumb/seifert_graph.hpp"

namespace plumb {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw InputError("parse_error", "braid needs at least one strand");
  for (const auto& letter : letters_) {
    if (letter.sign != 1 && letter.sign != -1)
      throw InputError("parse_error", "braid letter sign must be +1 or -1");
    if (letter.index < 1 || letter.index > strands_ - 1)
      throw InputError("parse_error", "generator sigma_" + std::to_string(letter.index) +
                                          " does not exist on " + std::to_string(strands_) +
                                          " strands");
  }
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& letter : letters_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(letter.sign * letter.index);
  }
  return out;
}

int Permutation::cycle_count() const {
  std::vector<char> seen(images.size(), 0);
  int cycles = 0;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t p = start; !seen[p]; p = static_cast<std::size_t>(images[p] - 1)) seen[p] = 1;
  }
  return cycles;
}

bool Permutation::is_identity() const {
  for (std::size_t p = 0; p < images.size(); ++p)
    if (images[p] != static_cast<int>(p) + 1) return false;
  return true;
}

BraidWord parse_braid_word(std::string_view text, std::optional<int> strands) {
  if (strands && *strands < 1) throw InputError("parse_error", "strand count must be positive");

  std::vector<BraidLetter> letters;
  std::size_t pos = 0;
  const auto is_space = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' || ch == '\v';
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;

    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
      throw InputError("parse_error", "not an integer: '" + std::string(token) + "'");
    if (value == 0) throw InputError("parse_error", "token 0 is not a generator");
    const int index = std::abs(value);
    if (strands && index >= *strands)
      throw InputError("parse_error", "generator " + std::string(token) + " needs more than " +
                                          std::to_string(*strands) + " strands");
    letters.push_back({index, value > 0 ? 1 : -1});
  }

  if (!strands) {
    if (letters.empty())
      throw InputError("parse_error", "empty braid word needs an explicit strand count");
    int max_index = 0;
    for (const auto& l : letters) max_index = std::max(max_index, l.index);
    strands = max_index + 1;
  }
  return BraidWord(*strands, std::move(letters));
}

Permutation underlying_permutation(const BraidWord& word) {
  Permutation perm;
  perm.images.resize(static_cast<std::size_t>(word.strands()));
  std::iota(perm.images.begin(), perm.images.end(), 1);
  // images[p] tracks where the point starting at p has been carried so far.
  for (auto& image : perm.images) {
    for (const auto& letter : word.letters()) {
      if (image == letter.index)
        image = letter.index + 1;
      else if (image == letter.index + 1)
        image = letter.index;
    }
  }
  return perm;
}

int closure_component_count(const BraidWord& word) {
  return underlying_permutation(word).cycle_count();
}

std::optional<CoilSplit> find_coil_prefix(const BraidWord& word) {
  const int n = word.strands();
  const std::size_t prefix = static_cast<std::size_t>(n - 1);
  const auto letters = word.letters();
  const std::size_t m = letters.size();
  if (m < prefix) return std::nullopt;

  const std::size_t rotations = m == 0 ? 1 : m;
  for (std::size_t r = 0; r < rotations; ++r) {
    bool match = true;
    for (std::size_t j = 0; j < prefix && match; ++j) {
      const auto& letter = letters[(r + j) % m];
      match = letter.sign == 1 && letter.index == n - 1 - static_cast<int>(j);
    }
    if (!match) continue;
    std::vector<BraidLetter> rest;
    rest.reserve(m - prefix);
    for (std::size_t j = prefix; j < m; ++j) rest.push_back(letters[(r + j) % m]);
    return CoilSplit{r, BraidWord(n, std::move(rest))};
  }
  return std::nullopt;
}

LetterCounts letter_counts(const BraidWord& word) {
  LetterCounts counts(word.strands());
  for (const auto& letter : word.letters()) counts.add(letter);
  return counts;
}

BraidWord ensure_all_generators_both_signs(const BraidWord& word) {
  const auto counts = letter_counts(word);
  std::vector<BraidLetter> letters(word.letters().begin(), word.letters().end());
  for (int i = 1; i <= counts.generators(); ++i) {
    if (counts.count(i, 1) == 0 || counts.count(i, -1) == 0) {
      letters.push_back({i, 1});
      letters.push_back({i, -1});
    }
  }
  return BraidWord(word.strands(), std::move(letters));
}

SeifertGraph closure_seifert_graph(const BraidWord& word) {
  const int n = word.strands();
  std::vector<SignedEdge> edges;
  edges.reserve(word.length());
  int id = 0;
  for (const auto& letter : word.letters())
    edges.push_back({letter.index, letter.index + 1, letter.sign, id++});

  // Link components touching each strand position: label positions by the
  // cycle of the closure permutation, then follow the labels through the word.
  const auto perm = underlying_permutation(word);
  std::vector<int> cycle_of(static_cast<std::size_t>(n), -1);
  int cycles = 0;
  for (int start = 1; start <= n; ++start) {
    if (cycle_of[static_cast<std::size_t>(start - 1)] >= 0) continue;
    for (int p = start; cycle_of[static_cast<std::size_t>(p - 1)] < 0; p = perm(p))
      cycle_of[static_cast<std::size_t>(p - 1)] = cycles;
    ++cycles;
  }
  std::vector<std::set<int>> touching(static_cast<std::size_t>(n));
  std::vector<int> at_position = cycle_of;
  for (int p = 0; p < n; ++p) touching[static_cast<std::size_t>(p)].insert(at_position[static_cast<std::size_t>(p)]);
  for (const auto& letter : word.letters()) {
    const auto a = static_cast<std::size_t>(letter.index - 1);
    std::swap(at_position[a], at_position[a + 1]);
    touching[a].insert(at_position[a]);
    touching[a + 1].insert(at_position[a + 1]);
  }

  Provenance prov;
  prov.kind = SourceKind::braid;
  prov.descriptor = "braid B_" + std::to_string(n) + ": " + word.to_string();
  for (const auto& set : touching) prov.vertex_link_components.emplace_back(set.begin(), set.end());
  return SeifertGraph(n, std::move(edges), cycles, std::move(prov));
}

bool is_positive(const BraidWord& word) {
  if (word.empty()) return false;
  return std::all_of(word.letters().begin(), word.letters().end(),
                     [](const BraidLetter& l) { return l.sign == 1; });
}

bool is_alternating_closure(const BraidWord& word) {
  for (const int f : {1, -1}) {
    const bool fits = std::all_of(word.letters().begin(), word.letters().end(),
                                  [f](const BraidLetter& l) {
                                    const int parity = l.index % 2 == 0 ? 1 : -1;
                                    return l.sign == f * parity;
                                  });
    if (fits) return true;
  }
  return false;
}

}  // namespace plumb
