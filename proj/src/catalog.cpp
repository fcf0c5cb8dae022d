#include "plumb/catalog.hpp"

#include <algorithm>

namespace plumb {

SeifertGraph Fixture::graph() const {
  return braid ? closure_seifert_graph(*braid) : *raw_graph;
}

int fixture_l_for_figure2() {
  // Traced once from the drawing: following the curve through all seven
  // crossing gaps returns to the start after visiting every piece, so the
  // link is a knot. Parity check: c - s + l = 7 - 4 + 1 is even.
  return 1;
}

SeifertGraph figure2_graph() {
  // Circles a, d, b, c are vertices 1, 2, 3, 4; with this numbering the BFS
  // tree from a is the drawn tree {a-b, a-d, d-c}.
  constexpr int a = 1, d = 2, b = 3, c = 4;
  Provenance prov;
  prov.kind = SourceKind::raw;
  prov.descriptor = "figure2: four Seifert circles a, b, c, d and seven bands";
  return SeifertGraph::from_triples(4,
                                    {{a, b, -1},
                                     {a, b, -1},
                                     {b, c, -1},
                                     {b, c, -1},
                                     {b, c, -1},
                                     {a, d, 1},
                                     {d, c, 1}},
                                    fixture_l_for_figure2(), std::move(prov));
}

namespace {

Fixture braid_fixture(std::string name, std::string description, const char* word, int strands,
                      int components, int genus, bool alternating, bool positive,
                      std::vector<ExpectedBound> expected, BestBounds best,
                      std::optional<int> exact) {
  Fixture f;
  f.name = std::move(name);
  f.description = std::move(description);
  f.braid = parse_braid_word(word, strands);
  f.components = components;
  f.genus = genus;
  f.alternating = alternating;
  f.positive = positive;
  f.expected = std::move(expected);
  f.expected_best = best;
  f.expected_exact_bk = exact;
  return f;
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  out.push_back(braid_fixture("unknot", "trivial braid on one strand", "", 1, 1, 0, true, false,
                              {{"bk_braid", 0},
                               {"bk_diagram", 0},
                               {"fp_braid", 0},
                               {"fp_diagram", 0},
                               {"fp_refined", 0},
                               {"fpbk_braid", 0},
                               {"fpbk_diagram", 0}},
                              {0, 0, 0}, 0));
  out.push_back(braid_fixture("hopf", "Hopf link, closure of sigma1^2", "1 1", 2, 2, 0, true, true,
                              {{"bk_braid", 1},
                               {"bk_diagram", 1},
                               {"fp_braid", 3},
                               {"fp_diagram", 3},
                               {"fp_refined", 3},
                               {"fpbk_braid", 3},
                               {"fpbk_signed_counts", 3},
                               {"fpbk_diagram", 3}},
                              {1, 3, 3}, 1));
  out.push_back(braid_fixture("trefoil", "right-handed trefoil, sigma1^3", "1 1 1", 2, 1, 1, true,
                              true,
                              {{"bk_braid", 2},
                               {"bk_diagram", 2},
                               {"fp_braid", 4},
                               {"fp_diagram", 4},
                               {"fp_refined", 4},
                               {"fpbk_braid", 6},
                               {"fpbk_signed_counts", 4},
                               {"fpbk_diagram", 6}},
                              {2, 4, 4}, 2));
  out.push_back(braid_fixture("L4", "closure of sigma1^4 in B_2", "1 1 1 1", 2, 2, 1, true, true,
                              {{"bk_braid", 3},
                               {"bk_diagram", 3},
                               {"fp_braid", 5},
                               {"fp_diagram", 5},
                               {"fp_refined", 5},
                               {"fpbk_braid", 9},
                               {"fpbk_signed_counts", 5},
                               {"fpbk_diagram", 9}},
                              {3, 5, 5}, 3));
  out.push_back(braid_fixture("torus2_5", "(2,5) torus knot, sigma1^5", "1 1 1 1 1", 2, 1, 2, true,
                              true,
                              {{"bk_braid", 4},
                               {"bk_diagram", 4},
                               {"fp_braid", 6},
                               {"fp_diagram", 6},
                               {"fp_refined", 6},
                               {"fpbk_braid", 12},
                               {"fpbk_signed_counts", 6},
                               {"fpbk_diagram", 12}},
                              {4, 6, 6}, 4));
  out.push_back(braid_fixture("L6", "closure of sigma1^6 in B_2", "1 1 1 1 1 1", 2, 2, 2, true, true,
                              {{"bk_braid", 5},
                               {"bk_diagram", 5},
                               {"fp_braid", 7},
                               {"fp_diagram", 7},
                               {"fp_refined", 7},
                               {"fpbk_braid", 15},
                               {"fpbk_signed_counts", 7},
                               {"fpbk_diagram", 15}},
                              {5, 7, 7}, 5));
  out.push_back(braid_fixture("torus2_7", "(2,7) torus knot, sigma1^7", "1 1 1 1 1 1 1", 2, 1, 3,
                              true, true,
                              {{"bk_braid", 6},
                               {"bk_diagram", 6},
                               {"fp_braid", 8},
                               {"fp_diagram", 8},
                               {"fp_refined", 8},
                               {"fpbk_braid", 18},
                               {"fpbk_signed_counts", 8},
                               {"fpbk_diagram", 18}},
                              {6, 8, 8}, 6));
  out.push_back(braid_fixture("torus2_8", "(2,8) torus link, sigma1^8", "1 1 1 1 1 1 1 1", 2, 2, 3,
                              true, true,
                              {{"bk_braid", 7},
                               {"bk_diagram", 7},
                               {"fp_braid", 9},
                               {"fp_diagram", 9},
                               {"fp_refined", 9},
                               {"fpbk_braid", 21},
                               {"fpbk_signed_counts", 9},
                               {"fpbk_diagram", 21}},
                              {7, 9, 9}, 7));
  out.push_back(braid_fixture("figure8", "figure-eight knot, sigma1 sigma2^-1 sigma1 sigma2^-1",
                              "1 -2 1 -2", 3, 1, 1, true, false,
                              {{"bk_diagram", 2},
                               {"fp_braid", 6},
                               {"fp_diagram", 6},
                               {"fp_refined", 6},
                               {"fpbk_signed_counts", 6},
                               {"fpbk_diagram", 6}},
                              {2, 6, 6}, 2));

  Fixture fig;
  fig.name = "figure2";
  fig.description = "the knot with Seifert graph a-b (-) x2, b-c (-) x3, a-d (+), d-c (+)";
  fig.raw_graph = figure2_graph();
  fig.components = fixture_l_for_figure2();
  fig.genus = 2;
  fig.expected = {{"bk_diagram", 4}, {"fp_diagram", 10}, {"fp_refined", 6}, {"fpbk_diagram", 13}};
  fig.expected_best = {4, 6, 13};
  out.push_back(std::move(fig));
  return out;
}

}  // namespace

const std::vector<Fixture>& load_fixtures() {
  static const std::vector<Fixture> fixtures = build();
  return fixtures;
}

const Fixture* find_fixture(std::string_view name) {
  const auto& all = load_fixtures();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Fixture& f) { return f.name == name; });
  return it == all.end() ? nullptr : &*it;
}

}  // namespace plumb
