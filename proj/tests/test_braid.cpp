#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plumb/braid.hpp"
#include "plumb/seifert_graph.hpp"
#include "support/expect.hpp"

using namespace plumb;

TEST_CASE("parse simple words") {
  const auto w = parse_braid_word("1 1 1");
  CHECK(w.strands() == 2);
  CHECK(w.length() == 3);
  for (const auto& l : w.letters()) CHECK(l == BraidLetter{1, 1});

  const auto f8 = parse_braid_word("1 -2 1 -2");
  CHECK(f8.strands() == 3);
  REQUIRE(f8.length() == 4);
  CHECK(f8.letters()[1] == BraidLetter{2, -1});
  CHECK(f8.to_string() == "1 -2 1 -2");

  const auto trivial = parse_braid_word("", 3);
  CHECK(trivial.strands() == 3);
  CHECK(trivial.empty());
}

TEST_CASE("parse errors") {
  CHECK(error_code([] { parse_braid_word(""); }) == "parse_error");
  CHECK(error_code([] { parse_braid_word("1 0"); }) == "parse_error");
  CHECK(error_code([] { parse_braid_word("1 x"); }) == "parse_error");
  CHECK(error_code([] { parse_braid_word("3", 3); }) == "parse_error");
  CHECK(error_code([] { parse_braid_word("1", 0); }) == "parse_error");
  CHECK(parse_braid_word("  1\t-1 ", 4).strands() == 4);
}

TEST_CASE("permutation and components") {
  const auto p1 = underlying_permutation(parse_braid_word("1"));
  CHECK(p1(1) == 2);
  CHECK(p1(2) == 1);
  CHECK(underlying_permutation(parse_braid_word("1 1")).is_identity());

  // s1 then s2: 1 -> 2 -> 3, 2 -> 1, 3 -> 2
  const auto p = underlying_permutation(parse_braid_word("1 2"));
  CHECK(p(1) == 3);
  CHECK(p(2) == 1);
  CHECK(p(3) == 2);
  CHECK(p.cycle_count() == 1);

  CHECK(closure_component_count(parse_braid_word("1 1 1")) == 1);
  CHECK(closure_component_count(parse_braid_word("1 1")) == 2);
  CHECK(closure_component_count(parse_braid_word("", 3)) == 3);
}

TEST_CASE("coil prefix") {
  const auto a = find_coil_prefix(parse_braid_word("1 1 1"));
  REQUIRE(a);
  CHECK(a->rotation == 0);
  CHECK(a->remainder.to_string() == "1 1");

  const auto b = find_coil_prefix(parse_braid_word("2 1 -2 1"));
  REQUIRE(b);
  CHECK(b->rotation == 0);
  CHECK(b->remainder.to_string() == "-2 1");

  CHECK_FALSE(find_coil_prefix(parse_braid_word("-1 -1")));

  // needs a cyclic rotation
  const auto c = find_coil_prefix(parse_braid_word("1 -2 2 1"));
  REQUIRE(c);
  CHECK(c->rotation == 2);
  CHECK(c->remainder.to_string() == "1 -2");
}

TEST_CASE("letter counts and padding") {
  const auto c = letter_counts(parse_braid_word("1 1 1 1 -1"));
  CHECK(c.count(1, 1) == 4);
  CHECK(c.count(1, -1) == 1);

  const auto t = letter_counts(parse_braid_word("", 3));
  CHECK(t.generators() == 2);
  CHECK(t.count(1, 1) + t.count(1, -1) + t.count(2, 1) + t.count(2, -1) == 0);

  const auto f = letter_counts(parse_braid_word("1 -2 1 -2"));
  CHECK(f.count(1, 1) == 2);
  CHECK(f.count(1, -1) == 0);
  CHECK(f.count(2, 1) == 0);
  CHECK(f.count(2, -1) == 2);

  CHECK(ensure_all_generators_both_signs(parse_braid_word("1 1 1")).to_string() == "1 1 1 1 -1");
  CHECK(ensure_all_generators_both_signs(parse_braid_word("1 -1")).to_string() == "1 -1");
  const auto padded = letter_counts(ensure_all_generators_both_signs(parse_braid_word("1 -2 1 -2")));
  CHECK(padded.count(1, 1) == 3);
  CHECK(padded.count(1, -1) == 1);
  CHECK(padded.count(2, 1) == 1);
  CHECK(padded.count(2, -1) == 3);
}

TEST_CASE("closure graph") {
  const auto g = closure_seifert_graph(parse_braid_word("1 1 1"));
  CHECK(g.circles() == 2);
  CHECK(g.crossings() == 3);
  CHECK(g.boundary_components() == 1);
  for (const auto& e : g.edges()) {
    CHECK(e.u == 1);
    CHECK(e.v == 2);
    CHECK(e.sign == 1);
  }

  const auto f = closure_seifert_graph(parse_braid_word("1 -2 1 -2"));
  CHECK(f.circles() == 3);
  CHECK(f.boundary_components() == 1);
  int plus12 = 0, minus23 = 0;
  for (const auto& e : f.edges()) {
    if (e.u == 1 && e.v == 2 && e.sign == 1) ++plus12;
    if (e.u == 2 && e.v == 3 && e.sign == -1) ++minus23;
  }
  CHECK(plus12 == 2);
  CHECK(minus23 == 2);

  const auto u = closure_seifert_graph(parse_braid_word("", 1));
  CHECK(u.circles() == 1);
  CHECK(u.crossings() == 0);
  CHECK(u.boundary_components() == 1);

  // Hopf: both strands pass through both positions
  const auto h = closure_seifert_graph(parse_braid_word("1 1"));
  REQUIRE(h.provenance().vertex_link_components.size() == 2);
  CHECK(h.provenance().vertex_link_components[0] == std::vector<int>{0, 1});
  CHECK(h.provenance().vertex_link_components[1] == std::vector<int>{0, 1});
  // sigma1 sigma3 sigma3 in B_4 splits into an unknot and a Hopf link piece
  const auto m = closure_seifert_graph(parse_braid_word("1 3 3"));
  CHECK(m.provenance().vertex_link_components[0] == m.provenance().vertex_link_components[1]);
  CHECK(m.provenance().vertex_link_components[2].size() == 2);
}

TEST_CASE("positivity and alternation") {
  CHECK(is_positive(parse_braid_word("1 1 1")));
  CHECK(is_alternating_closure(parse_braid_word("1 1 1")));
  CHECK_FALSE(is_positive(parse_braid_word("1 -2 1 -2")));
  CHECK(is_alternating_closure(parse_braid_word("1 -2 1 -2")));
  CHECK(is_positive(parse_braid_word("1 2")));
  CHECK_FALSE(is_alternating_closure(parse_braid_word("1 2")));
  CHECK_FALSE(is_positive(parse_braid_word("", 2)));
}
