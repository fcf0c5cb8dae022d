#pragma once

#include <array>
#include <map>
#include <string_view>
#include <vector>

namespace plumb {

class SeifertGraph;

// Knot-Atlas convention: arcs listed counterclockwise starting from the
// incoming under-strand, so the under-strand runs slot 0 -> slot 2 and the
// over-strand occupies slots 1 and 3.
struct PDCrossing {
  std::array<int, 4> arcs{};
};

struct PDCode {
  std::vector<PDCrossing> crossings;
  bool unknot = false;  // the literal "U": a crossingless unknot
};

enum class Passage { under, over };

struct OrientedCrossing {
  std::array<int, 4> arcs{};
  std::array<bool, 4> incoming{};
  int over_in_slot = 1;  // 1 or 3
  int sign = 1;
};

// Walking a component visits crossings in order; each visit records whether
// the strand went under or over.
struct PassageVisit {
  int crossing = 0;
  Passage passage = Passage::under;
};

struct OrientedDiagram {
  std::vector<OrientedCrossing> crossings;
  int components = 1;
  std::map<int, int> arc_component;  // arc label -> component id (0-based)
  std::vector<std::vector<PassageVisit>> walks;  // per component
};

// Grammar: "X[a,b,c,d]" items separated by whitespace, labels positive
// integers; or the single token "U". Every label must occur exactly twice.
PDCode parse_pd(std::string_view text);

// Traces components, orients them (the under-strand fixes direction; a
// component that never passes under is directed into the first listed
// occurrence of its lowest label) and computes right-handed crossing signs.
// Throws InputError for inconsistent orientation, non-planar or split
// diagrams.
OrientedDiagram orient_diagram(const PDCode& pd);

// Oriented smoothing at every crossing; circles become vertices in order of
// first appearance (crossing index, then slot).
SeifertGraph seifert_circles(const OrientedDiagram& diagram);

// Literal rule: along every component, cyclically consecutive passages
// alternate between over and under.
bool is_alternating_diagram(const OrientedDiagram& diagram);

}  // namespace plumb
