#include "plumb/report.hpp"

#include <sstream>

#include "plumb/errors.hpp"

namespace plumb {

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json report_to_json(const BoundsReport& r) {
  Json j;
  Json input;
  input["kind"] = r.input.kind;
  input["source"] = r.input.source;
  input["strands"] = optional_int(r.input.strands);
  input["fpbk_policy"] = to_string(r.options.policy);
  input["exhaustive"] = r.options.exhaustive;
  input["assert_minimal_genus"] = r.options.assert_minimal;
  j["input"] = std::move(input);

  j["graph"] = {{"s", r.s}, {"c", r.c}, {"l", r.l}};

  Json bounds = Json::array();
  for (const auto& e : r.bounds) {
    Json entry;
    entry["name"] = e.name;
    entry["quantity"] = to_string(e.quantity);
    entry["value"] = e.value;
    entry["ref"] = e.ref;
    entry["note"] = e.note;
    bounds.push_back(std::move(entry));
  }
  j["bounds"] = std::move(bounds);
  j["best"] = {{"bk", r.best.bk}, {"fp", r.best.fp}, {"fpbk", r.best.fpbk}};

  Json genus;
  genus["g_diagram"] = r.genus.g_diagram;
  genus["l"] = r.genus.l;
  genus["lower_bk"] = optional_int(r.genus.lower_bk);
  genus["exact_bk"] = optional_int(r.genus.exact_bk);
  genus["reason"] = r.genus.reason;
  j["genus"] = std::move(genus);

  Json flags;
  flags["possibly_trivial"] = r.flags.possibly_trivial;
  flags["policy_ambiguous"] = r.flags.policy_ambiguous;
  flags["trees_truncated"] = r.flags.trees_truncated;
  flags["augmentation_exact"] =
      r.flags.augmentation_exact ? Json(*r.flags.augmentation_exact) : Json(nullptr);
  flags["exactness_reason"] = r.genus.reason;
  flags["warnings"] = r.flags.warnings;
  j["flags"] = std::move(flags);

  const auto& a = r.analysis;
  Json analysis;
  analysis["policy"] = to_string(a.policy);
  analysis["root"] = a.tree.root;
  analysis["tree_edges"] = a.tree.tree_edge_ids;
  analysis["top_sign"] = a.signing.top_sign;
  analysis["beta"] = a.beta;
  analysis["gamma"] = a.gamma;
  Json sums = Json::array();
  for (const auto& [id, sum] : a.path_sums) sums.push_back({{"edge", id}, {"sum", sum}});
  analysis["path_sums"] = std::move(sums);
  if (r.augmentation)
    analysis["augmentation"] = {{"tree_edges", r.augmentation->tree_edge_ids},
                                {"exact", r.augmentation->exact}};
  else
    analysis["augmentation"] = nullptr;
  j["analysis"] = std::move(analysis);
  return j;
}

std::string report_to_text(const BoundsReport& r, bool color) {
  const std::string bold = color ? "\033[1m" : "";
  const std::string green = color ? "\033[32m" : "";
  const std::string reset = color ? "\033[0m" : "";
  std::ostringstream out;
  out << bold << "input" << reset << "  " << r.input.kind << ": " << r.input.source;
  if (r.input.strands) out << " (" << *r.input.strands << " strands)";
  out << "\n";
  out << bold << "graph" << reset << "  s = " << r.s << ", c = " << r.c << ", l = " << r.l << "\n";
  out << bold << "bounds" << reset << "\n";
  for (const auto& e : r.bounds) {
    out << "  " << e.name << std::string(e.name.size() < 24 ? 24 - e.name.size() : 1, ' ') << e.value
        << "   [" << e.ref << "]";
    if (!e.note.empty()) out << "  " << e.note;
    out << "\n";
  }
  out << bold << "best" << reset << "   " << green << "bk <= " << r.best.bk << ", fp <= " << r.best.fp
      << ", fpbk <= " << r.best.fpbk << reset << "\n";
  out << bold << "genus" << reset << "  g_diagram = " << r.genus.g_diagram << ", l = " << r.genus.l;
  if (r.genus.exact_bk) out << ", exact bk = " << *r.genus.exact_bk << " (" << r.genus.reason << ")";
  out << "\n";
  out << bold << "tree" << reset << "   policy " << to_string(r.analysis.policy) << ", top sign "
      << (r.analysis.signing.top_sign > 0 ? "+" : "-") << ", beta = " << r.analysis.beta
      << ", gamma = " << r.analysis.gamma << "\n";
  if (r.flags.possibly_trivial) out << "note   fp < 3: the link may be trivial\n";
  if (r.flags.policy_ambiguous)
    out << "note   min-bound signing is an aggressive reading of the fpbk diagram bound\n";
  if (r.flags.trees_truncated) out << "note   spanning tree enumeration was truncated\n";
  for (const auto& w : r.flags.warnings) out << "warn   " << w << "\n";
  return out.str();
}

Json error_to_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

SeifertGraph graph_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("parse_error", "raw graph must be a JSON object");
    for (const char* key : {"s", "l", "edges"})
      if (!j.contains(key)) throw InputError("parse_error", std::string("raw graph needs key '") + key + "'");
    const int s = j.at("s").get<int>();
    const int l = j.at("l").get<int>();
    std::vector<SeifertGraph::Triple> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3)
        throw InputError("parse_error", "each edge must be [u, v, sign]");
      edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    Provenance prov;
    prov.kind = SourceKind::raw;
    prov.descriptor = "raw graph";
    if (j.contains("name") && j.at("name").is_string())
      prov.descriptor = j.at("name").get<std::string>();
    return SeifertGraph::from_triples(s, edges, l, std::move(prov));
  } catch (const nlohmann::json::exception& e) {
    throw InputError("parse_error", std::string("raw graph: ") + e.what());
  }
}

Json graph_to_json(const SeifertGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.sign});
  return {{"s", g.circles()}, {"l", g.boundary_components()}, {"edges", std::move(edges)}};
}

Json fixture_to_json(const Fixture& f) {
  Json j;
  j["name"] = f.name;
  j["description"] = f.description;
  if (f.braid)
    j["braid"] = {{"word", f.braid->to_string()}, {"strands", f.braid->strands()}};
  else
    j["graph"] = graph_to_json(*f.raw_graph);
  return j;
}

}  // namespace plumb
