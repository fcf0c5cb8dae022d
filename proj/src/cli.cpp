#include "plumb/cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "plumb/bounds.hpp"
#include "plumb/catalog.hpp"
#include "plumb/errors.hpp"
#include "plumb/kernels.hpp"
#include "plumb/pd.hpp"
#include "plumb/report.hpp"
#include "plumb/suite.hpp"

namespace plumb {

namespace {

enum class Format { text, json };

struct CliConfig {
  std::string braid;
  std::string pd_path;
  std::string graph_path;
  std::string known;
  std::optional<int> strands;
  FpbkPolicy policy = FpbkPolicy::min_beta;
  bool exhaustive = false;
  bool assert_minimal = false;
  Format format = Format::text;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("io_error", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

EngineOptions engine_options(const CliConfig& cfg) {
  EngineOptions opts;
  opts.policy = cfg.policy;
  opts.exhaustive = cfg.exhaustive;
  opts.assert_minimal = cfg.assert_minimal;
  return opts;
}

BoundsReport evaluate_known(const std::string& name, const EngineOptions& opts) {
  const Fixture* f = find_fixture(name);
  if (!f) throw InputError("unknown_fixture", "no built-in fixture named '" + name + "'");
  auto report = f->braid ? evaluate(*f->braid, opts) : evaluate(*f->raw_graph, opts);
  report.input.kind = "known";
  report.input.source = f->name;
  return report;
}

BoundsReport evaluate_pd_text(const std::string& text, const EngineOptions& opts) {
  auto report = evaluate(orient_diagram(parse_pd(text)), opts);
  report.input.source = trim(text);
  return report;
}

BoundsReport evaluate_graph_json(const std::string& text, const EngineOptions& opts) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("parse_error", std::string("invalid JSON: ") + e.what());
  }
  auto report = evaluate(graph_from_json(j), opts);
  report.input.kind = "graph";
  return report;
}

BoundsReport evaluate_config(const CliConfig& cfg) {
  const auto opts = engine_options(cfg);
  if (!cfg.known.empty()) return evaluate_known(cfg.known, opts);
  if (!cfg.pd_path.empty()) {
    auto report = evaluate_pd_text(read_file(cfg.pd_path), opts);
    report.input.source = cfg.pd_path + ": " + report.input.source;
    return report;
  }
  if (!cfg.graph_path.empty()) {
    auto report = evaluate_graph_json(read_file(cfg.graph_path), opts);
    report.input.source = cfg.graph_path;
    return report;
  }
  return evaluate(parse_braid_word(cfg.braid, cfg.strands), opts);
}

// One batch item: JSON objects are raw graphs ({"edges"} or a fixture file's
// {"graph": {...}}), braids
// ({"braid": "1 1 1"} or {"braid": {"word", "strands"}}), PD codes ({"pd"})
// or fixture names ({"known"}); plain text is a PD code when it starts with
// X or is U, otherwise a braid word.
BoundsReport evaluate_batch_item(const std::string& path, const EngineOptions& opts) {
  const std::string text = trim(read_file(path));
  BoundsReport report;
  if (!text.empty() && text.front() == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError("parse_error", std::string("invalid JSON: ") + e.what());
    }
    try {
      if (j.contains("edges") || j.contains("graph")) {
        report = evaluate(graph_from_json(j.contains("edges") ? j : j.at("graph")), opts);
        report.input.kind = "graph";
      } else if (j.contains("braid")) {
        const auto& b = j.at("braid");
        if (b.is_string()) {
          std::optional<int> strands;
          if (j.contains("strands")) strands = j.at("strands").get<int>();
          report = evaluate(parse_braid_word(b.get<std::string>(), strands), opts);
        } else {
          report = evaluate(parse_braid_word(b.at("word").get<std::string>(), b.at("strands").get<int>()), opts);
        }
      } else if (j.contains("pd")) {
        report = evaluate_pd_text(j.at("pd").get<std::string>(), opts);
      } else if (j.contains("known")) {
        report = evaluate_known(j.at("known").get<std::string>(), opts);
      } else {
        throw InputError("parse_error", "JSON input needs one of edges, graph, braid, pd, known");
      }
    } catch (const nlohmann::json::exception& e) {
      throw InputError("parse_error", e.what());
    }
  } else if (!text.empty() && (text.front() == 'X' || text == "U")) {
    report = evaluate_pd_text(text, opts);
  } else {
    report = evaluate(parse_braid_word(text), opts);
  }
  return report;
}

bool use_color(const std::ostream& out) {
  if (std::getenv("PLUMB_BOUNDS_NO_COLOR") != nullptr) return false;
  return &out == &std::cout && ::isatty(STDOUT_FILENO) == 1;
}

int exit_code_for(const Error& e) { return dynamic_cast<const InvariantError*>(&e) ? 2 : 1; }

void report_error(const Error& e, Format format, std::ostream& out, std::ostream& err) {
  if (format == Format::json)
    out << error_to_json(e.code(), e.what()).dump(2) << "\n";
  else
    err << "error [" << e.code() << "]: " << e.what() << "\n";
}

void add_engine_flags(CLI::App& cmd, CliConfig& cfg) {
  const std::map<std::string, FpbkPolicy> policies{{"min-beta", FpbkPolicy::min_beta},
                                                   {"min-bound", FpbkPolicy::min_bound}};
  cmd.add_option("--fpbk-policy", cfg.policy, "tree signing used by the fpbk diagram bound")
      ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case));
  cmd.add_flag("--exhaustive", cfg.exhaustive, "also minimize the fpbk bound over all spanning trees");
  cmd.add_flag("--assert-minimal-genus", cfg.assert_minimal,
               "treat the canonical surface as minimal genus (enables exact bk)");
}

void add_format_flag(CLI::App& cmd, Format& format) {
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  cmd.add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper bounds for basket, flat plumbing and flat plumbing basket numbers of links",
               "plumb-bounds"};
  app.require_subcommand(1);

  CliConfig cfg;
  auto* bounds = app.add_subcommand("bounds", "evaluate every bound for one link");
  auto* input = bounds->add_option_group("input", "exactly one link input");
  input->add_option("--braid", cfg.braid, "braid word, e.g. \"1 -2 1 -2\"");
  input->add_option("--pd", cfg.pd_path, "file with a PD code (X[a,b,c,d] ... or U); - for stdin");
  input->add_option("--graph", cfg.graph_path, "raw Seifert graph JSON file");
  input->add_option("--known", cfg.known, "built-in fixture name");
  input->require_option(1);
  bounds->add_option("--strands", cfg.strands, "strand count for --braid")->check(CLI::PositiveNumber);
  add_engine_flags(*bounds, cfg);
  add_format_flag(*bounds, cfg.format);

  std::size_t random_count = 1000;
  std::uint64_t seed = 0;
  RandomBraidSpec spec;
  Format lemma_format = Format::text;
  auto* lemma = app.add_subcommand("lemma-check", "run the identity and sign-sum suite on random braids");
  lemma->add_option("--random", random_count, "number of random connected closures");
  lemma->add_option("--seed", seed, "generator seed");
  lemma->add_option("--max-strands", spec.max_strands, "largest strand count")->check(CLI::Range(2, 64));
  lemma->add_option("--max-length", spec.max_length, "longest word")->check(CLI::NonNegativeNumber);
  add_format_flag(*lemma, lemma_format);

  std::vector<std::string> batch_paths;
  CliConfig batch_cfg;
  batch_cfg.format = Format::json;
  auto* batch = app.add_subcommand("batch", "evaluate one input per file, reports in input order");
  batch->add_option("paths", batch_paths, "input files");
  add_engine_flags(*batch, batch_cfg);
  add_format_flag(*batch, batch_cfg.format);

  std::string export_dir;
  Format fixtures_format = Format::text;
  auto* fixtures = app.add_subcommand("fixtures", "list or export the built-in fixtures");
  fixtures->add_option("--export", export_dir, "write one JSON file per fixture into this directory");
  add_format_flag(*fixtures, fixtures_format);

  std::vector<std::string> argv_storage{"plumb-bounds"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  if (*bounds) {
    try {
      const auto report = evaluate_config(cfg);
      if (cfg.format == Format::json)
        out << report_to_json(report).dump(2) << "\n";
      else
        out << report_to_text(report, use_color(out));
      return 0;
    } catch (const Error& e) {
      report_error(e, cfg.format, out, err);
      return exit_code_for(e);
    }
  }

  if (*lemma) {
    spec.max_strands = std::max(spec.max_strands, spec.min_strands);
    const auto words = random_connected_braids(random_count, seed, spec);
    const auto summary = run_suite_parallel(words);
    if (lemma_format == Format::json) {
      Json j;
      j["seed"] = seed;
      j["total"] = summary.total;
      j["passed"] = summary.passed;
      Json per = Json::object();
      for (std::size_t k = 0; k < kSuiteCheckCount; ++k)
        per[to_string(static_cast<SuiteCheck>(k))] = summary.failures_per_check[k];
      j["failures_per_check"] = std::move(per);
      Json failures = Json::array();
      for (const auto& f : summary.failures)
        failures.push_back({{"index", f.index}, {"word", f.word}, {"detail", f.detail}});
      j["failures"] = std::move(failures);
      out << j.dump(2) << "\n";
    } else {
      out << summary.passed << "/" << summary.total << " passed (seed " << seed << ")\n";
      for (const auto& f : summary.failures)
        out << "  #" << f.index << " [" << f.word << "]: " << f.detail << "\n";
    }
    return summary.all_passed() ? 0 : 2;
  }

  if (*batch) {
    const auto opts = engine_options(batch_cfg);
    std::vector<int> codes(batch_paths.size(), 0);
    const auto items = map_ordered_parallel(batch_paths.size(), [&](std::size_t i) {
      Json item;
      item["path"] = batch_paths[i];
      try {
        item["report"] = report_to_json(evaluate_batch_item(batch_paths[i], opts));
      } catch (const Error& e) {
        codes[i] = exit_code_for(e);
        item["error"] = error_to_json(e.code(), e.what()).at("error");
      }
      return item.dump();
    });
    int code = 0;
    for (const int c : codes) code = std::max(code, c);
    if (batch_cfg.format == Format::json) {
      Json all = Json::array();
      for (const auto& item : items) all.push_back(Json::parse(item));
      out << all.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < items.size(); ++i) {
        const auto j = Json::parse(items[i]);
        out << "== " << batch_paths[i] << "\n";
        if (j.contains("error"))
          out << "error [" << j["error"]["code"].get<std::string>() << "]: "
              << j["error"]["message"].get<std::string>() << "\n";
        else
          out << "best bk <= " << j["report"]["best"]["bk"] << ", fp <= " << j["report"]["best"]["fp"]
              << ", fpbk <= " << j["report"]["best"]["fpbk"] << "\n";
      }
    }
    return code;
  }

  if (*fixtures) {
    const auto& all = load_fixtures();
    if (!export_dir.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(export_dir, ec);
      for (const auto& f : all) {
        const auto path = std::filesystem::path(export_dir) / (f.name + ".json");
        std::ofstream file(path);
        if (!file) {
          err << "error [io_error]: cannot write " << path.string() << "\n";
          return 1;
        }
        file << fixture_to_json(f).dump(2) << "\n";
      }
    }
    if (fixtures_format == Format::json) {
      Json list = Json::array();
      for (const auto& f : all) list.push_back(fixture_to_json(f));
      out << list.dump(2) << "\n";
    } else {
      for (const auto& f : all) out << f.name << "  " << f.description << "\n";
    }
    return 0;
  }
  return 1;
}

}  // namespace plumb
