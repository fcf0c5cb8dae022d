#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <sys/wait.h>

#include "json.hpp"
#include "plumb/cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = plumb::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("plumb_cli_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& body) const {
    std::ofstream(path / name) << body;
    return (path / name).string();
  }
};

const Json* bound(const Json& report, const std::string& name) {
  for (const auto& b : report["bounds"])
    if (b["name"] == name) return &b;
  return nullptr;
}

}  // namespace

TEST_CASE("trefoil json report") {
  const auto r = run({"bounds", "--braid", "1 1 1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["best"] == Json{{"bk", 2}, {"fp", 4}, {"fpbk", 4}});
  CHECK(j["genus"]["exact_bk"] == 2);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"input", "graph", "bounds", "best", "genus", "flags", "analysis"});
  // deterministic
  CHECK(run({"bounds", "--braid", "1 1 1", "--format", "json"}).out == r.out);
}

TEST_CASE("figure2 min-bound") {
  const auto r = run({"bounds", "--known", "figure2", "--fpbk-policy", "min-bound", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  REQUIRE(bound(j, "fpbk_diagram_min_bound"));
  CHECK((*bound(j, "fpbk_diagram_min_bound"))["value"] == 6);
  CHECK((*bound(j, "fp_refined"))["value"] == 6);
  CHECK(j["flags"]["policy_ambiguous"] == true);
  CHECK(j["input"]["fpbk_policy"] == "min-bound");
}

TEST_CASE("text and json agree") {
  for (const char* word : {"1 1 1", "1 -2 1 -2", "2 1 -2 1 1"}) {
    CAPTURE(word);
    const auto t = run({"bounds", "--braid", word});
    const auto j = Json::parse(run({"bounds", "--braid", word, "--format", "json"}).out);
    REQUIRE(t.code == 0);
    CHECK(t.out.find("\033[") == std::string::npos);
    for (const auto& b : j["bounds"]) {
      const std::regex line("\\n  " + b["name"].get<std::string>() + " +" + std::to_string(b["value"].get<int>()) + " ");
      CHECK_MESSAGE(std::regex_search(t.out, line), b["name"]);
    }
    std::ostringstream best;
    best << "bk <= " << j["best"]["bk"] << ", fp <= " << j["best"]["fp"] << ", fpbk <= " << j["best"]["fpbk"];
    CHECK(t.out.find(best.str()) != std::string::npos);
  }
}

TEST_CASE("input errors") {
  auto r = run({"bounds", "--braid", "1 x", "--format", "json"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["error"]["code"] == "parse_error");

  r = run({"bounds", "--known", "nothing", "--format", "json"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["error"]["code"] == "unknown_fixture");

  r = run({"bounds", "--braid", "1 1 3 3", "--format", "json"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["error"]["code"] == "split_link");

  r = run({"bounds", "--braid", "1", "--known", "hopf"});
  CHECK(r.code == 1);
  r = run({"bounds"});
  CHECK(r.code == 1);
  r = run({"bounds", "--braid", "1", "--fpbk-policy", "greedy"});
  CHECK(r.code == 1);

  r = run({"bounds", "--braid", "1 x"});
  CHECK(r.code == 1);
  CHECK(r.err.find("parse_error") != std::string::npos);
}

TEST_CASE("pd and graph files") {
  TempDir dir;
  const auto pd = dir.write("t.pd", "X[4,2,5,1] X[6,4,1,3] X[2,6,3,5]\n");
  auto r = run({"bounds", "--pd", pd, "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["best"] == Json{{"bk", 2}, {"fp", 4}, {"fpbk", 6}});
  CHECK(j["genus"]["exact_bk"] == 2);

  const auto bad = dir.write("bad.pd", "X[1,2,1,2]");
  r = run({"bounds", "--pd", bad, "--format", "json"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["error"]["code"] == "non_planar");

  const auto graph = dir.write("g.json", R"({"s": 2, "l": 2, "edges": [[1, 2, 1], [1, 2, 1]]})");
  r = run({"bounds", "--graph", graph, "--format", "json"});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["best"]["bk"] == 1);
  CHECK(j["graph"] == Json{{"s", 2}, {"c", 2}, {"l", 2}});

  const auto loop = dir.write("loop.json", R"({"s": 1, "l": 1, "edges": [[1, 1, 1]]})");
  r = run({"bounds", "--graph", loop, "--format", "json"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["error"]["code"] == "invalid_graph");

  r = run({"bounds", "--graph", (dir.path / "missing.json").string(), "--format", "json"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["error"]["code"] == "io_error");
}

TEST_CASE("lemma-check") {
  auto r = run({"lemma-check", "--random", "1000", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1000/1000 passed") != std::string::npos);

  r = run({"lemma-check", "--random", "50", "--seed", "1", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["passed"] == 50);
  CHECK(j["failures"].empty());
}

TEST_CASE("batch") {
  TempDir dir;
  const auto a = dir.write("a.txt", "1 1 1");
  const auto b = dir.write("b.txt", "1 -2 1 -2");
  const auto c = dir.write("c.txt", "1 1");
  auto r = run({"batch", a, b, c});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["path"] == a);
  CHECK(j[0]["report"]["best"]["bk"] == 2);
  CHECK(j[1]["report"]["best"]["fp"] == 6);
  CHECK(j[2]["report"]["graph"]["l"] == 2);

  const auto bad = dir.write("bad.txt", "1 0 1");
  const auto pd = dir.write("d.pd", "X[1,1,2,2]");
  const auto known = dir.write("k.json", R"({"known": "figure2"})");
  r = run({"batch", a, bad, pd, known});
  CHECK(r.code == 1);
  j = Json::parse(r.out);
  REQUIRE(j.size() == 4);
  CHECK(j[0].contains("report"));
  CHECK(j[1]["error"]["code"] == "parse_error");
  CHECK(j[2]["report"]["graph"]["s"] == 2);
  CHECK(j[3]["report"]["bounds"].size() >= 4);

  r = run({"batch"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out) == Json::array());
}

TEST_CASE("fixtures export round trip") {
  TempDir dir;
  auto r = run({"fixtures", "--export", dir.path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("figure2") != std::string::npos);
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir.path)) paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());
  CHECK(paths.size() >= 10);

  std::vector<std::string> args{"batch"};
  args.insert(args.end(), paths.begin(), paths.end());
  r = run(args);
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j.size() == paths.size());
  for (const auto& item : j) CHECK(item.contains("report"));
}

TEST_CASE("binary runs") {
  const std::string cmd = std::string("PLUMB_BOUNDS_NO_COLOR=1 \"") + PLUMB_CLI_PATH + "\" bounds --known hopf > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  const std::string fail = std::string("\"") + PLUMB_CLI_PATH + "\" bounds --braid 0 2> /dev/null";
  CHECK(WEXITSTATUS(std::system(fail.c_str())) == 1);
}
