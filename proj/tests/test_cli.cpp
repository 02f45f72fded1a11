#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cayley/cli.hpp"

using namespace cayley;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify command") {
  auto r = run({"classify", "--group", "4", "--set", "1,3", "--mode", "graph"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["is_small"] == true);
  CHECK(j["aut_order"] == 8);
  CHECK(j["gw"]["H"] == nlohmann::json::array({0, 2}));

  // not inverse-closed in graph mode
  auto bad = run({"classify", "--group", "4", "--set", "1", "--mode", "graph"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("inverse-closed") != std::string::npos);

  CHECK(run({"classify", "--group", "0", "--set", "0"}).code == 2);
  CHECK(run({"classify", "--group", "4", "--set", "9"}).code == 2);
  // text format includes the adjacency export
  auto txt = run({"classify", "--group", "3", "--set", "1", "--format", "text"});
  CHECK(txt.code == 0);
  CHECK(txt.out.find("adjacency:") != std::string::npos);
  CHECK(txt.out.find("1: 0") != std::string::npos);
}

TEST_CASE("census command") {
  auto r = run({"census", "--group", "2,2", "--mode", "digraph"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["totals"]["subsets"] == 16);
  CHECK(j["violations"].empty());

  // byte-identical across runs and worker counts
  auto again = run({"census", "--group", "2,2", "--mode", "digraph"});
  CHECK(again.out == r.out);
  auto jobs = run({"census", "--group", "2,2", "--mode", "digraph", "--jobs", "3"});
  CHECK(jobs.out == r.out);

  // guard exceeded without --force
  CHECK(run({"census", "--group", "17", "--mode", "digraph"}).code == 3);

  // csv projection
  auto csv = run({"census", "--group", "4", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("group,mode,n,m,subsets") == 0);
  CHECK(csv.out.find("\"4\",digraph,4,2,16,8,") != std::string::npos);
}

TEST_CASE("sample command determinism") {
  std::vector<std::string> args{"sample", "--group", "8", "--mode",  "graph",
                                "--trials", "200",     "--seed", "42"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  args.push_back("--jobs");
  args.push_back("8");
  CHECK(run(args).out == a.out);
}

TEST_CASE("bounds command") {
  auto r = run({"bounds", "--n", "8", "--m", "2"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["bounds"]["thm_epsilon1"]["exponent"]["num"] == 25);
  CHECK(j["bounds"]["thm_epsilon1"]["exponent"]["den"] == 1);
  CHECK(run({"bounds", "--n", "1", "--m", "1"}).code == 2);
}

TEST_CASE("unlabeled command") {
  auto r = run({"unlabeled", "--group", "3", "--mode", "digraph"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["iso_classes"] == 6);
  CHECK(j["orbit_count"] == 6);
  CHECK(j["lower_bound_den"] == 2);
}

TEST_CASE("output file and parse errors") {
  std::string path = "cli_test_out.json";
  auto r = run({"census", "--group", "4", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream content;
  content << f.rdbuf();
  CHECK(nlohmann::json::parse(content.str())["n"] == 4);
  std::remove(path.c_str());

  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"census"}).code == 2);  // missing --group
  auto badmode = run({"census", "--group", "4", "--mode", "wat"});
  CHECK(badmode.code == 2);
  CHECK(badmode.err.find("wat") != std::string::npos);
}
