#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "shallow/cli.hpp"
#include "shallow/decomposition.hpp"
#include "shallow/io.hpp"

using namespace shallow;
using json = nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "shallow_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

json without_time(json report) {
  report.erase("wall_time");
  if (report["outputs"].contains("wall_time")) report["outputs"].erase("wall_time");
  return report;
}

}  // namespace

TEST_CASE("generate emits a parseable grid") {
  const Result r = run_cli({"generate", "--kind", "grid", "--rows", "3", "--cols", "3"});
  CHECK(r.code == 0);
  const GraphFile f = parse_graph_file(r.out);
  CHECK(f.graph.num_vertices() == 9);
  CHECK(f.graph.num_edges() == 12);
  const json report = json::parse(r.err);
  CHECK(report["outputs"]["genus"] == 0);
  CHECK(report["version"] == cli::kVersion);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({"ptas", "--problem", "mis", "--k", "0"}).code == 2);
  CHECK(run_cli({"generate", "--kind", "grid", "--bogus"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"solve", "--problem", "tsp"}).code == 2);
  const Result help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("decompose") != std::string::npos);
}

TEST_CASE("domain errors exit with 1") {
  const std::string plain = "v 3\ne 0 1\ne 1 2\n";
  CHECK(run_cli({"decompose", "--method", "planar-bfs"}, plain).code == 1);
  CHECK(run_cli({"solve", "--problem", "mis"}, "v 2\ne 0 7\n").code == 1);
  const std::string torus = run_cli({"generate", "--kind", "torus", "--rows", "3", "--cols", "3"}).out;
  CHECK(run_cli({"ptas", "--problem", "mis", "--k", "3"}, torus).code == 1);
  CHECK(run_cli({"oracle", "--problem", "tw"}, run_cli({"generate", "--kind", "grid", "--rows", "4", "--cols", "4"}).out).code == 1);
}

TEST_CASE("decompose then validate passes on emitted artifacts") {
  const std::string grid = run_cli({"generate", "--kind", "grid", "--rows", "4", "--cols", "5"}).out;
  const auto graph_path = scratch("g.txt");
  write(graph_path, grid);
  for (const std::string method : {"planar-bfs", "genus", "min-degree"}) {
    const auto td_path = scratch("td_" + method + ".txt");
    const Result d = run_cli({"decompose", "--method", method, "--input", graph_path.string(), "--out",
                              td_path.string()});
    CHECK(d.code == 0);
    const json report = json::parse(d.out);
    CHECK(report["outputs"]["valid"] == true);
    if (method == "planar-bfs") CHECK(report["outputs"]["bound_ok"] == true);
    const Result v = run_cli({"validate", "--td", td_path.string()}, grid);
    CHECK(v.code == 0);
    CHECK(json::parse(v.out)["outputs"]["valid"] == true);
  }
}

TEST_CASE("validate reports a broken decomposition") {
  const auto td_path = scratch("bad.td");
  write(td_path, "td 2 1 3\nb 0 0 1\nb 1 2\nt 0 1\n");
  const Result v = run_cli({"validate", "--td", td_path.string()}, "v 3\ne 0 1\ne 1 2\n");
  CHECK(v.code == 1);
  CHECK(json::parse(v.out)["outputs"]["decomposition"]["violation"] == "edge_uncovered");
}

TEST_CASE("solve, ptas, subiso and oracle reports") {
  const std::string grid = run_cli({"generate", "--kind", "grid", "--rows", "3", "--cols", "3"}).out;
  const json solve = json::parse(run_cli({"solve", "--problem", "mis"}, grid).out);
  CHECK(solve["outputs"]["value"] == 5);
  CHECK(solve["outputs"]["feasible"] == true);

  const Result p = run_cli({"ptas", "--problem", "vc", "--k", "3", "--jobs", "2"}, grid);
  CHECK(p.code == 0);
  const json ptas = json::parse(p.out);
  CHECK(ptas["outputs"]["bound_checked"] == true);
  CHECK(ptas["outputs"]["bound_holds"] == true);
  CHECK(ptas["outputs"]["per_offset_values"].size() == 3);
  CHECK(ptas["outputs"].contains("offset_chosen"));
  CHECK(ptas["outputs"].contains("wall_time"));

  const auto pattern = scratch("c4.txt");
  write(pattern, "v 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
  const json sub = json::parse(run_cli({"subiso", "--pattern", pattern.string(), "--induced"}, grid).out);
  CHECK(sub["outputs"]["found"] == true);
  CHECK(sub["outputs"]["verified"] == true);

  const json oracle =
      json::parse(run_cli({"oracle", "--problem", "subiso", "--pattern", pattern.string()}, grid).out);
  CHECK(oracle["outputs"]["count"] == 4 * 8);
  const json tw = json::parse(run_cli({"oracle", "--problem", "tw"}, grid).out);
  CHECK(tw["outputs"]["width"] == 3);
}

TEST_CASE("reports are deterministic apart from wall time") {
  const std::string grid = run_cli({"generate", "--kind", "wall", "--size", "2"}).out;
  const Result a = run_cli({"ptas", "--problem", "ds", "--k", "2"}, grid);
  const Result b = run_cli({"ptas", "--problem", "ds", "--k", "2", "--jobs", "3"}, grid);
  json ra = without_time(json::parse(a.out)), rb = without_time(json::parse(b.out));
  CHECK(ra["outputs"] == rb["outputs"]);
  CHECK(ra["input_fingerprint"] == rb["input_fingerprint"]);
}

TEST_CASE("SHALLOW_SEED fixes random triangulations") {
  ::setenv("SHALLOW_SEED", "42", 1);
  const std::string a = run_cli({"generate", "--kind", "rptri", "--n", "30"}).out;
  const std::string b = run_cli({"generate", "--kind", "rptri", "--n", "30"}).out;
  const std::string c = run_cli({"generate", "--kind", "rptri", "--n", "30", "--seed", "42"}).out;
  ::setenv("SHALLOW_SEED", "43", 1);
  const std::string d = run_cli({"generate", "--kind", "rptri", "--n", "30"}).out;
  ::unsetenv("SHALLOW_SEED");
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a != d);
}

TEST_CASE("dot export and file output") {
  const auto out = scratch("wall.txt");
  const auto dot = scratch("wall.dot");
  const Result r = run_cli({"generate", "--kind", "wall", "--size", "2", "--out", out.string(), "--dot", dot.string()});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["outputs"]["vertices"] == 24);
  std::ifstream f(dot);
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str().find("graph G {") == 0);
}

TEST_CASE("fingerprint is FNV-1a") {
  CHECK(cli::fingerprint("") == "cbf29ce484222325");
  CHECK(cli::fingerprint("a") == "af63dc4c8601ec8c");
}
