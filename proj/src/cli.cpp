#include "shallow/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "shallow/baker.hpp"
#include "shallow/dp.hpp"
#include "shallow/errors.hpp"
#include "shallow/generators.hpp"
#include "shallow/genus_td.hpp"
#include "shallow/io.hpp"
#include "shallow/oracles.hpp"
#include "shallow/planar_td.hpp"

namespace shallow::cli {

using json = nlohmann::json;

std::string fingerprint(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SHALLOW_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(std::string("SHALLOW_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

struct Common {
  std::string input;
  std::string out_file;
  std::string dot_file;
  int jobs = 1;
};

struct Session {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string command;
  Common common;
  std::string input_text;
  Clock::time_point start = Clock::now();

  const std::string& load_input() {
    if (!common.input.empty()) {
      input_text = read_file(common.input);
    } else {
      std::ostringstream s;
      s << in.rdbuf();
      input_text = s.str();
    }
    return input_text;
  }

  Execution exec() const { return {std::max(1, common.jobs)}; }

  // Artifact to stdout or --out; report to whichever stream is left free.
  void finish(const std::string* artifact, const std::string& fingerprint_text, json outputs) {
    json report;
    report["command"] = command;
    report["version"] = kVersion;
    report["input_fingerprint"] = fingerprint(fingerprint_text);
    report["outputs"] = std::move(outputs);
    report["wall_time"] = seconds_since(start);
    std::ostream* report_stream = &out;
    if (artifact) {
      if (common.out_file.empty()) {
        out << *artifact;
        report_stream = &err;
      } else {
        write_file(common.out_file, *artifact);
      }
    }
    *report_stream << report.dump(2) << '\n';
  }
};

void add_common(CLI::App* sub, Common& c, bool artifact, bool input) {
  if (input) sub->add_option("--input", c.input, "Read the input graph from FILE instead of stdin");
  if (artifact) {
    sub->add_option("--out", c.out_file, "Write the artifact to FILE; the report then goes to stdout");
    sub->add_option("--dot", c.dot_file, "Also write a DOT drawing to FILE");
  }
  sub->add_option("--jobs", c.jobs, "Worker threads for parallel kernels")->check(CLI::Range(1, 1024));
}

GraphFile load_graph(Session& s) { return parse_graph_file(s.load_input()); }

EmbeddedGraph load_embedding(Session& s) {
  GraphFile f = load_graph(s);
  return to_embedding(f);
}

// --- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  int rows = 3, cols = 3, n = 3, size = 2, radius = 1, subdivide = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

int do_generate(Session& s, const GenerateArgs& a) {
  std::string artifact;
  json outputs;
  outputs["kind"] = a.kind;
  Graph graph;
  std::optional<EmbeddedGraph> embedding;
  if (a.kind == "grid") {
    embedding = grid(a.rows, a.cols);
  } else if (a.kind == "torus") {
    embedding = toroidal_grid(a.rows, a.cols);
  } else if (a.kind == "apex") {
    graph = apex_over_grid(a.n);
  } else if (a.kind == "wall") {
    Wall w = wall(a.size);
    embedding = a.subdivide > 1 ? subdivide(w.embedding, a.subdivide) : w.embedding;
    outputs["hexagons"] = w.spec.hex_coords.size();
  } else if (a.kind == "hexset") {
    HexSetGraph h = hex_set_graph(hex_ball(a.radius));
    embedding = h.embedding;
    outputs["hexagons"] = h.hexes.size();
  } else {  // rptri
    const std::uint64_t seed = a.seed_given ? a.seed : default_seed();
    embedding = random_planar_triangulation(a.n, seed);
    outputs["seed"] = seed;
  }
  if (embedding) {
    graph = embedding->graph();
    artifact = format_embedding(*embedding);
    outputs["genus"] = embedding->genus();
    outputs["faces"] = embedding->num_faces();
  } else {
    artifact = format_graph(graph);
  }
  outputs["vertices"] = graph.num_vertices();
  outputs["edges"] = graph.num_edges();
  if (!s.common.dot_file.empty()) write_file(s.common.dot_file, graph_to_dot(graph));
  s.finish(&artifact, s.command, outputs);
  return 0;
}

// --- decompose --------------------------------------------------------------

int do_decompose(Session& s, const std::string& method, std::optional<int> root_arg) {
  GraphFile file = load_graph(s);
  const Graph& g = file.graph;
  json outputs;
  outputs["method"] = method;
  TreeDecomposition td;
  auto pick_root = [&]() -> Vertex {
    if (root_arg) {
      if (*root_arg < 0 || *root_arg >= g.num_vertices()) throw Error("root out of range");
      return *root_arg;
    }
    return choose_root(g);
  };
  if (method == "planar-bfs") {
    EmbeddedGraph e = to_embedding(file);
    const Vertex root = pick_root();
    PlanarTD p = planar_bfs_td(e, root);
    td = std::move(p.td);
    outputs["root"] = root;
    outputs["depth"] = p.depth;
    outputs["bound"] = 3 * p.depth;
    outputs["bound_ok"] = td.width() <= 3 * p.depth;
  } else if (method == "genus") {
    EmbeddedGraph e = to_embedding(file);
    const Vertex root = pick_root();
    GenusTD gt = genus_td(e, root);
    td = std::move(gt.td);
    const int x = static_cast<int>(gt.cut.vertices.size());
    outputs["root"] = root;
    outputs["genus"] = e.genus();
    outputs["depth"] = gt.depth;
    outputs["leftover_edges"] = gt.cut.leftover_edges.size();
    outputs["cut_vertices"] = x;
    outputs["contracted_genus"] = gt.contracted_genus;
    outputs["bound"] = 3 * (gt.depth + 1) + x;
    outputs["bound_ok"] = td.width() <= 3 * (gt.depth + 1) + x;
  } else if (method == "min-degree") {
    td = min_degree_decomposition(g);
  } else {  // exact
    td = exact_treewidth(g).td;
  }
  const ValidationReport rep = validate(td, g);
  outputs["width"] = td.width();
  outputs["nodes"] = td.num_nodes();
  outputs["valid"] = rep.valid;
  const std::string artifact = format_decomposition(td, g.num_vertices());
  if (!s.common.dot_file.empty()) write_file(s.common.dot_file, decomposition_to_dot(td));
  s.finish(&artifact, s.input_text, outputs);
  return rep.valid ? 0 : 1;
}

// --- validate ---------------------------------------------------------------

int do_validate(Session& s, const std::string& td_path) {
  GraphFile file = load_graph(s);
  json outputs;
  outputs["vertices"] = file.graph.num_vertices();
  outputs["edges"] = file.graph.num_edges();
  bool ok = true;
  std::string fingerprint_text = s.input_text;
  if (file.rotation) {
    const EmbeddingReport r = validate_embedding(to_embedding(file));
    outputs["embedding"] = {{"faces", r.faces}, {"components", r.components}, {"genus", r.genus}};
  }
  if (!td_path.empty()) {
    const std::string text = read_file(td_path);
    fingerprint_text += text;
    DecompositionFile d = parse_decomposition_file(text);
    if (d.num_vertices != file.graph.num_vertices()) {
      throw Error("decomposition is for " + std::to_string(d.num_vertices) + " vertices, graph has " +
                  std::to_string(file.graph.num_vertices()));
    }
    const ValidationReport rep = validate(d.td, file.graph);
    ok = rep.valid;
    outputs["decomposition"] = {{"valid", rep.valid},
                                {"violation", to_string(rep.violation)},
                                {"width", d.td.width()},
                                {"message", rep.message}};
  }
  outputs["valid"] = ok;
  s.finish(nullptr, fingerprint_text, outputs);
  return ok ? 0 : 1;
}

// --- solve ------------------------------------------------------------------

int do_solve(Session& s, const std::string& problem_name) {
  const Problem p = parse_problem(problem_name);
  GraphFile file = load_graph(s);
  const Graph& g = file.graph;
  TreeDecomposition td = min_degree_decomposition(g);
  std::string method = "min-degree";
  if (file.rotation && g.num_vertices() > 0 && is_connected(g)) {
    EmbeddedGraph e = to_embedding(file);
    if (e.is_planar()) {
      PlanarTD planar = planar_bfs_td(e, choose_root(g));
      if (planar.td.width() < td.width()) {
        td = std::move(planar.td);
        method = "planar-bfs";
      }
    }
  }
  const std::vector<Vertex> witness = dp_solve(p, make_nice(td, g), g);
  json outputs;
  outputs["problem"] = to_string(p);
  outputs["value"] = witness.size();
  outputs["witness"] = witness;
  outputs["feasible"] = is_feasible(p, g, witness);
  outputs["decomposition"] = method;
  outputs["width"] = td.width();
  s.finish(nullptr, s.input_text, outputs);
  return 0;
}

// --- ptas -------------------------------------------------------------------

int do_ptas(Session& s, const std::string& problem_name, int k) {
  const Problem p = parse_problem(problem_name);
  EmbeddedGraph e = load_embedding(s);
  const auto t0 = Clock::now();
  PtasResult r = ptas(p, e, k, s.exec());
  const double solve_time = seconds_since(t0);
  json outputs;
  outputs["problem"] = to_string(p);
  outputs["k"] = k;
  outputs["offset_chosen"] = r.offset;
  outputs["value"] = r.solution.size();
  outputs["witness"] = r.solution;
  outputs["per_offset_values"] = r.per_offset_values;
  outputs["feasible"] = is_feasible(p, e.graph(), r.solution);
  const OracleBudget budget;
  if (e.num_vertices() <= budget.max_solve_vertices) {
    const int opt = oracle_solve(p, e.graph()).value;
    const int value = static_cast<int>(r.solution.size());
    bool holds = false;
    switch (p) {
      case Problem::mis: holds = value >= opt - opt / k; break;
      case Problem::vc: holds = value <= opt + opt / k; break;
      case Problem::ds: holds = value <= opt + 2 * ((opt + k - 1) / k); break;
    }
    outputs["bound_checked"] = true;
    outputs["opt"] = opt;
    outputs["bound_holds"] = holds;
  } else {
    outputs["bound_checked"] = false;
  }
  outputs["wall_time"] = solve_time;
  s.finish(nullptr, s.input_text, outputs);
  return 0;
}

// --- subiso -----------------------------------------------------------------

int do_subiso(Session& s, const std::string& pattern_path, bool induced) {
  EmbeddedGraph e = load_embedding(s);
  const std::string pattern_text = read_file(pattern_path);
  const Graph pattern = parse_graph_file(pattern_text).graph;
  SubisoResult r = subiso_driver(e, pattern, induced, s.exec());
  json outputs;
  outputs["induced"] = induced;
  outputs["found"] = r.map.has_value();
  outputs["pattern_diameter"] = r.pattern_diameter;
  outputs["k"] = r.k;
  outputs["windows_searched"] = r.windows_searched;
  if (r.map) {
    outputs["witness"] = *r.map;
    outputs["verified"] = is_pattern_embedding(e.graph(), pattern, *r.map, induced);
    outputs["offset"] = r.offset;
    outputs["window"] = {r.window.lo, r.window.hi};
  }
  s.finish(nullptr, s.input_text + pattern_text, outputs);
  return 0;
}

// --- oracle -----------------------------------------------------------------

int do_oracle(Session& s, const std::string& problem, const std::string& pattern_path, bool induced) {
  const Graph g = load_graph(s).graph;
  json outputs;
  outputs["problem"] = problem;
  std::string fingerprint_text = s.input_text;
  if (problem == "tw") {
    ExactTreewidth tw = exact_treewidth(g);
    outputs["width"] = tw.width;
    outputs["elimination_order"] = tw.elimination_order;
  } else if (problem == "subiso") {
    if (pattern_path.empty()) throw Error("--pattern is required for the subiso oracle");
    const std::string text = read_file(pattern_path);
    fingerprint_text += text;
    OracleMatches m = subiso_backtracking(g, parse_graph_file(text).graph, induced);
    outputs["induced"] = induced;
    outputs["found"] = m.first.has_value();
    outputs["count"] = m.count;
    if (m.first) outputs["witness"] = *m.first;
  } else {
    OracleSolution sol = oracle_solve(parse_problem(problem), g);
    outputs["value"] = sol.value;
    outputs["witness"] = sol.witness;
  }
  s.finish(nullptr, fingerprint_text, outputs);
  return 0;
}

// --- bench ------------------------------------------------------------------

int do_bench(Session& s, int min_edges, int max_edges) {
  if (min_edges < 4 || max_edges < min_edges) throw Error("need 4 <= --min-edges <= --max-edges");
  json rows = json::array();
  double previous = 0;
  for (int target = min_edges; target <= max_edges; target *= 2) {
    // square grid with about `target` edges (2 r (r - 1))
    int side = 2;
    while (2 * (side + 1) * side <= target) ++side;
    const EmbeddedGraph g = grid(side, side);
    const Vertex root = (side / 2) * side + side / 2;
    const auto t0 = Clock::now();
    const PlanarTD p = planar_bfs_td(g, root);
    const double t = seconds_since(t0);
    json row = {{"side", side},       {"edges", g.num_edges()}, {"depth", p.depth},
                {"width", p.td.width()}, {"seconds", t}};
    if (previous > 0) row["ratio"] = t / previous;
    previous = t;
    rows.push_back(row);
  }
  json outputs;
  outputs["planar_bfs_td"] = rows;
  const EmbeddedGraph g = grid(60, 60);
  const auto t0 = Clock::now();
  const auto serial = diameter(g.graph(), Execution::serial());
  const double serial_time = seconds_since(t0);
  const auto t1 = Clock::now();
  const auto parallel = diameter(g.graph(), s.exec());
  const double parallel_time = seconds_since(t1);
  outputs["diameter"] = {{"graph", "grid(60,60)"},
                         {"value", serial.value_or(-1)},
                         {"agree", serial == parallel},
                         {"jobs", s.exec().jobs},
                         {"serial_seconds", serial_time},
                         {"parallel_seconds", parallel_time}};
  s.finish(nullptr, s.command, outputs);
  return 0;
}

std::string join(const std::vector<std::string>& args) {
  std::string out = "shallow";
  for (const auto& a : args) out += " " + a;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shallow tree decompositions of planar and bounded-genus graphs", "shallow"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  Session session{in, out, err, join(args), {}, {}};
  Common& common = session.common;

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit a generated graph in the graph text format");
  generate->add_option("--kind", gen.kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"grid", "apex", "wall", "hexset", "rptri", "torus"}));
  generate->add_option("--rows", gen.rows, "Rows (grid, torus)")->check(CLI::Range(1, 1 << 20));
  generate->add_option("--cols", gen.cols, "Columns (grid, torus)")->check(CLI::Range(1, 1 << 20));
  generate->add_option("--n", gen.n, "Side (apex) or vertex count (rptri)")->check(CLI::Range(1, 1 << 24));
  generate->add_option("--size", gen.size, "Wall size s")->check(CLI::Range(1, 1000));
  generate->add_option("--radius", gen.radius, "Hexagon ball radius (hexset)")->check(CLI::Range(0, 1000));
  generate->add_option("--subdivide", gen.subdivide, "Subdivision factor (wall)")->check(CLI::Range(1, 1000));
  auto* seed_opt = generate->add_option("--seed", gen.seed, "Seed (rptri); default $SHALLOW_SEED or 1");
  add_common(generate, common, true, false);

  std::string method = "planar-bfs";
  std::optional<int> root;
  auto* decompose = app.add_subcommand("decompose", "Build a tree decomposition of the input graph");
  decompose->add_option("--method", method, "Construction")
      ->check(CLI::IsMember({"planar-bfs", "genus", "min-degree", "exact"}));
  decompose->add_option("--root", root, "BFS root (default: minimum sampled eccentricity)");
  add_common(decompose, common, true, true);

  std::string td_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a graph file and optionally a decomposition");
  validate_cmd->add_option("--td", td_path, "Decomposition file to check against the graph");
  add_common(validate_cmd, common, false, true);

  std::string problem;
  auto* solve = app.add_subcommand("solve", "Solve mis, vc or ds exactly by tree decomposition DP");
  solve->add_option("--problem", problem, "Problem")->required()->check(CLI::IsMember({"mis", "vc", "ds"}));
  add_common(solve, common, false, true);

  int k = 2;
  auto* ptas_cmd = app.add_subcommand("ptas", "Run the level-slicing approximation scheme");
  ptas_cmd->add_option("--problem", problem, "Problem")->required()->check(CLI::IsMember({"mis", "vc", "ds"}));
  ptas_cmd->add_option("--k", k, "Slicing parameter (>= 2)")->required()->check(CLI::Range(2, 1 << 20));
  add_common(ptas_cmd, common, false, true);

  std::string pattern_path;
  bool induced = false;
  auto* subiso = app.add_subcommand("subiso", "Search a fixed connected pattern in a planar host");
  subiso->add_option("--pattern", pattern_path, "Pattern graph file")->required();
  subiso->add_flag("--induced", induced, "Require an induced occurrence");
  add_common(subiso, common, false, true);

  std::string oracle_problem;
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference answers");
  oracle->add_option("--problem", oracle_problem, "Problem")
      ->required()
      ->check(CLI::IsMember({"mis", "vc", "ds", "tw", "subiso"}));
  oracle->add_option("--pattern", pattern_path, "Pattern graph file (subiso)");
  oracle->add_flag("--induced", induced, "Require an induced occurrence (subiso)");
  add_common(oracle, common, false, true);

  int min_edges = 1000, max_edges = 64000;
  auto* bench = app.add_subcommand("bench", "Time planar_bfs_td scaling and serial vs parallel diameter");
  bench->add_option("--min-edges", min_edges, "Smallest grid size in edges");
  bench->add_option("--max-edges", max_edges, "Largest grid size in edges");
  add_common(bench, common, false, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }

  try {
    if (*generate) {
      gen.seed_given = seed_opt->count() > 0;
      return do_generate(session, gen);
    }
    if (*decompose) return do_decompose(session, method, root);
    if (*validate_cmd) return do_validate(session, td_path);
    if (*solve) return do_solve(session, problem);
    if (*ptas_cmd) return do_ptas(session, problem, k);
    if (*subiso) return do_subiso(session, pattern_path, induced);
    if (*oracle) return do_oracle(session, oracle_problem, pattern_path, induced);
    if (*bench) return do_bench(session, min_edges, max_edges);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace shallow::cli
