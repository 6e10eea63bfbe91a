#include <doctest.h>

#include <set>

#include "shallow/baker.hpp"
#include "shallow/dp.hpp"
#include "shallow/errors.hpp"
#include "shallow/generators.hpp"
#include "shallow/oracles.hpp"
#include "support.hpp"

using namespace shallow;
using namespace testing;

namespace {

using Windows = std::vector<std::pair<int, int>>;

Windows spans(const std::vector<LevelWindow>& ws) {
  Windows out;
  for (const auto& w : ws) out.emplace_back(w.lo, w.hi);
  return out;
}

std::vector<EmbeddedGraph> small_planar() {
  std::vector<EmbeddedGraph> out{grid(3, 3),
                                 grid(4, 5),
                                 grid(2, 6),
                                 wall(1).embedding,
                                 wall(2).embedding,
                                 subdivide(wall(1).embedding, 2),
                                 incidence_embedding(path_graph(7)),
                                 incidence_embedding(path_graph(10)),
                                 incidence_embedding(cycle_graph(6)),
                                 incidence_embedding(star_graph(5)),
                                 incidence_embedding(complete_graph(3))};
  for (std::uint64_t seed = 1; seed <= 4; ++seed) out.push_back(random_planar_triangulation(14 + 2 * seed, seed));
  return out;
}

}  // namespace

TEST_CASE("level windows on a path of ten levels") {
  CHECK(spans(level_windows(9, 3, 2, SliceMode::delete_levels)) == Windows{{0, 1}, {3, 4}, {6, 7}, {9, 9}});
  CHECK(spans(level_windows(9, 3, 0, SliceMode::duplicate_levels)) == Windows{{0, 3}, {3, 6}, {6, 9}});
  CHECK(spans(level_windows(9, 3, 1, SliceMode::duplicate_levels)) == Windows{{0, 1}, {1, 4}, {4, 7}, {7, 9}});
  const auto ds = level_windows(9, 3, 0, SliceMode::dominating);
  CHECK(spans(ds) == Windows{{0, 3}, {2, 6}, {5, 9}, {8, 9}});
  CHECK(ds[1].core_lo == 3);
  CHECK(ds[1].core_hi == 5);
  CHECK_THROWS_AS(level_windows(9, 1, 0, SliceMode::delete_levels), Error);
  CHECK_THROWS_AS(level_windows(9, 3, 3, SliceMode::delete_levels), Error);
}

TEST_CASE("window invariants over depths, k and offsets") {
  for (int depth = 0; depth <= 14; ++depth) {
    for (int k : {2, 3, 4, 6}) {
      std::vector<int> deleted_count(depth + 1, 0);
      for (int o = 0; o < k; ++o) {
        std::vector<int> hits(depth + 1, 0);
        for (const auto& w : level_windows(depth, k, o, SliceMode::delete_levels))
          for (int l = w.lo; l <= w.hi; ++l) ++hits[l];
        for (int l = 0; l <= depth; ++l) {
          CHECK(hits[l] == (l % k == o ? 0 : 1));
          deleted_count[l] += hits[l] == 0;
        }
        // every pair of adjacent levels sits inside a duplicate-mode window
        const auto dup = level_windows(depth, k, o, SliceMode::duplicate_levels);
        for (int l = 0; l < depth; ++l) {
          bool covered = false;
          for (const auto& w : dup) covered |= w.lo <= l && l + 1 <= w.hi;
          CHECK(covered);
        }
        for (const auto& w : dup) CHECK(w.hi - w.lo <= k);
        // dominating cores partition the levels; windows add one level each side
        std::vector<int> core(depth + 1, 0);
        for (const auto& w : level_windows(depth, k, o, SliceMode::dominating)) {
          for (int l = w.core_lo; l <= w.core_hi; ++l) ++core[l];
          CHECK(w.lo == std::max(0, w.core_lo - 1));
          CHECK(w.hi == std::min(depth, w.core_hi + 1));
        }
        for (int l = 0; l <= depth; ++l) CHECK(core[l] == 1);
      }
      for (int l = 0; l <= depth; ++l) CHECK(deleted_count[l] == 1);
    }
  }
}

TEST_CASE("build_slices: duplicate slices hold every edge, delete slices are disjoint") {
  const EmbeddedGraph e = grid(6, 7);
  const Layering l = bfs_layering(e.graph(), 0);
  for (int k : {2, 3, 4}) {
    for (int o = 0; o < k; ++o) {
      const SliceFamily dup = build_slices(e.graph(), l, k, o, SliceMode::duplicate_levels);
      std::set<EdgeId> edges;
      for (const Slice& s : dup.slices)
        for (EdgeId id : s.sub.map.edge_to_old) edges.insert(id);
      CHECK(static_cast<int>(edges.size()) == e.num_edges());
      const SliceFamily del = build_slices(e.graph(), l, k, o, SliceMode::delete_levels);
      std::vector<int> seen(e.num_vertices(), 0);
      for (const Slice& s : del.slices)
        for (Vertex v : s.sub.map.new_to_old) ++seen[v];
      for (Vertex v = 0; v < e.num_vertices(); ++v) CHECK(seen[v] == (l.level[v] % k == o ? 0 : 1));
    }
  }
}

TEST_CASE("approximation examples") {
  const EmbeddedGraph empty = incidence_embedding(Graph(5));
  CHECK(ptas_mis(empty, 3).solution.size() == 5);
  CHECK(ptas_vc(empty, 2).solution.empty());
  CHECK(ptas_mis(incidence_embedding(path_graph(10)), 2).solution.size() >= 3);
  const auto tri = ptas_vc(incidence_embedding(complete_graph(3)), 2).solution;
  CHECK(tri.size() == 2);
  CHECK(ptas_vc(incidence_embedding(star_graph(5)), 2).solution == std::vector<Vertex>{0});
  CHECK(ptas_ds(incidence_embedding(star_graph(5)), 2).solution == std::vector<Vertex>{0});
  CHECK(ptas_ds(incidence_embedding(cycle_graph(6)), 2).solution.size() <= 2 + 2);
  const auto p7 = ptas_ds(incidence_embedding(path_graph(7)), 3).solution;
  CHECK(p7.size() <= 5);
  CHECK(is_dominating_set(path_graph(7), p7));
  CHECK(ptas_mis(grid(6, 6), 4).solution.size() >= 14);
}

TEST_CASE("guarantees against the oracle on small planar graphs") {
  for (const EmbeddedGraph& e : small_planar()) {
    const Graph& g = e.graph();
    const int mis = oracle_solve(Problem::mis, g).value;
    const int vc = oracle_solve(Problem::vc, g).value;
    const int ds = oracle_solve(Problem::ds, g).value;
    for (int k : {2, 3, 4, 6}) {
      const auto a = ptas_mis(e, k);
      const auto b = ptas_vc(e, k);
      const auto c = ptas_ds(e, k);
      CHECK(oracle_feasible(Problem::mis, g, a.solution));
      CHECK(oracle_feasible(Problem::vc, g, b.solution));
      CHECK(oracle_feasible(Problem::ds, g, c.solution));
      CHECK(int(a.solution.size()) >= mis - mis / k);
      CHECK(int(b.solution.size()) <= vc + vc / k);
      CHECK(int(c.solution.size()) <= ds + 2 * ((ds + k - 1) / k));
      CHECK(a.per_offset_values.size() == std::size_t(k));
      CHECK(int(a.solution.size()) == a.per_offset_values[a.offset]);
    }
  }
}

TEST_CASE("disconnected inputs are handled per component for MIS and VC") {
  const Graph g = graph_of(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 3}, {6, 7}});
  const EmbeddedGraph e = incidence_embedding(g);
  CHECK(ptas_mis(e, 2).solution.size() >= std::size_t(5 - 5 / 2));
  CHECK(is_vertex_cover(g, ptas_vc(e, 3).solution));
  CHECK_THROWS_AS(ptas_ds(e, 2), Error);
}

TEST_CASE("bad parameters and nonplanar hosts are rejected") {
  CHECK_THROWS_AS(ptas_mis(grid(3, 3), 1), Error);
  CHECK_THROWS_AS(ptas_vc(toroidal_grid(3, 3), 2), Error);
  CHECK_THROWS_AS(subiso_driver(toroidal_grid(3, 3), path_graph(2), false), Error);
  CHECK_THROWS_AS(subiso_driver(grid(3, 3), graph_of(3, {{0, 1}}), false), Error);
}

TEST_CASE("offset evaluation is independent of the thread count") {
  const EmbeddedGraph e = random_planar_triangulation(90, 12);
  for (Problem p : {Problem::mis, Problem::vc, Problem::ds}) {
    const PtasResult serial = ptas(p, e, 3, Execution::serial());
    const PtasResult parallel = ptas(p, e, 3, Execution{4});
    CHECK(serial.solution == parallel.solution);
    CHECK(serial.offset == parallel.offset);
    CHECK(serial.per_offset_values == parallel.per_offset_values);
  }
  const auto a = subiso_driver(wall(3).embedding, cycle_graph(6), false, Execution::serial());
  const auto b = subiso_driver(wall(3).embedding, cycle_graph(6), false, Execution{3});
  CHECK(a.map == b.map);
  CHECK(a.offset == b.offset);
}

TEST_CASE("subgraph driver examples") {
  const auto c4 = subiso_driver(grid(4, 4), cycle_graph(4), false);
  REQUIRE(c4.map.has_value());
  CHECK(c4.k == 4);
  CHECK(is_pattern_embedding(grid(4, 4).graph(), cycle_graph(4), *c4.map, false));
  CHECK_FALSE(subiso_driver(incidence_embedding(path_graph(3)), path_graph(5), false).map.has_value());
  CHECK(subiso_driver(wall(3).embedding, cycle_graph(6), true).map.has_value());
  CHECK_FALSE(subiso_driver(grid(5, 5), complete_graph(3), false).map.has_value());
}

TEST_CASE("subgraph driver agrees with backtracking") {
  const std::vector<Graph> patterns{path_graph(2), path_graph(3), path_graph(5), cycle_graph(4),
                                    cycle_graph(6), complete_graph(3), star_graph(3)};
  for (const EmbeddedGraph& e : {grid(3, 4), wall(2).embedding, random_planar_triangulation(25, 6),
                                 incidence_embedding(path_graph(4))}) {
    for (const Graph& h : patterns) {
      for (bool induced : {false, true}) {
        const auto r = subiso_driver(e, h, induced);
        CHECK(r.map.has_value() == (subiso_backtracking(e.graph(), h, induced).count > 0));
      }
    }
  }
}
