#include <doctest.h>

#include "shallow/errors.hpp"
#include "shallow/generators.hpp"
#include "shallow/oracles.hpp"
#include "support.hpp"

using namespace shallow;
using namespace testing;

namespace {

// Plain subset enumeration, used to cross-check the pruned searches.
int enumerate_best(Problem p, const Graph& g) {
  const int n = g.num_vertices();
  int best = p == Problem::mis ? 0 : n;
  for (unsigned s = 0; s < (1u << n); ++s) {
    std::vector<Vertex> set;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) set.push_back(v);
    if (!oracle_feasible(p, g, set)) continue;
    const int size = static_cast<int>(set.size());
    best = p == Problem::mis ? std::max(best, size) : std::min(best, size);
  }
  return best;
}

}  // namespace

TEST_CASE("oracle values on named graphs") {
  CHECK(oracle_solve(Problem::mis, complete_graph(3)).value == 1);
  CHECK(oracle_solve(Problem::mis, grid(3, 3).graph()).value == 5);
  CHECK(oracle_solve(Problem::ds, path_graph(7)).value == 3);
  CHECK(oracle_solve(Problem::ds, cycle_graph(6)).value == 2);
  CHECK(oracle_solve(Problem::vc, star_graph(5)).witness == std::vector<Vertex>{0});
  CHECK(oracle_solve(Problem::mis, Graph(0)).value == 0);
  CHECK(oracle_solve(Problem::ds, Graph(3)).value == 3);
}

TEST_CASE("pruned searches equal plain enumeration") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Graph g = random_connected_graph(9, seed % 2 ? 0.2 : 0.4, seed);
    for (Problem p : {Problem::mis, Problem::vc, Problem::ds}) {
      const OracleSolution s = oracle_solve(p, g);
      CHECK(s.value == enumerate_best(p, g));
      CHECK(oracle_feasible(p, g, s.witness));
    }
  }
}

TEST_CASE("oracle budget is enforced") {
  CHECK_THROWS_AS(oracle_solve(Problem::mis, path_graph(25)), BudgetExceeded);
  CHECK_THROWS_AS(exact_treewidth(path_graph(13)), BudgetExceeded);
  CHECK_THROWS_AS(subiso_backtracking(path_graph(101), path_graph(2), false), BudgetExceeded);
  CHECK_THROWS_AS(subiso_backtracking(path_graph(10), path_graph(7), false), BudgetExceeded);
  CHECK_NOTHROW(oracle_solve(Problem::mis, path_graph(24)));
}

TEST_CASE("exact treewidth values and certificates") {
  CHECK(exact_treewidth(path_graph(8)).width == 1);
  CHECK(exact_treewidth(star_graph(6)).width == 1);
  CHECK(exact_treewidth(cycle_graph(6)).width == 2);
  CHECK(exact_treewidth(complete_graph(5)).width == 4);
  CHECK(exact_treewidth(grid(3, 3).graph()).width == 3);
  CHECK(exact_treewidth(Graph(4)).width == 0);
  const Graph apex = apex_over_grid(3);
  const ExactTreewidth tw = exact_treewidth(apex);
  CHECK(tw.width == 4);
  CHECK(validate(tw.td, apex).valid);
  CHECK(tw.td.width() == 4);
}

TEST_CASE("exact treewidth certificates are valid on random graphs") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph g = random_connected_graph(10, 0.3, seed);
    const ExactTreewidth tw = exact_treewidth(g);
    CHECK(validate(tw.td, g).valid);
    CHECK(tw.td.width() == tw.width);
    CHECK(tw.elimination_order.size() == 10);
  }
}

TEST_CASE("backtracking counts injective maps") {
  CHECK(subiso_backtracking(complete_graph(3), path_graph(3), false).count == 6);
  CHECK(subiso_backtracking(complete_graph(3), path_graph(3), true).count == 0);
  CHECK(subiso_backtracking(grid(2, 2).graph(), cycle_graph(4), false).first.has_value());
  // C4 maps into C4: 4 rotations * 2 reflections
  CHECK(subiso_backtracking(cycle_graph(4), cycle_graph(4), true).count == 8);
  CHECK_FALSE(subiso_backtracking(grid(5, 5).graph(), complete_graph(3), false).first.has_value());
  // P2 maps: each edge in both directions
  CHECK(subiso_backtracking(grid(3, 3).graph(), path_graph(2), false).count == 24);
}

TEST_CASE("independent checkers") {
  const Graph p4 = path_graph(4);
  CHECK(oracle_feasible(Problem::mis, p4, {0, 2}));
  CHECK_FALSE(oracle_feasible(Problem::mis, p4, {0, 1}));
  CHECK_FALSE(oracle_feasible(Problem::mis, p4, {0, 0}));
  CHECK(oracle_feasible(Problem::vc, p4, {1, 2}));
  CHECK_FALSE(oracle_feasible(Problem::vc, p4, {1}));
  CHECK(oracle_feasible(Problem::ds, p4, {1, 2}));
  CHECK_FALSE(oracle_feasible(Problem::ds, p4, {0}));
  CHECK(oracle_embedding_ok(p4, path_graph(3), {0, 1, 2}, true));
  CHECK_FALSE(oracle_embedding_ok(p4, path_graph(3), {0, 2, 1}, false));
  CHECK_FALSE(oracle_embedding_ok(complete_graph(3), path_graph(3), {0, 1, 2}, true));
}
