#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shallow/decomposition.hpp"
#include "shallow/problem.hpp"

namespace shallow {

// Brute-force references. They deliberately share no code with the solvers,
// including the feasibility checks below, and throw BudgetExceeded instead
// of running on instances beyond their limits.
struct OracleBudget {
  int max_solve_vertices = 24;
  int max_treewidth_vertices = 12;
  int max_host_vertices = 100;
  int max_pattern_vertices = 6;
};

struct OracleSolution {
  int value = 0;
  std::vector<Vertex> witness;  // sorted
};

OracleSolution oracle_solve(Problem p, const Graph& g, const OracleBudget& budget = {});

struct ExactTreewidth {
  int width = 0;
  std::vector<Vertex> elimination_order;
  TreeDecomposition td;  // width equals `width`
};

ExactTreewidth exact_treewidth(const Graph& g, const OracleBudget& budget = {});

struct OracleMatches {
  std::optional<std::vector<Vertex>> first;  // first map met by the search
  std::int64_t count = 0;                    // injective maps, not occurrences
};

OracleMatches subiso_backtracking(const Graph& g, const Graph& pattern, bool induced,
                                  const OracleBudget& budget = {});

bool oracle_feasible(Problem p, const Graph& g, const std::vector<Vertex>& set);
bool oracle_embedding_ok(const Graph& g, const Graph& pattern, const std::vector<Vertex>& map,
                         bool induced);

}  // namespace shallow
