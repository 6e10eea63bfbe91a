#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shallow/decomposition.hpp"
#include "shallow/problem.hpp"

namespace shallow {

// Exact solvers over a nice decomposition of g. Each throws Error when nd is
// not a valid nice decomposition of g, and returns a sorted witness that has
// been checked for feasibility.
//
// Table states are subsets of the bag (MIS, VC) or a chosen/dominated/
// undominated label per bag vertex (DS), stored sparsely.
std::vector<Vertex> dp_mis(const NiceDecomposition& nd, const Graph& g);
std::vector<Vertex> dp_vc(const NiceDecomposition& nd, const Graph& g);
// Minimum S such that every required vertex is in S or adjacent to S.
std::vector<Vertex> dp_ds(const NiceDecomposition& nd, const Graph& g, const std::vector<bool>& required);

inline constexpr int kMaxPatternVertices = 8;

// Injective map pattern vertex -> host vertex preserving pattern edges (and
// non-edges when induced), or nullopt. Patterns with more than
// kMaxPatternVertices vertices are rejected with Error.
std::optional<std::vector<Vertex>> dp_subiso(const NiceDecomposition& nd, const Graph& g,
                                             const Graph& pattern, bool induced);

std::vector<Vertex> dp_solve(Problem p, const NiceDecomposition& nd, const Graph& g);

bool is_independent_set(const Graph& g, const std::vector<Vertex>& set);
bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& set);
bool is_dominating_set(const Graph& g, const std::vector<Vertex>& set);
bool dominates(const Graph& g, const std::vector<Vertex>& set, const std::vector<bool>& required);
bool is_feasible(Problem p, const Graph& g, const std::vector<Vertex>& set);
bool is_pattern_embedding(const Graph& g, const Graph& pattern, const std::vector<Vertex>& map,
                          bool induced);

}  // namespace shallow
