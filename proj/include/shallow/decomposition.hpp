#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shallow/graph.hpp"

namespace shallow {

// Tree of bags over a host graph. Bags are kept sorted.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;

  int num_nodes() const { return static_cast<int>(bags.size()); }
  // Largest bag size minus one; 0 when every bag is empty.
  int width() const;
  int add_node(std::vector<Vertex> bag);
  void add_tree_edge(int a, int b) { tree_edges.emplace_back(a, b); }
};

enum class Violation {
  none,
  not_a_tree,
  vertex_out_of_range,
  vertex_uncovered,
  edge_uncovered,
  occurrence_disconnected,
};

std::string to_string(Violation v);

// Outcome of checking the three bag conditions. On failure the witness fields
// name the offending vertex, edge, or pair of nodes that are not joined
// through bags containing `vertex`.
struct ValidationReport {
  bool valid = false;
  Violation violation = Violation::none;
  Vertex vertex = kNoVertex;
  EdgeId edge = kNoEdge;
  int node_a = -1;
  int node_b = -1;
  int width = 0;
  std::string message;
};

ValidationReport validate(const TreeDecomposition& td, const Graph& g);

// Contracts tree edges whose endpoint bags are nested. Width is unchanged.
TreeDecomposition compact(const TreeDecomposition& td);

// Greedy minimum-degree elimination (ties to the lowest id).
TreeDecomposition min_degree_decomposition(const Graph& g);

TreeDecomposition single_bag_decomposition(const Graph& g);

enum class NiceKind { leaf, introduce, forget, join };

struct NiceNode {
  NiceKind kind = NiceKind::leaf;
  Vertex vertex = kNoVertex;  // introduced / forgotten vertex
  std::vector<int> children;
  std::vector<Vertex> bag;
};

// Rooted binary decomposition; children always precede their parent in
// `nodes`, leaves and the root have empty bags.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  int width() const;
};

// Throws Error if td is not a tree. Use the graph overload to reject
// decompositions that violate any bag condition.
NiceDecomposition make_nice(const TreeDecomposition& td);
NiceDecomposition make_nice(const TreeDecomposition& td, const Graph& g);

// Empty string when every node obeys its kind's bag rule.
std::string check_nice(const NiceDecomposition& nd);

TreeDecomposition to_tree_decomposition(const NiceDecomposition& nd);

}  // namespace shallow
