#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "shallow/parallel.hpp"

namespace shallow {

using Vertex = int;
using EdgeId = int;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  bool is_loop() const { return u == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph with stable ids. Edge ids are assigned in insertion
// order; every edge id appears twice across the incidence lists (a loop
// appears twice at its vertex).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws Error if an endpoint is outside [0, n).
  EdgeId add_edge(Vertex u, Vertex v);

  int num_vertices() const { return static_cast<int>(incidence_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const { return incidence_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incidence_[v].size()); }

  bool has_edge(Vertex u, Vertex v) const;
  // Distinct neighbours other than v itself, ascending.
  std::vector<Vertex> neighbors(Vertex v) const;
  bool has_loops() const;
  bool has_parallel_edges() const;
  bool is_simple() const { return !has_loops() && !has_parallel_edges(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.num_vertices() == b.num_vertices();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

// Correspondence between a derived graph (subgraph or minor) and its source.
// old_to_new is kNoVertex for deleted vertices; after a contraction several
// old vertices share one new vertex and new_to_old holds the smallest of them.
struct SubgraphMap {
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;
  std::vector<EdgeId> edge_to_old;
};

struct DerivedGraph {
  Graph graph;
  SubgraphMap map;
};

DerivedGraph delete_vertices(const Graph& g, std::span<const Vertex> removed);
DerivedGraph induced_subgraph(const Graph& g, const std::vector<bool>& keep);

inline constexpr int kUnreached = -1;

// BFS tree. Vertices outside the root's component keep level kUnreached.
struct Layering {
  Vertex root = kNoVertex;
  std::vector<int> level;
  std::vector<Vertex> parent;
  std::vector<EdgeId> parent_edge;
  int depth = 0;
  int reached = 0;

  bool spans() const { return reached == static_cast<int>(level.size()); }
  // v, parent(v), ..., root.
  std::vector<Vertex> path_to_root(Vertex v) const;
};

// Levels are distances from root; each vertex's parent is its lowest-numbered
// neighbour on the previous level (lowest edge id among parallel edges).
Layering bfs_layering(const Graph& g, Vertex root);

std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Component index per vertex, numbered by smallest member.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

std::vector<int> eccentricities(const Graph& g, const Execution& exec = {});

// nullopt means infinite (disconnected input).
std::optional<int> diameter(const Graph& g, const Execution& exec = {});

}  // namespace shallow
