#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "shallow/embedding.hpp"
#include "shallow/graph.hpp"

namespace testing {

using namespace shallow;

inline Graph graph_of(int n, std::vector<std::pair<Vertex, Vertex>> edges) {
  return build_graph(n, edges);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

inline Graph star_graph(int leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return build_graph(leaves + 1, e);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

// Darts listed in incidence order; planar for forests and graphs of maximum
// degree 2.
inline EmbeddedGraph incidence_embedding(const Graph& g) {
  std::vector<std::vector<Dart>> rot(g.num_vertices());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    rot[g.edge(id).u].push_back(make_dart(id, 0));
    rot[g.edge(id).v].push_back(make_dart(id, 1));
  }
  return EmbeddedGraph(g, rot);
}

// G(n, p) plus one edge between consecutive components.
inline Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  Graph g = build_graph(n, e);
  int count = 0;
  const std::vector<int> comp = connected_components(g, &count);
  std::vector<Vertex> rep(count, kNoVertex);
  for (Vertex v = 0; v < n; ++v)
    if (rep[comp[v]] == kNoVertex) rep[comp[v]] = v;
  for (int c = 1; c < count; ++c) e.emplace_back(rep[c - 1], rep[c]);
  return build_graph(n, e);
}

// All-pairs distances by Floyd-Warshall; -1 when unreachable.
inline std::vector<std::vector<int>> floyd_distances(const Graph& g) {
  const int n = g.num_vertices();
  const int inf = 1 << 29;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges())
    if (e.u != e.v) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  for (auto& row : d)
    for (int& x : row)
      if (x == inf) x = -1;
  return d;
}

}  // namespace testing
