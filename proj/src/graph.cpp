#include "shallow/graph.hpp"

#include <algorithm>
#include <string>

#include "shallow/errors.hpp"

namespace shallow {

Graph::Graph(int n) : incidence_(n < 0 ? 0 : n) {
  if (n < 0) throw Error("vertex count must be nonnegative");
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
  const int n = num_vertices();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw Error("edge endpoint out of range: (" + std::to_string(u) + ", " + std::to_string(v) +
                ") with n = " + std::to_string(n));
  }
  const EdgeId id = num_edges();
  edges_.push_back({u, v});
  incidence_[u].push_back(id);
  incidence_[v].push_back(id);
  return id;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const Vertex probe = degree(u) <= degree(v) ? u : v;
  const Vertex target = probe == u ? v : u;
  for (EdgeId e : incidence_[probe]) {
    if (edges_[e].other(probe) == target) return true;
  }
  return false;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(incidence_[v].size());
  for (EdgeId e : incidence_[v]) {
    const Vertex w = edges_[e].other(v);
    if (w != v) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Graph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Graph::has_parallel_edges() const {
  std::vector<int> mark(num_vertices(), -1);
  for (Vertex v = 0; v < num_vertices(); ++v) {
    for (EdgeId e : incidence_[v]) {
      const Vertex w = edges_[e].other(v);
      if (w == v) continue;
      if (mark[w] == v) return true;
      mark[w] = v;
    }
  }
  return false;
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

DerivedGraph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  DerivedGraph out;
  out.map.old_to_new.assign(g.num_vertices(), kNoVertex);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (keep[v]) {
      out.map.old_to_new[v] = static_cast<Vertex>(out.map.new_to_old.size());
      out.map.new_to_old.push_back(v);
    }
  }
  out.graph = Graph(static_cast<int>(out.map.new_to_old.size()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Vertex a = out.map.old_to_new[g.edge(e).u];
    const Vertex b = out.map.old_to_new[g.edge(e).v];
    if (a == kNoVertex || b == kNoVertex) continue;
    out.graph.add_edge(a, b);
    out.map.edge_to_old.push_back(e);
  }
  return out;
}

DerivedGraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> keep(g.num_vertices(), true);
  for (Vertex v : removed) {
    if (v < 0 || v >= g.num_vertices()) throw Error("vertex out of range: " + std::to_string(v));
    keep[v] = false;
  }
  return induced_subgraph(g, keep);
}

std::vector<Vertex> Layering::path_to_root(Vertex v) const {
  std::vector<Vertex> path;
  if (level[v] == kUnreached) return path;
  for (Vertex x = v; x != kNoVertex; x = parent[x]) path.push_back(x);
  return path;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.num_vertices(), kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (EdgeId e : g.incident(x)) {
      const Vertex y = g.edge(e).other(x);
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

Layering bfs_layering(const Graph& g, Vertex root) {
  const int n = g.num_vertices();
  if (root < 0 || root >= n) throw Error("BFS root out of range: " + std::to_string(root));
  Layering lay;
  lay.root = root;
  lay.level = bfs_distances(g, root);
  lay.parent.assign(n, kNoVertex);
  lay.parent_edge.assign(n, kNoEdge);
  for (Vertex v = 0; v < n; ++v) {
    if (lay.level[v] == kUnreached) continue;
    ++lay.reached;
    lay.depth = std::max(lay.depth, lay.level[v]);
    if (v == root) continue;
    for (EdgeId e : g.incident(v)) {
      const Vertex w = g.edge(e).other(v);
      if (lay.level[w] != lay.level[v] - 1) continue;
      if (lay.parent[v] == kNoVertex || w < lay.parent[v] ||
          (w == lay.parent[v] && e < lay.parent_edge[v])) {
        lay.parent[v] = w;
        lay.parent_edge[v] = e;
      }
    }
  }
  return lay;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  std::vector<int> comp(g.num_vertices(), -1);
  int c = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        const Vertex y = g.edge(e).other(x);
        if (comp[y] == -1) {
          comp[y] = c;
          stack.push_back(y);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

std::vector<int> eccentricities(const Graph& g, const Execution& exec) {
  std::vector<int> ecc(g.num_vertices(), 0);
  parallel_for(ecc.size(), exec, [&](std::size_t s) {
    const std::vector<int> dist = bfs_distances(g, static_cast<Vertex>(s));
    int best = 0;
    for (int d : dist) {
      if (d == kUnreached) {
        best = kUnreached;
        break;
      }
      best = std::max(best, d);
    }
    ecc[s] = best;
  });
  return ecc;
}

std::optional<int> diameter(const Graph& g, const Execution& exec) {
  int best = 0;
  for (int e : eccentricities(g, exec)) {
    if (e == kUnreached) return std::nullopt;
    best = std::max(best, e);
  }
  return best;
}

}  // namespace shallow
