#include "shallow/genus_td.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "shallow/errors.hpp"

namespace shallow {

namespace {

BranchStructure branch_structure(const Graph& g, const std::vector<Vertex>& vertices,
                                 const std::vector<EdgeId>& edges) {
  BranchStructure out;
  std::vector<int> degree(g.num_vertices(), 0);
  std::vector<std::vector<EdgeId>> inc(g.num_vertices());
  for (EdgeId id : edges) {
    const Edge& ed = g.edge(id);
    ++degree[ed.u];
    ++degree[ed.v];
    inc[ed.u].push_back(id);
    if (!ed.is_loop()) inc[ed.v].push_back(id);
  }
  std::vector<bool> is_branch(g.num_vertices(), false);
  for (Vertex v : vertices) {
    if (degree[v] != 2) {
      is_branch[v] = true;
      out.branch_vertices.push_back(v);
    }
  }
  if (out.branch_vertices.empty()) {
    // X is a single cycle
    is_branch[vertices.front()] = true;
    out.branch_vertices.push_back(vertices.front());
  }
  std::vector<bool> used(g.num_edges(), false);
  for (Vertex b : out.branch_vertices) {
    for (EdgeId first : inc[b]) {
      if (used[first]) continue;
      std::vector<Vertex> path{b};
      Vertex at = b;
      EdgeId via = first;
      while (true) {
        used[via] = true;
        at = g.edge(via).other(at);
        path.push_back(at);
        if (is_branch[at]) break;
        EdgeId next = kNoEdge;
        for (EdgeId cand : inc[at]) {
          if (!used[cand]) next = cand;
        }
        if (next == kNoEdge) break;
        via = next;
      }
      out.paths.push_back(std::move(path));
    }
  }
  return out;
}

}  // namespace

CutGraph cut_graph(const EmbeddedGraph& e, Vertex root) {
  if (root < 0 || root >= e.num_vertices()) throw Error("root out of range: " + std::to_string(root));
  if (e.num_components() != 1) throw Error("cut_graph requires a connected graph");
  CutGraph out;
  out.trees = tree_cotree(e, bfs_layering(e.graph(), root));
  out.leftover_edges = out.trees.leftover_edges;
  const Layering& bfs = out.trees.bfs_tree;

  std::vector<bool> in_x(e.num_vertices(), false);
  std::vector<bool> edge_in_x(e.num_edges(), false);
  in_x[root] = true;
  for (EdgeId id : out.leftover_edges) {
    edge_in_x[id] = true;
    for (Vertex end : {e.graph().edge(id).u, e.graph().edge(id).v}) {
      for (Vertex x = end; !in_x[x]; x = bfs.parent[x]) {
        in_x[x] = true;
        edge_in_x[bfs.parent_edge[x]] = true;
      }
    }
  }
  for (Vertex v = 0; v < e.num_vertices(); ++v) {
    if (in_x[v]) out.vertices.push_back(v);
  }
  for (EdgeId id = 0; id < e.num_edges(); ++id) {
    if (edge_in_x[id]) out.edges.push_back(id);
  }
  out.branches = branch_structure(e.graph(), out.vertices, out.edges);
  return out;
}

GenusTD genus_td(const EmbeddedGraph& e, Vertex root) {
  GenusTD out;
  out.cut = cut_graph(e, root);
  out.depth = out.cut.trees.bfs_tree.depth;

  Contraction c = contract_connected_set(e, out.cut.vertices, out.cut.edges);
  out.contracted_genus = c.genus;
  if (c.genus != 0) {
    throw std::logic_error("contracting the cut graph left genus " + std::to_string(c.genus));
  }
  PlanarTD inner = planar_bfs_td(c.embedding, c.contracted);
  out.contracted_depth = inner.depth;

  out.td.tree_edges = std::move(inner.td.tree_edges);
  out.td.bags.reserve(inner.td.bags.size());
  for (const auto& bag : inner.td.bags) {
    std::vector<Vertex> lifted = out.cut.vertices;
    for (Vertex v : bag) {
      if (v != c.contracted) lifted.push_back(c.map.new_to_old[v]);
    }
    out.td.add_node(std::move(lifted));
  }
  return out;
}

}  // namespace shallow
