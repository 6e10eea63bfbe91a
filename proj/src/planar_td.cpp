#include "shallow/planar_td.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "shallow/errors.hpp"

namespace shallow {

DualTreePair tree_cotree(const EmbeddedGraph& e, const Layering& bfs) {
  if (!bfs.spans() || static_cast<int>(bfs.level.size()) != e.num_vertices()) {
    throw Error("tree-cotree decomposition needs a spanning BFS tree");
  }
  DualTreePair out;
  out.bfs_tree = bfs;
  out.in_tree.assign(e.num_edges(), false);
  for (Vertex v = 0; v < e.num_vertices(); ++v) {
    if (bfs.parent_edge[v] != kNoEdge) out.in_tree[bfs.parent_edge[v]] = true;
  }
  const int faces = static_cast<int>(e.faces().size());
  out.cotree_parent_face.assign(faces, -1);
  std::vector<bool> crossed(e.num_edges(), false);
  if (faces > 0) {
    std::vector<bool> seen(faces, false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int f = queue[head];
      for (Dart d : e.faces()[f]) {
        const EdgeId id = dart_edge(d);
        if (out.in_tree[id] || crossed[id]) continue;
        const int g = e.face_of(reverse(d));
        if (seen[g]) continue;
        seen[g] = true;
        crossed[id] = true;
        out.cotree_edges.push_back(id);
        out.cotree_parent_face[g] = f;
        queue.push_back(g);
      }
    }
    out.faces_reached = static_cast<int>(queue.size());
  }
  for (EdgeId id = 0; id < e.num_edges(); ++id) {
    if (!out.in_tree[id] && !crossed[id]) out.leftover_edges.push_back(id);
  }
  return out;
}

PlanarTD planar_bfs_td(const EmbeddedGraph& e, Vertex root) {
  const int n = e.num_vertices();
  if (root < 0 || root >= n) throw Error("root out of range: " + std::to_string(root));
  if (!e.is_planar()) throw Error("planar_bfs_td requires a planar embedding (genus " +
                                  std::to_string(e.genus()) + ")");
  if (e.num_components() != 1) throw Error("planar_bfs_td requires a connected graph");

  PlanarTD out;
  if (n <= 2) {
    out.td = single_bag_decomposition(e.graph());
    out.depth = n - 1;
    return out;
  }
  const EmbeddedGraph tri = triangulate(simplify(e).embedding);
  const Layering bfs = bfs_layering(tri.graph(), root);
  const DualTreePair pair = tree_cotree(tri, bfs);
  const int faces = static_cast<int>(tri.faces().size());
  if (!pair.leftover_edges.empty() || pair.faces_reached != faces) {
    throw std::logic_error("planar_bfs_td: BFS tree and dual tree do not interdigitate");
  }
  out.depth = bfs.depth;

  std::vector<int> stamp(n, -1);
  out.td.bags.resize(faces);
  for (int f = 0; f < faces; ++f) {
    auto& bag = out.td.bags[f];
    for (Dart d : tri.faces()[f]) {
      for (Vertex x = tri.tail(d); x != kNoVertex && stamp[x] != f; x = bfs.parent[x]) {
        stamp[x] = f;
        bag.push_back(x);
      }
    }
    std::sort(bag.begin(), bag.end());
  }
  for (EdgeId id : pair.cotree_edges) {
    out.td.add_tree_edge(tri.face_of(make_dart(id, 0)), tri.face_of(make_dart(id, 1)));
  }
  return out;
}

SliceDecomposition slice_td(const EmbeddedGraph& e, const Layering& layering, int lo, int hi) {
  if (static_cast<int>(layering.level.size()) != e.num_vertices()) {
    throw Error("layering does not belong to this graph");
  }
  if (lo < 0 || lo > hi || hi > layering.depth) {
    throw Error("invalid level range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                "] for depth " + std::to_string(layering.depth));
  }
  const int n = e.num_vertices();
  std::vector<bool> upto_hi(n), in_slice(n);
  for (Vertex v = 0; v < n; ++v) {
    const int l = layering.level[v];
    upto_hi[v] = l != kUnreached && l <= hi;
    in_slice[v] = upto_hi[v] && l >= lo;
  }

  SliceDecomposition out;
  out.slice = induced_subgraph(e.graph(), in_slice);

  const DerivedEmbedding kept = induced_subgraph(e, upto_hi);
  EmbeddedGraph reduced = kept.embedding;
  std::vector<Vertex> to_host = kept.map.new_to_old;
  Vertex root = kept.map.old_to_new[layering.root];
  Vertex super_root = kNoVertex;
  if (lo > 0) {
    std::vector<Vertex> shallow_part;
    for (Vertex v = 0; v < reduced.num_vertices(); ++v) {
      if (layering.level[to_host[v]] < lo) shallow_part.push_back(v);
    }
    Contraction c = contract_connected_set(reduced, shallow_part);
    std::vector<Vertex> host(c.map.new_to_old.size());
    for (std::size_t v = 0; v < host.size(); ++v) host[v] = to_host[c.map.new_to_old[v]];
    to_host = std::move(host);
    reduced = std::move(c.embedding);
    root = super_root = c.contracted;
  }

  PlanarTD inner = planar_bfs_td(reduced, root);
  out.depth = inner.depth;
  out.td.tree_edges = std::move(inner.td.tree_edges);
  out.td.bags.reserve(inner.td.bags.size());
  for (const auto& bag : inner.td.bags) {
    std::vector<Vertex> mapped;
    mapped.reserve(bag.size());
    for (Vertex v : bag) {
      if (v == super_root) continue;
      mapped.push_back(out.slice.map.old_to_new[to_host[v]]);
    }
    out.td.add_node(std::move(mapped));
  }
  return out;
}

Vertex choose_root(const Graph& g, int samples) {
  const int n = g.num_vertices();
  if (n == 0) throw Error("graph has no vertices");
  const int count = std::min(n, std::max(1, samples));
  Vertex best = 0;
  int best_ecc = -1;
  for (int i = 0; i < count; ++i) {
    const Vertex v = static_cast<Vertex>(static_cast<long long>(i) * n / count);
    const auto dist = bfs_distances(g, v);
    int ecc = 0;
    for (int d : dist) ecc = std::max(ecc, d == kUnreached ? n : d);
    if (best_ecc == -1 || ecc < best_ecc) {
      best_ecc = ecc;
      best = v;
    }
  }
  return best;
}

}  // namespace shallow
