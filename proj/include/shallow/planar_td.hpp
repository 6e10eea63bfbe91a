#pragma once

#include <vector>

#include "shallow/decomposition.hpp"
#include "shallow/embedding.hpp"

namespace shallow {

// Interdigitating trees of an embedded graph: a BFS tree, a spanning tree of
// the dual grown across non-tree edges only, and the leftover edges that lie
// in neither (2g of them for a connected genus-g embedding).
struct DualTreePair {
  Layering bfs_tree;
  std::vector<bool> in_tree;             // per edge
  std::vector<EdgeId> cotree_edges;      // dual tree edges, in discovery order
  std::vector<int> cotree_parent_face;   // -1 for the dual root (face 0)
  std::vector<EdgeId> leftover_edges;
  int faces_reached = 0;
};

// The layering must span e (connected input).
DualTreePair tree_cotree(const EmbeddedGraph& e, const Layering& bfs);

struct PlanarTD {
  TreeDecomposition td;
  int depth = 0;  // BFS depth from the root in the triangulated graph
};

// Width <= 3 * depth: triangulate, take the BFS tree from root, span the
// triangles by a dual tree over non-tree edges, and give each triangle the
// union of its corners' root paths as its bag. The decomposition is over the
// vertices of e. Throws Error for nonplanar or disconnected input.
PlanarTD planar_bfs_td(const EmbeddedGraph& e, Vertex root);

struct SliceDecomposition {
  DerivedGraph slice;      // induced subgraph on levels [lo, hi], local ids
  TreeDecomposition td;    // over slice.graph
  int depth = 0;           // BFS depth used by the underlying planar_bfs_td
};

// Decomposes the levels [lo, hi] of a layering of a planar graph: deeper
// levels are deleted, shallower ones contracted into a single root that is
// stripped from the bags afterwards. Width <= 3 * (hi - lo + 2).
SliceDecomposition slice_td(const EmbeddedGraph& e, const Layering& layering, int lo, int hi);

// Minimum-eccentricity vertex over an evenly spaced deterministic sample of
// at most `samples` vertices (ties to the lowest id).
Vertex choose_root(const Graph& g, int samples = 16);

}  // namespace shallow
