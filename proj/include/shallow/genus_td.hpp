#pragma once

#include <vector>

#include "shallow/planar_td.hpp"

namespace shallow {

// X as a subdivision of a small multigraph Y: branch vertices are the X
// vertices whose X-degree differs from 2, and each path runs between two of
// them through degree-2 vertices.
struct BranchStructure {
  std::vector<Vertex> branch_vertices;
  std::vector<std::vector<Vertex>> paths;
};

// Cut graph X built from a tree-cotree decomposition: the leftover edges
// plus the BFS root paths of their endpoints. Cutting the surface along X
// leaves a disk, so contracting X gives a planar minor.
struct CutGraph {
  DualTreePair trees;
  std::vector<Vertex> vertices;        // sorted; always contains the root
  std::vector<EdgeId> edges;           // sorted
  std::vector<EdgeId> leftover_edges;  // 2g edges
  BranchStructure branches;
};

CutGraph cut_graph(const EmbeddedGraph& e, Vertex root);

struct GenusTD {
  TreeDecomposition td;
  CutGraph cut;
  int depth = 0;              // BFS depth of the root in e
  int contracted_depth = 0;   // depth used by the planar decomposition of e / X
  int contracted_genus = 0;
};

// Contracts X, decomposes the planar minor from the contracted vertex, lifts
// the bags back and adds X to each of them. Width <= 3*(depth+1) + |X|.
// Throws std::logic_error if the contraction is not planar.
GenusTD genus_td(const EmbeddedGraph& e, Vertex root);

}  // namespace shallow
