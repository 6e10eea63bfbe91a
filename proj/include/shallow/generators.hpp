#pragma once

#include <cstdint>
#include <vector>

#include "shallow/embedding.hpp"

namespace shallow {

// rows x cols grid; vertex r*cols + c. Rotation order: right, down, left, up.
EmbeddedGraph grid(int rows, int cols);

// n x n grid (ids as in grid()) plus an apex n*n adjacent to every grid vertex.
Graph apex_over_grid(int n);

// C_rows x C_cols on the torus, same vertex numbering and rotation order as
// grid(); genus 1.
EmbeddedGraph toroidal_grid(int rows, int cols);

// Axial hex coordinate. The six neighbours, counter-clockwise starting east,
// are (+1,0) (+1,-1) (0,-1) (-1,0) (-1,+1) (0,+1).
struct Hex {
  int q = 0;
  int r = 0;
  friend auto operator<=>(const Hex&, const Hex&) = default;
};

int hex_distance(Hex a, Hex b);
std::vector<Hex> hex_ball(int radius);

// Corner i of a hexagon lies between its neighbours in directions i and i+1;
// a corner is identified by the three hexagons meeting at it. Vertices are
// numbered in order of first appearance when visiting hexagons in sorted
// (q, r) order and corners 0..5. Rotations are counter-clockwise in the plane.
// Throws Error if the set is empty or not edge-connected.
struct HexSetGraph {
  EmbeddedGraph embedding;
  std::vector<Hex> hexes;
  // For each vertex, the member hexagons it is a corner of.
  std::vector<std::vector<int>> vertex_hexes;
  // Vertex lies on the boundary of the union (some surrounding hexagon absent).
  std::vector<bool> outer;
};

HexSetGraph hex_set_graph(std::vector<Hex> coords);

struct WallSpec {
  int size = 0;
  std::vector<Hex> hex_coords;
  // Smallest t for which the vertex is t-inner.
  std::vector<int> inner_level;
  std::vector<bool> outer;

  bool is_inner(Vertex v, int t) const { return inner_level[v] <= t; }
};

struct Wall {
  WallSpec spec;
  EmbeddedGraph embedding;
};

// Unsubdivided wall of all hexagons within distance s-1 of the origin.
Wall wall(int s);

// Replaces every edge by a path of `factor` edges (factor >= 1); the
// rotation of original vertices is preserved.
EmbeddedGraph subdivide(const EmbeddedGraph& e, int factor);

// Starts from a triangle and inserts vertices into faces chosen uniformly
// with a seeded mt19937_64; each new vertex is joined to the face's corners.
EmbeddedGraph random_planar_triangulation(int n, std::uint64_t seed);

}  // namespace shallow
