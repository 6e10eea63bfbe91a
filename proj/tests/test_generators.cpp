#include <doctest.h>

#include <algorithm>

#include "shallow/errors.hpp"
#include "shallow/generators.hpp"
#include "support.hpp"

using namespace shallow;
using namespace testing;

TEST_CASE("grid counts and embedding") {
  for (int r = 1; r <= 5; ++r) {
    for (int c = 1; c <= 5; ++c) {
      const EmbeddedGraph g = grid(r, c);
      CHECK(g.num_vertices() == r * c);
      CHECK(g.num_edges() == r * (c - 1) + c * (r - 1));
      CHECK(g.genus() == 0);
      CHECK(g.num_faces() == (r - 1) * (c - 1) + 1);
    }
  }
  CHECK(grid(3, 3).graph().has_edge(4, 5));
  CHECK(grid(3, 3).graph().has_edge(4, 7));
}

TEST_CASE("toroidal grid is 4-regular on the torus") {
  for (int r = 3; r <= 5; ++r) {
    for (int c = 3; c <= 5; ++c) {
      const EmbeddedGraph t = toroidal_grid(r, c);
      CHECK(t.num_edges() == 2 * r * c);
      CHECK(t.genus() == 1);
      for (Vertex v = 0; v < t.num_vertices(); ++v) CHECK(t.graph().degree(v) == 4);
    }
  }
  CHECK_THROWS_AS(toroidal_grid(2, 3), Error);
}

TEST_CASE("apex over grid adds one universal vertex") {
  for (int n = 2; n <= 6; ++n) {
    const Graph g = apex_over_grid(n);
    CHECK(g.num_vertices() == n * n + 1);
    CHECK(g.num_edges() == 2 * n * (n - 1) + n * n);
    CHECK(g.degree(n * n) == n * n);
  }
}

TEST_CASE("hex balls and distances") {
  CHECK(hex_ball(0).size() == 1);
  CHECK(hex_ball(1).size() == 7);
  CHECK(hex_ball(2).size() == 19);
  CHECK(hex_distance({0, 0}, {2, -1}) == 2);
  CHECK(hex_distance({1, -1}, {-1, 1}) == 2);
  CHECK(hex_distance({2, -1}, {-2, 1}) == 4);
}

TEST_CASE("two adjacent hexagons share an edge") {
  const HexSetGraph h = hex_set_graph({{0, 0}, {1, 0}});
  CHECK(h.embedding.num_vertices() == 10);
  CHECK(h.embedding.num_edges() == 11);
  CHECK(h.embedding.genus() == 0);
  CHECK(h.embedding.num_faces() == 3);
  CHECK_THROWS_AS(hex_set_graph({{0, 0}, {3, 0}}), Error);
  CHECK_THROWS_AS(hex_set_graph({}), Error);
}

TEST_CASE("walls: hexagon counts, size, degree, genus") {
  const int hexagons[] = {1, 7, 19};
  for (int s = 1; s <= 3; ++s) CHECK(wall(s).spec.hex_coords.size() == std::size_t(hexagons[s - 1]));
  const Wall w = wall(2);
  CHECK(w.embedding.num_vertices() == 24);
  CHECK(w.embedding.num_edges() == 30);
  CHECK(w.embedding.genus() == 0);
  for (int s = 1; s <= 4; ++s) {
    const Wall ws = wall(s);
    int max_degree = 0;
    for (Vertex v = 0; v < ws.embedding.num_vertices(); ++v)
      max_degree = std::max(max_degree, ws.embedding.graph().degree(v));
    CHECK(max_degree == (s == 1 ? 2 : 3));
    // every bounded face is a hexagon
    CHECK(ws.embedding.num_faces() == static_cast<int>(ws.spec.hex_coords.size()) + 1);
  }
}

TEST_CASE("1-inner vertices of wall(2) are the corners of the central hexagon") {
  const Wall w = wall(2);
  const HexSetGraph h = hex_set_graph(hex_ball(1));
  REQUIRE(h.embedding.graph() == w.embedding.graph());
  const int centre = static_cast<int>(std::find(h.hexes.begin(), h.hexes.end(), Hex{0, 0}) - h.hexes.begin());
  int inner = 0;
  for (Vertex v = 0; v < w.embedding.num_vertices(); ++v) {
    const auto& hs = h.vertex_hexes[v];
    const bool corner = std::find(hs.begin(), hs.end(), centre) != hs.end();
    CHECK(w.spec.is_inner(v, 1) == corner);
    inner += w.spec.is_inner(v, 1);
    CHECK(w.spec.outer[v] == h.outer[v]);
  }
  CHECK(inner == 6);
  // outer vertices of wall(2): 24 - 6 central corners
  CHECK(std::count(w.spec.outer.begin(), w.spec.outer.end(), true) == 18);
}

TEST_CASE("subdivision multiplies edges and keeps the genus") {
  for (int f = 1; f <= 4; ++f) {
    const EmbeddedGraph base = wall(2).embedding;
    const EmbeddedGraph s = subdivide(base, f);
    CHECK(s.num_edges() == f * base.num_edges());
    CHECK(s.num_vertices() == base.num_vertices() + (f - 1) * base.num_edges());
    CHECK(s.genus() == 0);
    CHECK(s.num_faces() == base.num_faces());
  }
  CHECK(subdivide(toroidal_grid(3, 3), 2).genus() == 1);
}

TEST_CASE("random planar triangulations are seeded, planar and maximal") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const EmbeddedGraph e = random_planar_triangulation(50, seed);
    CHECK(e.num_vertices() == 50);
    CHECK(e.num_edges() == 3 * 50 - 6);
    CHECK(e.genus() == 0);
    CHECK(e.graph().is_simple());
    for (const auto& f : e.faces()) CHECK(f.size() == 3);
  }
  CHECK(random_planar_triangulation(40, 7).graph() == random_planar_triangulation(40, 7).graph());
  CHECK_FALSE(random_planar_triangulation(40, 7).graph() == random_planar_triangulation(40, 8).graph());
}
