#include <doctest.h>

#include "shallow/errors.hpp"
#include "shallow/generators.hpp"
#include "shallow/genus_td.hpp"
#include "support.hpp"

using namespace shallow;
using namespace testing;

TEST_CASE("toroidal grids: cut graph, planar contraction and width bound") {
  for (int r = 3; r <= 5; ++r) {
    for (int c = 3; c <= 5; ++c) {
      const EmbeddedGraph e = toroidal_grid(r, c);
      CHECK(e.genus() == 1);
      for (Vertex root : {0, e.num_vertices() - 1}) {
        const GenusTD g = genus_td(e, root);
        const int x = static_cast<int>(g.cut.vertices.size());
        CHECK(g.cut.leftover_edges.size() == 2);
        CHECK(g.contracted_genus == 0);
        const ValidationReport rep = validate(g.td, e.graph());
        CHECK_MESSAGE(rep.valid, rep.message);
        CHECK(g.td.width() <= 3 * (g.depth + 1) + x);
        CHECK(x <= 2 * (2 * g.depth + 1) + 1);
        for (const auto& bag : g.td.bags)
          for (Vertex v : g.cut.vertices) CHECK(std::binary_search(bag.begin(), bag.end(), v));
      }
    }
  }
}

TEST_CASE("the cut graph is connected and contains every leftover edge") {
  const EmbeddedGraph e = toroidal_grid(4, 5);
  const CutGraph cut = cut_graph(e, 7);
  std::vector<bool> keep(e.num_vertices(), false);
  for (Vertex v : cut.vertices) keep[v] = true;
  CHECK(keep[7]);
  CHECK(is_connected(induced_subgraph(e.graph(), keep).graph));
  for (EdgeId id : cut.leftover_edges) CHECK(std::binary_search(cut.edges.begin(), cut.edges.end(), id));
  // X is a subdivided theta or figure-eight: at most two branch vertices
  CHECK(cut.branches.branch_vertices.size() <= 2);
  std::size_t path_edges = 0;
  for (const auto& p : cut.branches.paths) path_edges += p.size() - 1;
  CHECK(path_edges == cut.edges.size());
}

TEST_CASE("planar input reduces to the planar bound plus the root") {
  for (const EmbeddedGraph& e : {grid(5, 6), wall(3).embedding, random_planar_triangulation(80, 3)}) {
    const GenusTD g = genus_td(e, 0);
    CHECK(g.cut.leftover_edges.empty());
    CHECK(g.cut.vertices == std::vector<Vertex>{0});
    CHECK(validate(g.td, e.graph()).valid);
    CHECK(g.td.width() <= 3 * g.contracted_depth + 1);
  }
}

TEST_CASE("genus pipeline rejects disconnected input") {
  CHECK_THROWS_AS(genus_td(incidence_embedding(graph_of(4, {{0, 1}, {2, 3}})), 0), Error);
}
