#include <doctest.h>

#include "shallow/decomposition.hpp"
#include "shallow/errors.hpp"
#include "shallow/generators.hpp"
#include "shallow/oracles.hpp"
#include "support.hpp"

using namespace shallow;
using namespace testing;

namespace {

TreeDecomposition path_td(std::vector<std::vector<Vertex>> bags) {
  TreeDecomposition td;
  for (auto& b : bags) td.add_node(std::move(b));
  for (int i = 0; i + 1 < td.num_nodes(); ++i) td.add_tree_edge(i, i + 1);
  return td;
}

}  // namespace

TEST_CASE("add_node sorts and deduplicates; width of empty bags is 0") {
  TreeDecomposition td;
  td.add_node({3, 1, 3});
  CHECK(td.bags[0] == std::vector<Vertex>{1, 3});
  CHECK(td.width() == 1);
  TreeDecomposition empty;
  empty.add_node({});
  CHECK(empty.width() == 0);
}

TEST_CASE("validate accepts a path decomposition of a path") {
  const ValidationReport r = validate(path_td({{0, 1}, {1, 2}, {2, 3}}), path_graph(4));
  CHECK(r.valid);
  CHECK(r.violation == Violation::none);
  CHECK(r.width == 1);
}

TEST_CASE("validate names each violation") {
  const Graph p4 = path_graph(4);
  SUBCASE("not a tree") {
    TreeDecomposition td = path_td({{0, 1}, {1, 2}, {2, 3}});
    td.add_tree_edge(0, 2);
    CHECK(validate(td, p4).violation == Violation::not_a_tree);
    td.tree_edges.clear();
    CHECK(validate(td, p4).violation == Violation::not_a_tree);
  }
  SUBCASE("vertex out of range") {
    CHECK(validate(path_td({{0, 1}, {1, 2}, {2, 3, 4}}), p4).violation == Violation::vertex_out_of_range);
  }
  SUBCASE("vertex uncovered") {
    const ValidationReport r = validate(path_td({{0, 1}, {1, 2}}), p4);
    CHECK(r.violation == Violation::vertex_uncovered);
    CHECK(r.vertex == 3);
  }
  SUBCASE("edge uncovered") {
    const ValidationReport r = validate(path_td({{0, 1}, {2}, {2, 3}}), p4);
    CHECK(r.violation == Violation::edge_uncovered);
    CHECK(r.edge == 1);
  }
  SUBCASE("occurrence disconnected") {
    const ValidationReport r = validate(path_td({{0, 1, 2}, {2, 3}, {1}}), p4);
    CHECK(r.violation == Violation::occurrence_disconnected);
    CHECK(r.vertex == 1);
    CHECK_FALSE(r.message.empty());
  }
}

TEST_CASE("min-degree decomposition is valid and never beats the exact width") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_connected_graph(10, seed % 2 ? 0.2 : 0.45, seed);
    const TreeDecomposition td = min_degree_decomposition(g);
    CHECK(validate(td, g).valid);
    CHECK(td.width() >= exact_treewidth(g).width);
  }
  CHECK(min_degree_decomposition(cycle_graph(8)).width() == 2);
  CHECK(min_degree_decomposition(star_graph(5)).width() == 1);
  CHECK(validate(min_degree_decomposition(graph_of(5, {{0, 1}, {3, 4}})), graph_of(5, {{0, 1}, {3, 4}})).valid);
}

TEST_CASE("compact merges nested bags") {
  const TreeDecomposition td = path_td({{0, 1}, {1}, {1, 2}, {2}, {2, 3}});
  const TreeDecomposition c = compact(td);
  CHECK(c.num_nodes() == 3);
  CHECK(validate(c, path_graph(4)).valid);
  CHECK(c.width() == td.width());
}

TEST_CASE("nice decompositions keep validity and width") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_connected_graph(12, 0.25, seed);
    const TreeDecomposition td = min_degree_decomposition(g);
    const NiceDecomposition nd = make_nice(td, g);
    CHECK(check_nice(nd).empty());
    CHECK(nd.width() == td.width());
    CHECK(nd.nodes[nd.root].bag.empty());
    for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
      for (int c : nd.nodes[i].children) CHECK(c < static_cast<int>(i));
      if (nd.nodes[i].kind == NiceKind::join) CHECK(nd.nodes[i].children.size() == 2);
      if (nd.nodes[i].kind == NiceKind::leaf) CHECK(nd.nodes[i].bag.empty());
    }
    CHECK(validate(to_tree_decomposition(nd), g).valid);
  }
}

TEST_CASE("make_nice with a graph rejects invalid decompositions") {
  CHECK_THROWS_AS(make_nice(path_td({{0, 1}, {2}, {2, 3}}), path_graph(4)), Error);
  TreeDecomposition cyclic = path_td({{0}, {0}, {0}});
  cyclic.add_tree_edge(2, 0);
  CHECK_THROWS_AS(make_nice(cyclic), Error);
}

TEST_CASE("single bag decomposition") {
  const TreeDecomposition td = single_bag_decomposition(complete_graph(5));
  CHECK(td.width() == 4);
  CHECK(validate(td, complete_graph(5)).valid);
}
