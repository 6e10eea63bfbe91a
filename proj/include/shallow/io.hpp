#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shallow/decomposition.hpp"
#include "shallow/embedding.hpp"

namespace shallow {

// Graph text format, one record per line, '#' starts a comment:
//   v <n>                           vertex count (first record)
//   e <u> <v>                       edges, ids in order of appearance
//   rot <v> <edge>.<end> ...        optional rotation of v (end 0 leaves u)
// Either every vertex with an incident edge has a rot line or none does;
// format_embedding writes one for every vertex, isolated ones included.
struct GraphFile {
  Graph graph;
  std::optional<std::vector<std::vector<Dart>>> rotation;
};

// Parse failures throw Error naming the line.
GraphFile read_graph_file(std::istream& in);
GraphFile parse_graph_file(const std::string& text);
// Throws Error when the file has no rotation; EmbeddingError when it is
// inconsistent.
EmbeddedGraph to_embedding(const GraphFile& file);

std::string format_graph(const Graph& g);
std::string format_embedding(const EmbeddedGraph& e);

// Decomposition text format:
//   td <nodes> <width> <n>
//   b <node> <v> ...                one per node, in node order
//   t <a> <b>                       tree edges
struct DecompositionFile {
  TreeDecomposition td;
  int num_vertices = 0;
};

DecompositionFile read_decomposition_file(std::istream& in);
DecompositionFile parse_decomposition_file(const std::string& text);
std::string format_decomposition(const TreeDecomposition& td, int num_vertices);

std::string graph_to_dot(const Graph& g);
std::string decomposition_to_dot(const TreeDecomposition& td);

}  // namespace shallow
