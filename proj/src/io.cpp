#include "shallow/io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

#include "shallow/errors.hpp"

namespace shallow {

namespace {

struct LineReader {
  std::istream& in;
  int number = 0;

  // Next non-empty, comment-stripped line split into tokens.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      ++number;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream split(line);
      tokens.assign(std::istream_iterator<std::string>(split), std::istream_iterator<std::string>());
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error("line " + std::to_string(number) + ": " + why);
  }

  int integer(const std::string& token) const {
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) fail("expected an integer, got '" + token + "'");
    return value;
  }
};

}  // namespace

GraphFile read_graph_file(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tok;
  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::vector<Dart>> rotation;
  std::vector<bool> has_rot;
  bool any_rot = false;
  while (reader.next(tok)) {
    if (tok[0] == "v") {
      if (n >= 0) reader.fail("duplicate 'v' record");
      if (tok.size() != 2) reader.fail("expected 'v <n>'");
      n = reader.integer(tok[1]);
      if (n < 0) reader.fail("negative vertex count");
      rotation.assign(n, {});
      has_rot.assign(n, false);
      continue;
    }
    if (n < 0) reader.fail("'v <n>' must come first");
    if (tok[0] == "e") {
      if (tok.size() != 3) reader.fail("expected 'e <u> <v>'");
      const int u = reader.integer(tok[1]), v = reader.integer(tok[2]);
      if (u < 0 || u >= n || v < 0 || v >= n) reader.fail("edge endpoint out of range");
      edges.emplace_back(u, v);
    } else if (tok[0] == "rot") {
      if (tok.size() < 2) reader.fail("expected 'rot <v> <edge>.<end> ...'");
      const int v = reader.integer(tok[1]);
      if (v < 0 || v >= n) reader.fail("rotation vertex out of range");
      if (has_rot[v]) reader.fail("duplicate rotation for vertex " + std::to_string(v));
      has_rot[v] = any_rot = true;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const auto dot = tok[i].find('.');
        if (dot == std::string::npos) reader.fail("dart '" + tok[i] + "' is not <edge>.<end>");
        const int edge = reader.integer(tok[i].substr(0, dot));
        const int end = reader.integer(tok[i].substr(dot + 1));
        if (edge < 0 || (end != 0 && end != 1)) reader.fail("bad dart '" + tok[i] + "'");
        rotation[v].push_back(make_dart(edge, end));
      }
    } else {
      reader.fail("unknown record '" + tok[0] + "'");
    }
  }
  if (n < 0) throw Error("graph file has no 'v <n>' record");
  GraphFile out{build_graph(n, edges), std::nullopt};
  if (any_rot) out.rotation = std::move(rotation);
  return out;
}

GraphFile parse_graph_file(const std::string& text) {
  std::istringstream in(text);
  return read_graph_file(in);
}

EmbeddedGraph to_embedding(const GraphFile& file) {
  if (!file.rotation) throw Error("graph file has no rotation system");
  return embed(file.graph, *file.rotation);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "v " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string format_embedding(const EmbeddedGraph& e) {
  std::ostringstream out;
  out << format_graph(e.graph());
  for (Vertex v = 0; v < e.num_vertices(); ++v) {
    out << "rot " << v;
    for (Dart d : e.rotation(v)) out << ' ' << dart_edge(d) << '.' << dart_end(d);
    out << '\n';
  }
  return out.str();
}

DecompositionFile read_decomposition_file(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tok;
  DecompositionFile out;
  int nodes = -1, width = 0;
  std::vector<bool> seen;
  std::vector<std::vector<Vertex>> bags;
  while (reader.next(tok)) {
    if (tok[0] == "td") {
      if (nodes >= 0) reader.fail("duplicate 'td' record");
      if (tok.size() != 4) reader.fail("expected 'td <nodes> <width> <n>'");
      nodes = reader.integer(tok[1]);
      width = reader.integer(tok[2]);
      out.num_vertices = reader.integer(tok[3]);
      if (nodes < 0 || out.num_vertices < 0) reader.fail("negative count");
      bags.assign(nodes, {});
      seen.assign(nodes, false);
      continue;
    }
    if (nodes < 0) reader.fail("'td' header must come first");
    if (tok[0] == "b") {
      if (tok.size() < 2) reader.fail("expected 'b <node> <v> ...'");
      const int node = reader.integer(tok[1]);
      if (node < 0 || node >= nodes) reader.fail("bag node out of range");
      if (seen[node]) reader.fail("duplicate bag for node " + std::to_string(node));
      seen[node] = true;
      for (std::size_t i = 2; i < tok.size(); ++i) bags[node].push_back(reader.integer(tok[i]));
    } else if (tok[0] == "t") {
      if (tok.size() != 3) reader.fail("expected 't <a> <b>'");
      const int a = reader.integer(tok[1]), b = reader.integer(tok[2]);
      if (a < 0 || a >= nodes || b < 0 || b >= nodes) reader.fail("tree edge endpoint out of range");
      out.td.tree_edges.emplace_back(a, b);
    } else {
      reader.fail("unknown record '" + tok[0] + "'");
    }
  }
  if (nodes < 0) throw Error("decomposition file has no 'td' header");
  auto edges = std::move(out.td.tree_edges);
  out.td = TreeDecomposition{};
  for (auto& bag : bags) out.td.add_node(std::move(bag));
  out.td.tree_edges = std::move(edges);
  if (out.td.width() != width) {
    throw Error("header width " + std::to_string(width) + " does not match bags (width " +
                std::to_string(out.td.width()) + ")");
  }
  return out;
}

DecompositionFile parse_decomposition_file(const std::string& text) {
  std::istringstream in(text);
  return read_decomposition_file(in);
}

std::string format_decomposition(const TreeDecomposition& td, int num_vertices) {
  std::ostringstream out;
  out << "td " << td.num_nodes() << ' ' << td.width() << ' ' << num_vertices << '\n';
  for (int i = 0; i < td.num_nodes(); ++i) {
    out << "b " << i;
    for (Vertex v : td.bags[i]) out << ' ' << v;
    out << '\n';
  }
  for (const auto& [a, b] : td.tree_edges) out << "t " << a << ' ' << b << '\n';
  return out.str();
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::string decomposition_to_dot(const TreeDecomposition& td) {
  std::ostringstream out;
  out << "graph TD {\n  node [shape=box];\n";
  for (int i = 0; i < td.num_nodes(); ++i) {
    out << "  n" << i << " [label=\"";
    for (std::size_t j = 0; j < td.bags[i].size(); ++j) out << (j ? " " : "") << td.bags[i][j];
    out << "\"];\n";
  }
  for (const auto& [a, b] : td.tree_edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace shallow
