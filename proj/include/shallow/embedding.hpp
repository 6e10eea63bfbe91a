#pragma once

#include <span>
#include <vector>

#include "shallow/graph.hpp"

namespace shallow {

// A dart is one end of an edge: dart 2e leaves edge(e).u, dart 2e+1 leaves
// edge(e).v. For a loop both darts leave the same vertex.
using Dart = int;

inline constexpr Dart make_dart(EdgeId e, int end) { return 2 * e + end; }
inline constexpr EdgeId dart_edge(Dart d) { return d >> 1; }
inline constexpr int dart_end(Dart d) { return d & 1; }
inline constexpr Dart reverse(Dart d) { return d ^ 1; }

// Graph plus an orientable rotation system (cyclic dart order per vertex).
// Faces are the orbits of d -> rotation_next(reverse(d)). An isolated vertex
// counts as one face of its own component, so n - m + f = 2c - 2g holds for
// every component count c.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  // Throws EmbeddingError unless every dart of g appears exactly once, in the
  // rotation of its own tail.
  EmbeddedGraph(Graph g, std::vector<std::vector<Dart>> rotation);

  const Graph& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }
  int num_edges() const { return graph_.num_edges(); }

  const std::vector<Dart>& rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Dart>>& rotations() const { return rotation_; }

  Vertex tail(Dart d) const {
    const Edge& e = graph_.edge(dart_edge(d));
    return dart_end(d) == 0 ? e.u : e.v;
  }
  Vertex head(Dart d) const { return tail(reverse(d)); }

  Dart rotation_next(Dart d) const { return succ_[d]; }
  Dart rotation_prev(Dart d) const { return pred_[d]; }
  Dart face_next(Dart d) const { return succ_[reverse(d)]; }

  // Dart cycles only; isolated vertices have no cycle.
  const std::vector<std::vector<Dart>>& faces() const { return faces_; }
  int face_of(Dart d) const { return face_of_[d]; }
  int num_faces() const { return static_cast<int>(faces_.size()) + isolated_; }
  int num_components() const { return components_; }
  int genus() const { return genus_; }
  bool is_planar() const { return genus_ == 0; }

 private:
  Graph graph_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<Dart> succ_;
  std::vector<Dart> pred_;
  std::vector<std::vector<Dart>> faces_;
  std::vector<int> face_of_;
  int isolated_ = 0;
  int components_ = 0;
  int genus_ = 0;
};

struct EmbeddingReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int components = 0;
  int genus = 0;
  std::vector<std::vector<Dart>> face_cycles;
};

// Retraces faces from the rotation and derives the genus from Euler's
// formula. Throws EmbeddingError for a negative or non-integral genus.
EmbeddingReport validate_embedding(const EmbeddedGraph& e);

// Builds the embedding from raw rotation lists; throws EmbeddingError when
// the rotation is inconsistent with the edge set.
EmbeddedGraph embed(Graph g, std::vector<std::vector<Dart>> rotation);

struct DerivedEmbedding {
  EmbeddedGraph embedding;
  SubgraphMap map;
};

// Induced sub-embedding: darts of removed vertices are dropped from the
// surviving rotations.
DerivedEmbedding induced_subgraph(const EmbeddedGraph& e, const std::vector<bool>& keep);
DerivedEmbedding delete_vertices(const EmbeddedGraph& e, std::span<const Vertex> removed);
DerivedEmbedding delete_edges(const EmbeddedGraph& e, const std::vector<bool>& remove_edge);

// Drops loops and every parallel edge except the lowest id of its class.
DerivedEmbedding simplify(const EmbeddedGraph& e);

struct Contraction {
  EmbeddedGraph embedding;
  SubgraphMap map;
  Vertex contracted = kNoVertex;
  int genus = 0;
};

// Contracts a connected vertex set to a single vertex along a skeleton: a
// set of edges inside the set that connects it and bounds a single face of
// its own sub-embedding (a cut graph, or any tree). Without a skeleton the
// BFS spanning tree of the induced subgraph (lowest ids first) is used. The
// contracted vertex's rotation lists the outside darts in the order they are
// met walking around that face, which splices rotations along tree edges.
// Loops produced by the contraction are deleted and parallel edges merged
// (lowest old id kept). Throws Error when the set is empty, not connected,
// or the skeleton is unusable.
Contraction contract_connected_set(const EmbeddedGraph& e, std::span<const Vertex> vertices,
                                   std::span<const EdgeId> skeleton = {});

// Adds chords until every face has exactly three darts. Input must be planar,
// connected, simple, with n >= 3. Original edges keep their ids; chords are
// appended (the result may contain parallel edges).
EmbeddedGraph triangulate(const EmbeddedGraph& e);

}  // namespace shallow
