#include "shallow/embedding.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "shallow/errors.hpp"

namespace shallow {

namespace {

struct FaceTrace {
  std::vector<std::vector<Dart>> cycles;
  std::vector<int> face_of;
};

FaceTrace trace_faces(int num_darts, const std::vector<Dart>& succ) {
  FaceTrace t;
  t.face_of.assign(num_darts, -1);
  for (Dart start = 0; start < num_darts; ++start) {
    if (t.face_of[start] != -1) continue;
    const int id = static_cast<int>(t.cycles.size());
    std::vector<Dart> cycle;
    Dart d = start;
    do {
      t.face_of[d] = id;
      cycle.push_back(d);
      d = succ[reverse(d)];
    } while (d != start);
    t.cycles.push_back(std::move(cycle));
  }
  return t;
}

int genus_from_euler(int n, int m, int f, int components) {
  const int twice = 2 * components - n + m - f;
  if (twice < 0 || twice % 2 != 0) {
    throw EmbeddingError("rotation system yields invalid genus: 2c - n + m - f = " +
                         std::to_string(twice));
  }
  return twice / 2;
}

int count_isolated(const Graph& g) {
  int isolated = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) isolated += g.degree(v) == 0;
  return isolated;
}

// Cyclic dart lists stored as successor/predecessor links, used while
// splicing rotations during contraction and triangulation.
struct RotationLinks {
  std::vector<Dart> succ;
  std::vector<Dart> pred;
  std::vector<bool> alive;

  explicit RotationLinks(const EmbeddedGraph& e)
      : succ(2 * e.num_edges()), pred(2 * e.num_edges()), alive(2 * e.num_edges(), true) {
    for (Dart d = 0; d < 2 * e.num_edges(); ++d) {
      succ[d] = e.rotation_next(d);
      pred[d] = e.rotation_prev(d);
    }
  }

  void remove(Dart d) {
    if (!alive[d]) return;
    alive[d] = false;
    if (succ[d] == d) return;
    succ[pred[d]] = succ[d];
    pred[succ[d]] = pred[d];
  }

  Dart add_before(Dart anchor) {
    const Dart d = static_cast<Dart>(succ.size());
    succ.push_back(anchor);
    pred.push_back(pred[anchor]);
    alive.push_back(true);
    succ[pred[anchor]] = d;
    pred[anchor] = d;
    return d;
  }


  std::vector<Dart> cycle_from(Dart d) const {
    std::vector<Dart> out;
    Dart x = d;
    do {
      out.push_back(x);
      x = succ[x];
    } while (x != d);
    return out;
  }
};

}  // namespace

EmbeddedGraph::EmbeddedGraph(Graph g, std::vector<std::vector<Dart>> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  const int n = graph_.num_vertices();
  const int darts = 2 * graph_.num_edges();
  if (static_cast<int>(rotation_.size()) != n) {
    if (static_cast<int>(rotation_.size()) > n) {
      throw EmbeddingError("rotation lists more vertices than the graph has");
    }
    rotation_.resize(n);
  }
  succ_.assign(darts, -1);
  pred_.assign(darts, -1);
  std::vector<bool> seen(darts, false);
  int placed = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto& rot = rotation_[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Dart d = rot[i];
      if (d < 0 || d >= darts) {
        throw EmbeddingError("rotation of vertex " + std::to_string(v) + " names unknown dart " +
                             std::to_string(d));
      }
      if (seen[d]) throw EmbeddingError("dart " + std::to_string(d) + " appears twice in rotation");
      if (tail(d) != v) {
        throw EmbeddingError("dart " + std::to_string(d) + " listed at vertex " +
                             std::to_string(v) + " but leaves vertex " + std::to_string(tail(d)));
      }
      seen[d] = true;
      ++placed;
      const Dart nx = rot[(i + 1) % rot.size()];
      succ_[d] = nx;
      pred_[nx] = d;
    }
  }
  if (placed != darts) throw EmbeddingError("rotation system does not cover every dart");

  FaceTrace t = trace_faces(darts, succ_);
  faces_ = std::move(t.cycles);
  face_of_ = std::move(t.face_of);
  isolated_ = count_isolated(graph_);
  connected_components(graph_, &components_);
  genus_ = genus_from_euler(n, graph_.num_edges(), num_faces(), components_);
}

EmbeddedGraph embed(Graph g, std::vector<std::vector<Dart>> rotation) {
  return EmbeddedGraph(std::move(g), std::move(rotation));
}

EmbeddingReport validate_embedding(const EmbeddedGraph& e) {
  EmbeddingReport r;
  r.vertices = e.num_vertices();
  r.edges = e.num_edges();
  std::vector<Dart> succ(2 * e.num_edges());
  for (Vertex v = 0; v < e.num_vertices(); ++v) {
    const auto& rot = e.rotation(v);
    for (std::size_t i = 0; i < rot.size(); ++i) succ[rot[i]] = rot[(i + 1) % rot.size()];
  }
  r.face_cycles = trace_faces(2 * e.num_edges(), succ).cycles;
  r.faces = static_cast<int>(r.face_cycles.size()) + count_isolated(e.graph());
  connected_components(e.graph(), &r.components);
  r.genus = genus_from_euler(r.vertices, r.edges, r.faces, r.components);
  return r;
}

namespace {

// Keeps the listed vertices and edges (edges must have both ends kept),
// renumbering both in increasing old-id order.
DerivedEmbedding restrict_embedding(const EmbeddedGraph& e, const std::vector<bool>& keep_vertex,
                                    const std::vector<bool>& keep_edge) {
  DerivedEmbedding out;
  SubgraphMap& map = out.map;
  map.old_to_new.assign(e.num_vertices(), kNoVertex);
  for (Vertex v = 0; v < e.num_vertices(); ++v) {
    if (!keep_vertex[v]) continue;
    map.old_to_new[v] = static_cast<Vertex>(map.new_to_old.size());
    map.new_to_old.push_back(v);
  }
  Graph g(static_cast<int>(map.new_to_old.size()));
  std::vector<EdgeId> edge_new(e.num_edges(), kNoEdge);
  for (EdgeId id = 0; id < e.num_edges(); ++id) {
    if (!keep_edge[id]) continue;
    const Edge& ed = e.graph().edge(id);
    edge_new[id] = g.add_edge(map.old_to_new[ed.u], map.old_to_new[ed.v]);
    map.edge_to_old.push_back(id);
  }
  std::vector<std::vector<Dart>> rot(g.num_vertices());
  for (Vertex v = 0; v < e.num_vertices(); ++v) {
    if (!keep_vertex[v]) continue;
    auto& r = rot[map.old_to_new[v]];
    for (Dart d : e.rotation(v)) {
      const EdgeId ne = edge_new[dart_edge(d)];
      if (ne != kNoEdge) r.push_back(make_dart(ne, dart_end(d)));
    }
  }
  out.embedding = EmbeddedGraph(std::move(g), std::move(rot));
  return out;
}

}  // namespace

DerivedEmbedding induced_subgraph(const EmbeddedGraph& e, const std::vector<bool>& keep) {
  std::vector<bool> keep_edge(e.num_edges());
  for (EdgeId id = 0; id < e.num_edges(); ++id) {
    const Edge& ed = e.graph().edge(id);
    keep_edge[id] = keep[ed.u] && keep[ed.v];
  }
  return restrict_embedding(e, keep, keep_edge);
}

DerivedEmbedding delete_vertices(const EmbeddedGraph& e, std::span<const Vertex> removed) {
  std::vector<bool> keep(e.num_vertices(), true);
  for (Vertex v : removed) {
    if (v < 0 || v >= e.num_vertices()) throw Error("vertex out of range: " + std::to_string(v));
    keep[v] = false;
  }
  return induced_subgraph(e, keep);
}

DerivedEmbedding delete_edges(const EmbeddedGraph& e, const std::vector<bool>& remove_edge) {
  std::vector<bool> keep_edge(e.num_edges());
  for (EdgeId id = 0; id < e.num_edges(); ++id) keep_edge[id] = !remove_edge[id];
  return restrict_embedding(e, std::vector<bool>(e.num_vertices(), true), keep_edge);
}

DerivedEmbedding simplify(const EmbeddedGraph& e) {
  const Graph& g = e.graph();
  std::vector<bool> remove(g.num_edges(), false);
  std::vector<EdgeId> first(g.num_vertices(), kNoEdge);
  std::vector<Vertex> stamp(g.num_vertices(), kNoVertex);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<EdgeId> inc(g.incident(v).begin(), g.incident(v).end());
    std::sort(inc.begin(), inc.end());
    for (EdgeId id : inc) {
      const Vertex w = g.edge(id).other(v);
      if (w == v) {
        remove[id] = true;
        continue;
      }
      if (stamp[w] == v && first[w] != id) {
        remove[id] = true;
      } else {
        stamp[w] = v;
        first[w] = id;
      }
    }
  }
  return delete_edges(e, remove);
}

Contraction contract_connected_set(const EmbeddedGraph& e, std::span<const Vertex> vertices,
                                   std::span<const EdgeId> skeleton) {
  const Graph& g = e.graph();
  const int n = g.num_vertices();
  if (vertices.empty()) throw Error("cannot contract an empty vertex set");
  std::vector<bool> in_set(n, false);
  for (Vertex v : vertices) {
    if (v < 0 || v >= n) throw Error("vertex out of range: " + std::to_string(v));
    in_set[v] = true;
  }
  const Vertex anchor = *std::min_element(vertices.begin(), vertices.end());

  std::vector<bool> in_skeleton(g.num_edges(), false);
  std::vector<EdgeId> skel(skeleton.begin(), skeleton.end());
  if (skel.empty()) {
    // BFS spanning tree of the induced subgraph, lowest edge ids first.
    std::vector<bool> reached(n, false);
    std::vector<Vertex> queue{anchor};
    reached[anchor] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      std::vector<EdgeId> inc(g.incident(x).begin(), g.incident(x).end());
      std::sort(inc.begin(), inc.end());
      for (EdgeId id : inc) {
        const Vertex y = g.edge(id).other(x);
        if (!in_set[y] || reached[y]) continue;
        reached[y] = true;
        skel.push_back(id);
        queue.push_back(y);
      }
    }
  }
  for (EdgeId id : skel) {
    if (id < 0 || id >= g.num_edges() || !in_set[g.edge(id).u] || !in_set[g.edge(id).v]) {
      throw Error("skeleton edge " + std::to_string(id) + " leaves the contracted set");
    }
    in_skeleton[id] = true;
  }
  {
    // the skeleton must connect the set
    std::vector<bool> reached(n, false);
    std::vector<Vertex> stack{anchor};
    reached[anchor] = true;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId id : g.incident(x)) {
        const Vertex y = g.edge(id).other(x);
        if (in_skeleton[id] && !reached[y]) {
          reached[y] = true;
          stack.push_back(y);
        }
      }
    }
    for (Vertex v : vertices) {
      if (!reached[v]) throw Error("contraction set does not induce a connected subgraph");
    }
  }

  // The contracted vertex sees the outside darts in the order met while
  // walking around the skeleton's face. The skeleton must have exactly one
  // face (always true for a tree).
  std::vector<Dart> walk_darts;
  if (skel.empty()) {
    walk_darts = e.rotation(anchor);
  } else {
    std::vector<Dart> skel_succ(2 * g.num_edges(), -1);
    for (Vertex v : vertices) {
      std::vector<Dart> sub;
      for (Dart d : e.rotation(v)) {
        if (in_skeleton[dart_edge(d)]) sub.push_back(d);
      }
      for (std::size_t i = 0; i < sub.size(); ++i) skel_succ[sub[i]] = sub[(i + 1) % sub.size()];
    }
    const Dart start = make_dart(*std::min_element(skel.begin(), skel.end()), 0);
    std::size_t walked = 0;
    Dart d = start;
    do {
      const Dart back = reverse(d);
      const Dart out = skel_succ[back];
      for (Dart c = e.rotation_next(back); c != out; c = e.rotation_next(c)) walk_darts.push_back(c);
      ++walked;
      d = out;
    } while (d != start);
    if (walked != 2 * skel.size()) {
      throw Error("contraction skeleton does not bound a single face");
    }
  }

  Contraction out;
  SubgraphMap& map = out.map;
  map.old_to_new.assign(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (in_set[v] && v != anchor) continue;
    map.old_to_new[v] = static_cast<Vertex>(map.new_to_old.size());
    map.new_to_old.push_back(v);
  }
  out.contracted = map.old_to_new[anchor];
  for (Vertex v : vertices) map.old_to_new[v] = out.contracted;

  // Edges inside the set become loops and are dropped; parallel classes keep
  // their lowest id.
  Graph h(static_cast<int>(map.new_to_old.size()));
  std::vector<EdgeId> edge_new(g.num_edges(), kNoEdge);
  std::unordered_set<long long> seen_pairs;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Vertex a = map.old_to_new[g.edge(id).u];
    const Vertex b = map.old_to_new[g.edge(id).v];
    const long long key = static_cast<long long>(std::min(a, b)) * h.num_vertices() + std::max(a, b);
    if (a == b || !seen_pairs.insert(key).second) continue;
    edge_new[id] = h.add_edge(a, b);
    map.edge_to_old.push_back(id);
  }

  std::vector<std::vector<Dart>> rot(h.num_vertices());
  for (Vertex v = 0; v < n; ++v) {
    if (in_set[v]) continue;
    for (Dart d : e.rotation(v)) {
      if (edge_new[dart_edge(d)] != kNoEdge) {
        rot[map.old_to_new[v]].push_back(make_dart(edge_new[dart_edge(d)], dart_end(d)));
      }
    }
  }
  for (Dart d : walk_darts) {
    if (edge_new[dart_edge(d)] != kNoEdge) {
      rot[out.contracted].push_back(make_dart(edge_new[dart_edge(d)], dart_end(d)));
    }
  }
  out.embedding = EmbeddedGraph(std::move(h), std::move(rot));
  out.genus = out.embedding.genus();
  return out;
}

EmbeddedGraph triangulate(const EmbeddedGraph& e) {
  const Graph& g = e.graph();
  const int n = g.num_vertices();
  if (n < 3) throw Error("triangulate requires at least 3 vertices");
  if (!e.is_planar()) throw Error("triangulate requires a planar embedding");
  if (e.num_components() != 1) throw Error("triangulate requires a connected graph");
  if (!g.is_simple()) throw Error("triangulate requires a simple graph; simplify first");

  Graph out = g;
  RotationLinks links(e);
  auto tail_of = [&out](Dart d) {
    const Edge& ed = out.edge(dart_edge(d));
    return dart_end(d) == 0 ? ed.u : ed.v;
  };

  std::vector<int> count(n, 0);
  for (const auto& face : e.faces()) {
    const int k = static_cast<int>(face.size());
    if (k <= 3) continue;
    std::vector<Dart> dart = face;
    std::vector<int> nxt(k), prv(k);
    int distinct = 0;
    int start = 0;
    for (int i = 0; i < k; ++i) {
      nxt[i] = (i + 1) % k;
      prv[i] = (i + k - 1) % k;
      const Vertex c = tail_of(dart[i]);
      if (count[c]++ == 0) ++distinct;
      if (c < tail_of(dart[start])) start = i;
    }
    int len = k;
    int cur = start;
    int misses = 0;
    while (len > 3) {
      const int j = nxt[cur], l = nxt[j];
      const Vertex vi = tail_of(dart[cur]);
      const Vertex vj = tail_of(dart[j]);
      const Vertex vl = tail_of(dart[l]);
      const bool ok = vi != vl && (len == 4 || distinct >= 4 || count[vj] >= 2);
      if (!ok) {
        cur = nxt[cur];
        if (++misses > len) throw std::logic_error("triangulate: face admits no chord");
        continue;
      }
      misses = 0;
      const EdgeId chord = out.add_edge(vi, vl);
      const Dart x = links.add_before(dart[cur]);   // at vi
      const Dart xr = links.add_before(dart[l]);     // at vl
      if (x != make_dart(chord, 0) || xr != make_dart(chord, 1)) {
        throw std::logic_error("triangulate: dart numbering out of sync");
      }
      dart[cur] = x;
      nxt[cur] = l;
      prv[l] = cur;
      if (--count[vj] == 0) --distinct;
      --len;
    }
    for (int i = 0; i < k; ++i) count[tail_of(face[i])] = 0;
  }

  std::vector<std::vector<Dart>> rot(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto& r = e.rotation(v);
    if (!r.empty()) rot[v] = links.cycle_from(r.front());
  }
  return EmbeddedGraph(std::move(out), std::move(rot));
}

}  // namespace shallow
