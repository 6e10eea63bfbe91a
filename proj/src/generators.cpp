#include "shallow/generators.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <unordered_map>

#include "shallow/errors.hpp"

namespace shallow {

namespace {

// right, down, left, up around each vertex
EmbeddedGraph lattice(int rows, int cols, bool wrap) {
  Graph g(rows * cols);
  std::vector<std::array<Dart, 4>> slot(rows * cols, {-1, -1, -1, -1});
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Vertex v = id(r, c);
      if (wrap || c + 1 < cols) {
        const Vertex w = id(r, (c + 1) % cols);
        const EdgeId e = g.add_edge(v, w);
        slot[v][0] = make_dart(e, 0);
        slot[w][2] = make_dart(e, 1);
      }
      if (wrap || r + 1 < rows) {
        const Vertex w = id((r + 1) % rows, c);
        const EdgeId e = g.add_edge(v, w);
        slot[v][1] = make_dart(e, 0);
        slot[w][3] = make_dart(e, 1);
      }
    }
  }
  std::vector<std::vector<Dart>> rot(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Dart d : slot[v]) {
      if (d != -1) rot[v].push_back(d);
    }
  }
  return EmbeddedGraph(std::move(g), std::move(rot));
}

constexpr std::array<Hex, 6> kHexDir{{{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

Hex step(Hex h, int dir) { return {h.q + kHexDir[dir % 6].q, h.r + kHexDir[dir % 6].r}; }

using Corner = std::array<Hex, 3>;

Corner corner_key(Hex h, int i) {
  Corner c{h, step(h, i), step(h, i + 1)};
  std::sort(c.begin(), c.end());
  return c;
}

// Planar position scaled so that all coordinates are integers:
// x = 2q + r, y = -r (an orientation-preserving linear image of the
// Euclidean hex layout), times 3 for corner centroids.
std::array<long long, 2> corner_position(const Corner& c) {
  long long x = 0, y = 0;
  for (const Hex& h : c) {
    x += 2LL * h.q + h.r;
    y += -h.r;
  }
  return {x, y};
}

// Counter-clockwise angular order starting from the positive x axis.
bool angle_less(std::array<long long, 2> a, std::array<long long, 2> b) {
  auto half = [](const std::array<long long, 2>& p) { return p[1] < 0 || (p[1] == 0 && p[0] < 0); };
  const bool ha = half(a), hb = half(b);
  if (ha != hb) return !ha;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

}  // namespace

EmbeddedGraph grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw Error("grid dimensions must be positive");
  return lattice(rows, cols, false);
}

EmbeddedGraph toroidal_grid(int rows, int cols) {
  if (rows < 3 || cols < 3) throw Error("toroidal grid dimensions must be at least 3");
  return lattice(rows, cols, true);
}

Graph apex_over_grid(int n) {
  if (n < 1) throw Error("apex grid size must be positive");
  Graph g = grid(n, n).graph();
  Graph out(n * n + 1);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (Vertex v = 0; v < n * n; ++v) out.add_edge(n * n, v);
  return out;
}

int hex_distance(Hex a, Hex b) {
  const int dq = a.q - b.q, dr = a.r - b.r;
  return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

std::vector<Hex> hex_ball(int radius) {
  std::vector<Hex> out;
  for (int q = -radius; q <= radius; ++q) {
    for (int r = -radius; r <= radius; ++r) {
      if (hex_distance({q, r}, {0, 0}) <= radius) out.push_back({q, r});
    }
  }
  return out;
}

HexSetGraph hex_set_graph(std::vector<Hex> coords) {
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  if (coords.empty()) throw Error("hexagon set is empty");
  std::map<Hex, int> index;
  for (std::size_t i = 0; i < coords.size(); ++i) index[coords[i]] = static_cast<int>(i);

  {
    std::vector<bool> seen(coords.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Hex h = coords[stack.back()];
      stack.pop_back();
      for (int d = 0; d < 6; ++d) {
        auto it = index.find(step(h, d));
        if (it != index.end() && !seen[it->second]) {
          seen[it->second] = true;
          ++reached;
          stack.push_back(it->second);
        }
      }
    }
    if (reached != coords.size()) throw Error("hexagon set is not connected");
  }

  HexSetGraph out;
  out.hexes = coords;
  std::map<Corner, Vertex> vertex_of;
  std::vector<Corner> corners;
  std::array<Vertex, 6> local{};
  std::vector<std::pair<Vertex, Vertex>> edge_list;
  std::map<std::array<Hex, 2>, bool> side_done;
  for (std::size_t hi = 0; hi < coords.size(); ++hi) {
    const Hex h = coords[hi];
    for (int i = 0; i < 6; ++i) {
      const Corner key = corner_key(h, i);
      auto [it, fresh] = vertex_of.emplace(key, static_cast<Vertex>(corners.size()));
      if (fresh) {
        corners.push_back(key);
        out.vertex_hexes.emplace_back();
      }
      local[i] = it->second;
      out.vertex_hexes[it->second].push_back(static_cast<int>(hi));
    }
    // side i is shared with neighbour i and joins corners i-1 and i
    for (int i = 0; i < 6; ++i) {
      std::array<Hex, 2> side{h, step(h, i)};
      std::sort(side.begin(), side.end());
      if (side_done.emplace(side, true).second) edge_list.push_back({local[(i + 5) % 6], local[i]});
    }
  }

  Graph g(static_cast<int>(corners.size()));
  for (const auto& [a, b] : edge_list) g.add_edge(a, b);
  std::vector<std::vector<Dart>> rot(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto pv = corner_position(corners[v]);
    std::vector<std::pair<std::array<long long, 2>, Dart>> around;
    for (EdgeId e : g.incident(v)) {
      const Vertex w = g.edge(e).other(v);
      const auto pw = corner_position(corners[w]);
      around.push_back({{pw[0] - pv[0], pw[1] - pv[1]}, make_dart(e, g.edge(e).u == v ? 0 : 1)});
    }
    std::sort(around.begin(), around.end(),
              [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    for (const auto& [dir, d] : around) rot[v].push_back(d);
  }
  out.outer.assign(g.num_vertices(), false);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out.outer[v] = out.vertex_hexes[v].size() < 3;
  }
  out.embedding = EmbeddedGraph(std::move(g), std::move(rot));
  return out;
}

Wall wall(int s) {
  if (s < 1) throw Error("wall size must be positive");
  HexSetGraph hs = hex_set_graph(hex_ball(s - 1));
  Wall w;
  w.spec.size = s;
  w.spec.hex_coords = hs.hexes;
  w.spec.outer = hs.outer;
  w.spec.inner_level.assign(hs.embedding.num_vertices(), s);
  for (Vertex v = 0; v < hs.embedding.num_vertices(); ++v) {
    for (int hi : hs.vertex_hexes[v]) {
      w.spec.inner_level[v] =
          std::min(w.spec.inner_level[v], 1 + hex_distance(hs.hexes[hi], {0, 0}));
    }
  }
  w.embedding = std::move(hs.embedding);
  return w;
}

EmbeddedGraph subdivide(const EmbeddedGraph& e, int factor) {
  if (factor < 1) throw Error("subdivision factor must be positive");
  const Graph& g = e.graph();
  Graph out(g.num_vertices() + g.num_edges() * (factor - 1));
  std::vector<std::vector<Dart>> rot(out.num_vertices());
  std::vector<Dart> first_dart(g.num_edges()), last_dart(g.num_edges());
  Vertex next_vertex = g.num_vertices();
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    Vertex prev = g.edge(id).u;
    for (int k = 1; k <= factor; ++k) {
      const Vertex cur = k == factor ? g.edge(id).v : next_vertex++;
      const EdgeId pe = out.add_edge(prev, cur);
      if (k == 1) first_dart[id] = make_dart(pe, 0);
      if (k == factor) last_dart[id] = make_dart(pe, 1);
      if (k > 1) rot[prev].push_back(make_dart(pe, 0));
      if (k < factor) rot[cur].push_back(make_dart(pe, 1));
      prev = cur;
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Dart d : e.rotation(v)) {
      rot[v].push_back(dart_end(d) == 0 ? first_dart[dart_edge(d)] : last_dart[dart_edge(d)]);
    }
  }
  return EmbeddedGraph(std::move(out), std::move(rot));
}

EmbeddedGraph random_planar_triangulation(int n, std::uint64_t seed) {
  if (n < 3) throw Error("random triangulation needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  for (Vertex v = 3; v < n; ++v) {
    const std::size_t pick = static_cast<std::size_t>(rng() % faces.size());
    const auto [a, b, c] = faces[pick];
    faces[pick] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
    g.add_edge(a, v);
    g.add_edge(b, v);
    g.add_edge(c, v);
  }

  std::unordered_map<long long, Dart> dart_of;
  auto key = [n](Vertex x, Vertex y) { return static_cast<long long>(x) * n + y; };
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    dart_of[key(g.edge(id).u, g.edge(id).v)] = make_dart(id, 0);
    dart_of[key(g.edge(id).v, g.edge(id).u)] = make_dart(id, 1);
  }
  // A face (x, y, z) is traced x->y->z, so around y the dart y->x is
  // followed by y->z.
  std::vector<Dart> succ(2 * g.num_edges(), -1);
  for (const auto& f : faces) {
    for (int i = 0; i < 3; ++i) {
      const Vertex x = f[i], y = f[(i + 1) % 3], z = f[(i + 2) % 3];
      succ[dart_of.at(key(y, x))] = dart_of.at(key(y, z));
    }
  }
  std::vector<std::vector<Dart>> rot(n);
  for (Vertex v = 0; v < n; ++v) {
    const EdgeId first = *std::min_element(g.incident(v).begin(), g.incident(v).end());
    const Dart start = make_dart(first, g.edge(first).u == v ? 0 : 1);
    Dart d = start;
    do {
      rot[v].push_back(d);
      d = succ[d];
    } while (d != start);
  }
  return EmbeddedGraph(std::move(g), std::move(rot));
}

}  // namespace shallow
