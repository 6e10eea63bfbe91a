#include "shallow/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "shallow/errors.hpp"

namespace shallow {

namespace {

using Bits = std::uint32_t;

void require_budget(int n, int limit, const char* what) {
  if (n > limit) {
    throw BudgetExceeded(std::string(what) + " oracle limited to " + std::to_string(limit) +
                         " vertices, got " + std::to_string(n));
  }
}

std::vector<Bits> adjacency_bits(const Graph& g) {
  std::vector<Bits> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    adj[e.u] |= Bits{1} << e.v;
    adj[e.v] |= Bits{1} << e.u;
  }
  return adj;
}

std::vector<Vertex> members(Bits s) {
  std::vector<Vertex> out;
  for (Vertex v = 0; s; ++v, s >>= 1) {
    if (s & 1) out.push_back(v);
  }
  return out;
}

struct IndependentSearch {
  const std::vector<Bits>& adj;
  Bits best = 0;

  void run(Bits open, Bits taken) {
    if (std::popcount(taken) + std::popcount(open) <= std::popcount(best)) return;
    if (open == 0) {
      best = taken;
      return;
    }
    const int v = std::countr_zero(open);
    const Bits bit = Bits{1} << v;
    if ((adj[v] & open) == 0) {
      run(open & ~bit, taken | bit);
      return;
    }
    run(open & ~(adj[v] | bit), taken | bit);
    run(open & ~bit, taken);
  }
};

struct DominatingSearch {
  const std::vector<Bits>& closed;
  Bits all = 0;
  int max_closed = 1;
  Bits best = 0;
  int best_size = 0;

  void run(Bits dominated, Bits taken, int size) {
    if (dominated == all) {
      if (size < best_size) {
        best = taken;
        best_size = size;
      }
      return;
    }
    const int missing = std::popcount(all & ~dominated);
    if (size + (missing + max_closed - 1) / max_closed >= best_size) return;
    const int u = std::countr_zero(all & ~dominated);
    for (Bits options = closed[u]; options; options &= options - 1) {
      const int w = std::countr_zero(options);
      run(dominated | closed[w], taken | (Bits{1} << w), size + 1);
    }
  }
};

}  // namespace

bool oracle_feasible(Problem p, const Graph& g, const std::vector<Vertex>& set) {
  const int n = g.num_vertices();
  std::vector<char> in(n, 0);
  for (Vertex v : set) {
    if (v < 0 || v >= n || in[v]) return false;
    in[v] = 1;
  }
  if (p == Problem::mis) {
    for (const Edge& e : g.edges()) {
      if (in[e.u] && in[e.v]) return false;
    }
    return true;
  }
  if (p == Problem::vc) {
    for (const Edge& e : g.edges()) {
      if (!in[e.u] && !in[e.v]) return false;
    }
    return true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) continue;
    bool seen = false;
    for (Vertex w = 0; w < n && !seen; ++w) seen = in[w] && g.has_edge(v, w);
    if (!seen) return false;
  }
  return true;
}

OracleSolution oracle_solve(Problem p, const Graph& g, const OracleBudget& budget) {
  const int n = g.num_vertices();
  require_budget(n, std::min(budget.max_solve_vertices, 31), "exhaustive solve");
  const std::vector<Bits> adj = adjacency_bits(g);
  const Bits all = n == 0 ? 0 : (Bits{1} << n) - 1;
  OracleSolution out;
  if (p == Problem::ds) {
    std::vector<Bits> closed(n);
    int max_closed = 1;
    for (Vertex v = 0; v < n; ++v) {
      closed[v] = adj[v] | (Bits{1} << v);
      max_closed = std::max(max_closed, std::popcount(closed[v]));
    }
    DominatingSearch search{closed, all, max_closed, all, n};
    search.run(0, 0, 0);
    out.witness = members(search.best);
  } else {
    Bits open = all;
    for (const Edge& e : g.edges()) {
      if (e.u == e.v) open &= ~(Bits{1} << e.u);
    }
    IndependentSearch search{adj};
    search.run(open, 0);
    out.witness = members(p == Problem::mis ? search.best : all & ~search.best);
  }
  out.value = static_cast<int>(out.witness.size());
  if (!oracle_feasible(p, g, out.witness)) throw std::logic_error("oracle witness failed its own check");
  return out;
}

ExactTreewidth exact_treewidth(const Graph& g, const OracleBudget& budget) {
  const int n = g.num_vertices();
  require_budget(n, std::min(budget.max_treewidth_vertices, 20), "treewidth");
  ExactTreewidth out;
  if (n == 0) {
    out.td.add_node({});
    return out;
  }
  const std::vector<Bits> adj = adjacency_bits(g);
  const Bits all = (Bits{1} << n) - 1;

  // q(s, v): vertices outside s + v reachable from v through s
  auto q = [&](Bits s, int v) {
    Bits seen = Bits{1} << v, frontier = seen, reach = 0;
    while (frontier) {
      const int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      for (Bits nb = adj[x] & ~seen; nb; nb &= nb - 1) {
        const int y = std::countr_zero(nb);
        seen |= Bits{1} << y;
        if (s >> y & 1) frontier |= Bits{1} << y;
        else reach |= Bits{1} << y;
      }
    }
    return std::popcount(reach);
  };

  // tw[s]: best width when the vertices of s are eliminated first
  std::vector<int> tw(std::size_t{1} << n, std::numeric_limits<int>::max());
  std::vector<signed char> last(std::size_t{1} << n, -1);
  tw[0] = -1;
  for (Bits s = 1; s <= all; ++s) {
    for (Bits rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Bits before = s & ~(Bits{1} << v);
      const int value = std::max(tw[before], q(before, v));
      if (value < tw[s]) {
        tw[s] = value;
        last[s] = static_cast<signed char>(v);
      }
    }
    if (s == all) break;
  }
  out.width = std::max(tw[all], 0);
  for (Bits s = all; s; s &= ~(Bits{1} << last[s])) out.elimination_order.push_back(last[s]);
  std::reverse(out.elimination_order.begin(), out.elimination_order.end());

  // elimination game: bag of v = v plus its later neighbours in the fill graph
  std::vector<Bits> fill = adj;
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[out.elimination_order[i]] = i;
  std::vector<Bits> later(n);
  Bits alive = all;
  int achieved = 0;
  for (int v : out.elimination_order) {
    alive &= ~(Bits{1} << v);
    later[v] = fill[v] & alive;
    achieved = std::max(achieved, std::popcount(later[v]));
    for (Bits a = later[v]; a; a &= a - 1) fill[std::countr_zero(a)] |= later[v] & ~(Bits{1} << std::countr_zero(a));
  }
  if (achieved != out.width) throw std::logic_error("elimination order does not reach the computed width");
  for (int v : out.elimination_order) {
    std::vector<Vertex> bag = members(later[v]);
    bag.push_back(v);
    out.td.add_node(std::move(bag));
  }
  int previous_root = -1;
  for (int v : out.elimination_order) {
    if (later[v] == 0) {
      if (previous_root >= 0) out.td.add_tree_edge(rank[v], previous_root);
      previous_root = rank[v];
      continue;
    }
    int parent = -1;
    for (Vertex w : members(later[v])) {
      if (parent < 0 || rank[w] < rank[parent]) parent = w;
    }
    out.td.add_tree_edge(rank[v], rank[parent]);
  }
  return out;
}

bool oracle_embedding_ok(const Graph& g, const Graph& pattern, const std::vector<Vertex>& map,
                         bool induced) {
  const int p = pattern.num_vertices();
  if (static_cast<int>(map.size()) != p) return false;
  for (int a = 0; a < p; ++a) {
    if (map[a] < 0 || map[a] >= g.num_vertices()) return false;
    for (int b = 0; b < a; ++b) {
      if (map[a] == map[b]) return false;
      const bool in_pattern = pattern.has_edge(a, b);
      const bool in_host = g.has_edge(map[a], map[b]);
      if (in_pattern != in_host && (in_pattern || induced)) return false;
    }
  }
  return true;
}

OracleMatches subiso_backtracking(const Graph& g, const Graph& pattern, bool induced,
                                  const OracleBudget& budget) {
  require_budget(g.num_vertices(), budget.max_host_vertices, "subgraph host");
  require_budget(pattern.num_vertices(), budget.max_pattern_vertices, "subgraph pattern");
  const int n = g.num_vertices();
  const int p = pattern.num_vertices();
  std::vector<std::vector<char>> host(n, std::vector<char>(n, 0));
  std::vector<int> host_degree(n, 0);
  for (const Edge& e : g.edges()) {
    if (e.u == e.v || host[e.u][e.v]) continue;
    host[e.u][e.v] = host[e.v][e.u] = 1;
    ++host_degree[e.u];
    ++host_degree[e.v];
  }
  std::vector<std::vector<char>> pat(p, std::vector<char>(p, 0));
  std::vector<int> pat_degree(p, 0);
  for (const Edge& e : pattern.edges()) {
    if (e.u == e.v || pat[e.u][e.v]) continue;
    pat[e.u][e.v] = pat[e.v][e.u] = 1;
    ++pat_degree[e.u];
    ++pat_degree[e.v];
  }

  // pattern vertices in BFS order; anchor = an earlier neighbour, if any
  std::vector<int> order, anchor(p, -1);
  std::vector<char> placed(p, 0);
  for (int s = 0; s < p; ++s) {
    if (placed[s]) continue;
    placed[s] = 1;
    order.push_back(s);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      const int x = order[head];
      for (int y = 0; y < p; ++y) {
        if (pat[x][y] && !placed[y]) {
          placed[y] = 1;
          anchor[y] = x;
          order.push_back(y);
        }
      }
    }
  }

  OracleMatches out;
  std::vector<Vertex> image(p, -1);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, int depth) -> void {
    if (depth == p) {
      if (!out.first) out.first = image;
      ++out.count;
      return;
    }
    const int q = order[depth];
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || host_degree[v] < pat_degree[q]) continue;
      if (anchor[q] >= 0 && !host[image[anchor[q]]][v]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        const int r = order[i];
        const bool want = pat[q][r];
        const bool have = host[image[r]][v];
        if ((want && !have) || (induced && have && !want)) ok = false;
      }
      if (!ok) continue;
      image[q] = v;
      used[v] = 1;
      self(self, depth + 1);
      used[v] = 0;
      image[q] = -1;
    }
  };
  extend(extend, 0);
  if (out.first && !oracle_embedding_ok(g, pattern, *out.first, induced)) {
    throw std::logic_error("oracle match failed its own check");
  }
  return out;
}

}  // namespace shallow
