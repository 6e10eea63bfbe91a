#include "shallow/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "shallow/errors.hpp"

namespace shallow {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

// Empty string if the node set with these edges is a tree.
std::string tree_problem(int nodes, const std::vector<std::pair<int, int>>& edges) {
  if (nodes < 1) return "decomposition has no nodes";
  if (static_cast<int>(edges.size()) != nodes - 1) {
    return "tree has " + std::to_string(edges.size()) + " edges for " + std::to_string(nodes) +
           " nodes";
  }
  UnionFind uf(nodes);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes) return "tree edge references unknown node";
    const int ra = uf.find(a), rb = uf.find(b);
    if (ra == rb) return "tree edges contain a cycle between nodes " + std::to_string(a) + " and " +
                         std::to_string(b);
    uf.parent[ra] = rb;
  }
  return {};
}

std::vector<std::vector<int>> adjacency(int nodes, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(nodes);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<Vertex> sorted_difference(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

int TreeDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& b : bags) best = std::max(best, b.size());
  return best == 0 ? 0 : static_cast<int>(best) - 1;
}

int TreeDecomposition::add_node(std::vector<Vertex> bag) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  bags.push_back(std::move(bag));
  return num_nodes() - 1;
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::not_a_tree: return "not_a_tree";
    case Violation::vertex_out_of_range: return "vertex_out_of_range";
    case Violation::vertex_uncovered: return "vertex_uncovered";
    case Violation::edge_uncovered: return "edge_uncovered";
    case Violation::occurrence_disconnected: return "occurrence_disconnected";
  }
  return "unknown";
}

ValidationReport validate(const TreeDecomposition& td, const Graph& g) {
  ValidationReport rep;
  rep.width = td.width();
  const int nodes = td.num_nodes();
  const int n = g.num_vertices();
  auto fail = [&rep](Violation v, std::string msg) {
    rep.valid = false;
    rep.violation = v;
    rep.message = std::move(msg);
    return rep;
  };

  if (std::string problem = tree_problem(nodes, td.tree_edges); !problem.empty()) {
    return fail(Violation::not_a_tree, problem);
  }

  std::vector<std::vector<int>> occ(n);
  for (int t = 0; t < nodes; ++t) {
    for (Vertex v : td.bags[t]) {
      if (v < 0 || v >= n) {
        rep.vertex = v;
        rep.node_a = t;
        return fail(Violation::vertex_out_of_range,
                    "bag " + std::to_string(t) + " holds unknown vertex " + std::to_string(v));
      }
      if (occ[v].empty() || occ[v].back() != t) occ[v].push_back(t);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (occ[v].empty()) {
      rep.vertex = v;
      return fail(Violation::vertex_uncovered, "vertex " + std::to_string(v) + " is in no bag");
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& a = occ[g.edge(e).u];
    const auto& b = occ[g.edge(e).v];
    std::size_t i = 0, j = 0;
    bool shared = false;
    while (i < a.size() && j < b.size() && !shared) {
      if (a[i] == b[j]) shared = true;
      else if (a[i] < b[j]) ++i;
      else ++j;
    }
    if (!shared) {
      rep.edge = e;
      return fail(Violation::edge_uncovered, "edge " + std::to_string(e) + " (" +
                                                 std::to_string(g.edge(e).u) + ", " +
                                                 std::to_string(g.edge(e).v) + ") is in no bag");
    }
  }

  // A vertex's nodes form a subtree iff (#nodes) - (#tree edges inside) == 1.
  std::vector<int> inside(n, 0);
  std::vector<std::vector<Vertex>> sorted(nodes);
  for (int t = 0; t < nodes; ++t) {
    sorted[t] = td.bags[t];
    std::sort(sorted[t].begin(), sorted[t].end());
    sorted[t].erase(std::unique(sorted[t].begin(), sorted[t].end()), sorted[t].end());
  }
  for (const auto& [a, b] : td.tree_edges) {
    std::vector<Vertex> common;
    std::set_intersection(sorted[a].begin(), sorted[a].end(), sorted[b].begin(), sorted[b].end(),
                          std::back_inserter(common));
    for (Vertex v : common) ++inside[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<int>(occ[v].size()) - inside[v] == 1) continue;
    const auto adj = adjacency(nodes, td.tree_edges);
    std::vector<bool> holds(nodes, false), seen(nodes, false);
    for (int t : occ[v]) holds[t] = true;
    std::vector<int> stack{occ[v].front()};
    seen[occ[v].front()] = true;
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      for (int u : adj[t]) {
        if (holds[u] && !seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    rep.vertex = v;
    rep.node_a = occ[v].front();
    for (int t : occ[v]) {
      if (!seen[t]) {
        rep.node_b = t;
        break;
      }
    }
    return fail(Violation::occurrence_disconnected,
                "bags containing vertex " + std::to_string(v) + " are disconnected (nodes " +
                    std::to_string(rep.node_a) + " and " + std::to_string(rep.node_b) + ")");
  }
  rep.valid = true;
  return rep;
}

TreeDecomposition compact(const TreeDecomposition& td) {
  const int nodes = td.num_nodes();
  if (nodes <= 1) return td;
  UnionFind uf(nodes);
  std::vector<std::vector<Vertex>> bag = td.bags;
  for (auto& b : bag) std::sort(b.begin(), b.end());
  std::vector<bool> merged(td.tree_edges.size(), false);
  for (std::size_t i = 0; i < td.tree_edges.size(); ++i) {
    const int a = uf.find(td.tree_edges[i].first);
    const int b = uf.find(td.tree_edges[i].second);
    const auto& ba = bag[a];
    const auto& bb = bag[b];
    if (std::includes(bb.begin(), bb.end(), ba.begin(), ba.end())) {
      uf.parent[a] = b;
      merged[i] = true;
    } else if (std::includes(ba.begin(), ba.end(), bb.begin(), bb.end())) {
      uf.parent[b] = a;
      merged[i] = true;
    }
  }
  TreeDecomposition out;
  std::vector<int> id(nodes, -1);
  for (int t = 0; t < nodes; ++t) {
    if (uf.find(t) == t) id[t] = out.add_node(bag[t]);
  }
  for (std::size_t i = 0; i < td.tree_edges.size(); ++i) {
    if (merged[i]) continue;
    out.add_tree_edge(id[uf.find(td.tree_edges[i].first)], id[uf.find(td.tree_edges[i].second)]);
  }
  return out;
}

TreeDecomposition min_degree_decomposition(const Graph& g) {
  const int n = g.num_vertices();
  TreeDecomposition td;
  if (n == 0) {
    td.add_node({});
    return td;
  }
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v].insert(w);
  }
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) queue.insert({static_cast<int>(adj[v].size()), v});
  std::vector<int> position(n, -1);
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> higher(n);
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    position[v] = static_cast<int>(order.size());
    order.push_back(v);
    higher[v].assign(adj[v].begin(), adj[v].end());
    for (Vertex a : higher[v]) {
      queue.erase({static_cast<int>(adj[a].size()), a});
      adj[a].erase(v);
    }
    for (std::size_t i = 0; i < higher[v].size(); ++i) {
      for (std::size_t j = i + 1; j < higher[v].size(); ++j) {
        adj[higher[v][i]].insert(higher[v][j]);
        adj[higher[v][j]].insert(higher[v][i]);
      }
    }
    for (Vertex a : higher[v]) queue.insert({static_cast<int>(adj[a].size()), a});
    adj[v].clear();
  }
  // node i holds order[i] and its later neighbours; parent is the earliest
  // eliminated of those neighbours.
  for (Vertex v : order) {
    std::vector<Vertex> bag = higher[v];
    bag.push_back(v);
    td.add_node(std::move(bag));
  }
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    int parent = -1;
    for (Vertex w : higher[v]) {
      if (parent == -1 || position[w] < parent) parent = position[w];
    }
    if (parent == -1) roots.push_back(i);
    else td.add_tree_edge(i, parent);
  }
  for (std::size_t i = 1; i < roots.size(); ++i) td.add_tree_edge(roots[i - 1], roots[i]);
  return compact(td);
}

TreeDecomposition single_bag_decomposition(const Graph& g) {
  TreeDecomposition td;
  std::vector<Vertex> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  td.add_node(std::move(all));
  return td;
}

int NiceDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& node : nodes) best = std::max(best, node.bag.size());
  return best == 0 ? 0 : static_cast<int>(best) - 1;
}

NiceDecomposition make_nice(const TreeDecomposition& td) {
  if (std::string problem = tree_problem(td.num_nodes(), td.tree_edges); !problem.empty()) {
    throw Error("cannot make a nice decomposition: " + problem);
  }
  NiceDecomposition nd;
  auto add = [&nd](NiceKind kind, Vertex v, std::vector<int> children, std::vector<Vertex> bag) {
    nd.nodes.push_back({kind, v, std::move(children), std::move(bag)});
    return static_cast<int>(nd.nodes.size()) - 1;
  };
  // Walks from a node with bag `from` up to a node with bag `to`.
  auto bridge = [&](int node, const std::vector<Vertex>& to) {
    std::vector<Vertex> bag = nd.nodes[node].bag;
    for (Vertex v : sorted_difference(bag, to)) {
      bag.erase(std::find(bag.begin(), bag.end(), v));
      node = add(NiceKind::forget, v, {node}, bag);
    }
    for (Vertex v : sorted_difference(to, bag)) {
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      node = add(NiceKind::introduce, v, {node}, bag);
    }
    return node;
  };

  const int nodes = td.num_nodes();
  std::vector<std::vector<Vertex>> bags = td.bags;
  for (auto& b : bags) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  const auto adj = adjacency(nodes, td.tree_edges);
  std::vector<int> parent(nodes, -1), order{0};
  std::vector<bool> seen(nodes, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int u : adj[order[i]]) {
      if (!seen[u]) {
        seen[u] = true;
        parent[u] = order[i];
        order.push_back(u);
      }
    }
  }
  std::vector<std::vector<int>> children(nodes);
  for (int t : order) {
    if (parent[t] != -1) children[parent[t]].push_back(t);
  }
  std::vector<int> top(nodes, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int t = *it;
    int acc = -1;
    if (children[t].empty()) {
      acc = bridge(add(NiceKind::leaf, kNoVertex, {}, {}), bags[t]);
    }
    for (int c : children[t]) {
      const int chain = bridge(top[c], bags[t]);
      acc = acc == -1 ? chain : add(NiceKind::join, kNoVertex, {acc, chain}, bags[t]);
    }
    top[t] = acc;
  }
  nd.root = bridge(top[0], {});
  return nd;
}

NiceDecomposition make_nice(const TreeDecomposition& td, const Graph& g) {
  const ValidationReport rep = validate(td, g);
  if (!rep.valid) throw Error("invalid tree decomposition: " + rep.message);
  return make_nice(td);
}

std::string check_nice(const NiceDecomposition& nd) {
  const int count = static_cast<int>(nd.nodes.size());
  if (nd.root < 0 || nd.root >= count) return "root out of range";
  std::vector<int> parents(count, 0);
  for (int i = 0; i < count; ++i) {
    const NiceNode& node = nd.nodes[i];
    const std::string where = "node " + std::to_string(i) + ": ";
    if (!std::is_sorted(node.bag.begin(), node.bag.end())) return where + "bag not sorted";
    for (int c : node.children) {
      if (c < 0 || c >= i) return where + "child does not precede parent";
      ++parents[c];
    }
    switch (node.kind) {
      case NiceKind::leaf:
        if (!node.children.empty() || !node.bag.empty()) return where + "leaf must be empty";
        break;
      case NiceKind::introduce:
      case NiceKind::forget: {
        if (node.children.size() != 1) return where + "needs exactly one child";
        const auto& small = node.kind == NiceKind::introduce ? nd.nodes[node.children[0]].bag : node.bag;
        const auto& big = node.kind == NiceKind::introduce ? node.bag : nd.nodes[node.children[0]].bag;
        if (big.size() != small.size() + 1 || sorted_difference(big, small) != std::vector<Vertex>{node.vertex} ||
            !std::includes(big.begin(), big.end(), small.begin(), small.end())) {
          return where + "bag must change by exactly its vertex";
        }
        break;
      }
      case NiceKind::join:
        if (node.children.size() != 2) return where + "join needs two children";
        for (int c : node.children) {
          if (nd.nodes[c].bag != node.bag) return where + "join children must share its bag";
        }
        break;
    }
  }
  for (int i = 0; i < count; ++i) {
    if (parents[i] != (i == nd.root ? 0 : 1)) return "node " + std::to_string(i) + " is not in the tree";
  }
  if (!nd.nodes[nd.root].bag.empty()) return "root bag must be empty";
  return {};
}

TreeDecomposition to_tree_decomposition(const NiceDecomposition& nd) {
  TreeDecomposition td;
  for (const NiceNode& node : nd.nodes) td.add_node(node.bag);
  for (int i = 0; i < static_cast<int>(nd.nodes.size()); ++i) {
    for (int c : nd.nodes[i].children) td.add_tree_edge(c, i);
  }
  return td;
}

}  // namespace shallow
