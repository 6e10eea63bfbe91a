#include "shallow/dp.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "shallow/errors.hpp"

namespace shallow {

namespace {

using Mask = std::uint64_t;

Mask insert_bit(Mask m, int i, bool bit) {
  const Mask low = m & ((Mask{1} << i) - 1);
  return low | ((m >> i) << (i + 1)) | (Mask{bit} << i);
}

Mask remove_bit(Mask m, int i) {
  const Mask low = m & ((Mask{1} << i) - 1);
  return low | ((m >> (i + 1)) << i);
}

int position(const std::vector<Vertex>& bag, Vertex v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Bit i set when bag[i] is adjacent to v (v itself excluded).
Mask neighbour_mask(const Graph& g, const std::vector<Vertex>& bag, Vertex v) {
  Mask m = 0;
  for (std::size_t i = 0; i < bag.size(); ++i) {
    if (bag[i] != v && g.has_edge(v, bag[i])) m |= Mask{1} << i;
  }
  return m;
}

bool has_loop(const Graph& g, Vertex v) {
  for (EdgeId e : g.incident(v)) {
    if (g.edge(e).is_loop()) return true;
  }
  return false;
}

void require_valid(const NiceDecomposition& nd, const Graph& g) {
  if (std::string problem = check_nice(nd); !problem.empty()) {
    throw Error("not a nice decomposition: " + problem);
  }
  const ValidationReport rep = validate(to_tree_decomposition(nd), g);
  if (!rep.valid) throw Error("decomposition does not fit the graph: " + rep.message);
}

struct Entry {
  Mask key = 0;
  int value = 0;
  int a = -1;  // entry index in first child
  int b = -1;  // entry index in second child (join)
};

using Table = std::vector<Entry>;

// Walks back from the root entry and collects vertices whose introduce
// transition set the given bit in the key.
std::vector<Vertex> reconstruct(const NiceDecomposition& nd, const std::vector<Table>& tables,
                                int root_entry) {
  std::vector<Vertex> chosen;
  std::vector<std::pair<int, int>> stack{{nd.root, root_entry}};
  while (!stack.empty()) {
    const auto [node, idx] = stack.back();
    stack.pop_back();
    const NiceNode& nn = nd.nodes[node];
    const Entry& en = tables[node][idx];
    if (nn.kind == NiceKind::introduce) {
      if ((en.key >> position(nn.bag, nn.vertex)) & 1) chosen.push_back(nn.vertex);
    }
    if (!nn.children.empty()) stack.push_back({nn.children[0], en.a});
    if (nn.children.size() == 2) stack.push_back({nn.children[1], en.b});
  }
  // a vertex may be introduced below several joins
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  return chosen;
}

// Subset DP shared by independent set (maximise) and vertex cover (minimise).
std::vector<Vertex> subset_dp(const NiceDecomposition& nd, const Graph& g, bool cover) {
  require_valid(nd, g);
  if (nd.width() + 1 > 63) throw Error("decomposition too wide for subset DP");
  const auto better = [cover](int x, int y) { return cover ? x < y : x > y; };
  std::vector<Table> tables(nd.nodes.size());
  for (std::size_t t = 0; t < nd.nodes.size(); ++t) {
    const NiceNode& node = nd.nodes[t];
    Table& out = tables[t];
    switch (node.kind) {
      case NiceKind::leaf:
        out.push_back({0, 0, -1, -1});
        break;
      case NiceKind::introduce: {
        const Table& in = tables[node.children[0]];
        const int i = position(node.bag, node.vertex);
        const Mask nb = neighbour_mask(g, node.bag, node.vertex);
        const bool loop = has_loop(g, node.vertex);
        for (int k = 0; k < static_cast<int>(in.size()); ++k) {
          const Mask without = insert_bit(in[k].key, i, false);
          const Mask with = insert_bit(in[k].key, i, true);
          if (cover) {
            if (!loop && (nb & ~without) == 0) out.push_back({without, in[k].value, k, -1});
            out.push_back({with, in[k].value + 1, k, -1});
          } else {
            out.push_back({without, in[k].value, k, -1});
            if (!loop && (nb & with) == 0) out.push_back({with, in[k].value + 1, k, -1});
          }
        }
        break;
      }
      case NiceKind::forget: {
        const Table& in = tables[node.children[0]];
        const int i = position(nd.nodes[node.children[0]].bag, node.vertex);
        std::unordered_map<Mask, int> index;
        for (int k = 0; k < static_cast<int>(in.size()); ++k) {
          const Mask key = remove_bit(in[k].key, i);
          auto [it, fresh] = index.emplace(key, static_cast<int>(out.size()));
          if (fresh) out.push_back({key, in[k].value, k, -1});
          else if (better(in[k].value, out[it->second].value)) out[it->second] = {key, in[k].value, k, -1};
        }
        break;
      }
      case NiceKind::join: {
        const Table& left = tables[node.children[0]];
        const Table& right = tables[node.children[1]];
        std::unordered_map<Mask, int> index;
        for (int k = 0; k < static_cast<int>(right.size()); ++k) index.emplace(right[k].key, k);
        for (int k = 0; k < static_cast<int>(left.size()); ++k) {
          auto it = index.find(left[k].key);
          if (it == index.end()) continue;
          const int shared = std::popcount(left[k].key);
          out.push_back({left[k].key, left[k].value + right[it->second].value - shared, k, it->second});
        }
        break;
      }
    }
  }
  const Table& root = tables[nd.root];
  if (root.empty()) throw std::logic_error("subset DP produced no root state");
  return reconstruct(nd, tables, 0);
}

}  // namespace

std::vector<Vertex> dp_mis(const NiceDecomposition& nd, const Graph& g) {
  std::vector<Vertex> s = subset_dp(nd, g, false);
  if (!is_independent_set(g, s)) throw std::logic_error("dp_mis witness is not independent");
  return s;
}

std::vector<Vertex> dp_vc(const NiceDecomposition& nd, const Graph& g) {
  std::vector<Vertex> s = subset_dp(nd, g, true);
  if (!is_vertex_cover(g, s)) throw std::logic_error("dp_vc witness is not a cover");
  return s;
}

std::vector<Vertex> dp_ds(const NiceDecomposition& nd, const Graph& g, const std::vector<bool>& required) {
  require_valid(nd, g);
  if (static_cast<int>(required.size()) != g.num_vertices()) {
    throw Error("required set has the wrong size");
  }
  if (nd.width() + 1 > 32) throw Error("decomposition too wide for dominating set DP");
  // key: chosen mask in the low 32 bits, dominated mask in the high 32 bits
  auto chosen_of = [](Mask key) { return key & 0xffffffffULL; };
  auto dominated_of = [](Mask key) { return key >> 32; };
  auto make_key = [](Mask chosen, Mask dominated) { return chosen | (dominated << 32); };

  std::vector<Table> tables(nd.nodes.size());
  for (std::size_t t = 0; t < nd.nodes.size(); ++t) {
    const NiceNode& node = nd.nodes[t];
    Table& out = tables[t];
    switch (node.kind) {
      case NiceKind::leaf:
        out.push_back({0, 0, -1, -1});
        break;
      case NiceKind::introduce: {
        const Table& in = tables[node.children[0]];
        const int i = position(node.bag, node.vertex);
        const Mask nb = neighbour_mask(g, node.bag, node.vertex);
        for (int k = 0; k < static_cast<int>(in.size()); ++k) {
          const Mask c0 = insert_bit(chosen_of(in[k].key), i, false);
          const Mask d0 = insert_bit(dominated_of(in[k].key), i, false);
          out.push_back({make_key(c0, d0 | (Mask{(nb & c0) != 0} << i)), in[k].value, k, -1});
          const Mask c1 = c0 | (Mask{1} << i);
          out.push_back({make_key(c1, (d0 | nb) & ~c1), in[k].value + 1, k, -1});
        }
        break;
      }
      case NiceKind::forget: {
        const Table& in = tables[node.children[0]];
        const int i = position(nd.nodes[node.children[0]].bag, node.vertex);
        const bool must = required[node.vertex];
        std::unordered_map<Mask, int> index;
        for (int k = 0; k < static_cast<int>(in.size()); ++k) {
          const Mask c = chosen_of(in[k].key), d = dominated_of(in[k].key);
          const bool covered = ((c | d) >> i) & 1;
          if (must && !covered) continue;
          const Mask key = make_key(remove_bit(c, i), remove_bit(d, i));
          auto [it, fresh] = index.emplace(key, static_cast<int>(out.size()));
          if (fresh) out.push_back({key, in[k].value, k, -1});
          else if (in[k].value < out[it->second].value) out[it->second] = {key, in[k].value, k, -1};
        }
        break;
      }
      case NiceKind::join: {
        const Table& left = tables[node.children[0]];
        const Table& right = tables[node.children[1]];
        std::unordered_map<Mask, std::vector<int>> by_chosen;
        for (int k = 0; k < static_cast<int>(right.size()); ++k) {
          by_chosen[chosen_of(right[k].key)].push_back(k);
        }
        std::unordered_map<Mask, int> index;
        for (int k = 0; k < static_cast<int>(left.size()); ++k) {
          const Mask c = chosen_of(left[k].key);
          auto it = by_chosen.find(c);
          if (it == by_chosen.end()) continue;
          const int shared = std::popcount(c);
          for (int r : it->second) {
            const Mask key = make_key(c, dominated_of(left[k].key) | dominated_of(right[r].key));
            const int value = left[k].value + right[r].value - shared;
            auto [pos, fresh] = index.emplace(key, static_cast<int>(out.size()));
            if (fresh) out.push_back({key, value, k, r});
            else if (value < out[pos->second].value) out[pos->second] = {key, value, k, r};
          }
        }
        break;
      }
    }
  }
  if (tables[nd.root].empty()) throw std::logic_error("dominating set DP produced no root state");
  std::vector<Vertex> s = reconstruct(nd, tables, 0);
  if (!dominates(g, s, required)) throw std::logic_error("dp_ds witness does not dominate");
  return s;
}

namespace {

constexpr int kUnmapped = -1;
constexpr int kFinished = -2;

using PatternState = std::array<int, kMaxPatternVertices>;

struct PatternStateHash {
  std::size_t operator()(const PatternState& s) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : s) h = (h ^ static_cast<std::size_t>(x + 3)) * 1099511628211ULL;
    return h;
  }
};

struct IsoEntry {
  PatternState state;
  int a = -1;
  int b = -1;
};

}  // namespace

std::optional<std::vector<Vertex>> dp_subiso(const NiceDecomposition& nd, const Graph& g,
                                             const Graph& pattern, bool induced) {
  require_valid(nd, g);
  const int p = pattern.num_vertices();
  if (p > kMaxPatternVertices) {
    throw Error("pattern has " + std::to_string(p) + " vertices; at most " +
                std::to_string(kMaxPatternVertices) + " are supported");
  }
  if (p == 0) return std::vector<Vertex>{};
  if (p > g.num_vertices()) return std::nullopt;

  std::vector<std::vector<bool>> padj(p, std::vector<bool>(p, false));
  for (const Edge& e : pattern.edges()) {
    if (e.is_loop()) continue;
    padj[e.u][e.v] = padj[e.v][e.u] = true;
  }

  PatternState empty;
  empty.fill(kFinished);
  for (int q = 0; q < p; ++q) empty[q] = kUnmapped;

  std::vector<std::vector<IsoEntry>> tables(nd.nodes.size());
  for (std::size_t t = 0; t < nd.nodes.size(); ++t) {
    const NiceNode& node = nd.nodes[t];
    auto& out = tables[t];
    std::unordered_map<PatternState, int, PatternStateHash> index;
    auto emit = [&](const PatternState& s, int a, int b) {
      if (index.emplace(s, static_cast<int>(out.size())).second) out.push_back({s, a, b});
    };
    switch (node.kind) {
      case NiceKind::leaf:
        emit(empty, -1, -1);
        break;
      case NiceKind::introduce: {
        const Vertex v = node.vertex;
        const auto& in = tables[node.children[0]];
        for (int k = 0; k < static_cast<int>(in.size()); ++k) {
          const PatternState& s = in[k].state;
          emit(s, k, -1);
          for (int q = 0; q < p; ++q) {
            if (s[q] != kUnmapped) continue;
            bool ok = true;
            for (int r = 0; r < p && ok; ++r) {
              if (r == q) continue;
              if (s[r] >= 0) {
                const bool host_edge = g.has_edge(v, s[r]);
                if (padj[q][r] && !host_edge) ok = false;
                if (induced && host_edge && !padj[q][r]) ok = false;
              } else if (s[r] == kFinished && padj[q][r]) {
                ok = false;
              }
            }
            if (!ok) continue;
            PatternState next = s;
            next[q] = v;
            emit(next, k, -1);
          }
        }
        break;
      }
      case NiceKind::forget: {
        const Vertex v = node.vertex;
        const auto& in = tables[node.children[0]];
        for (int k = 0; k < static_cast<int>(in.size()); ++k) {
          PatternState s = in[k].state;
          const auto hit = std::find(s.begin(), s.begin() + p, v);
          if (hit != s.begin() + p) {
            const int q = static_cast<int>(hit - s.begin());
            bool closed = true;
            for (int r = 0; r < p; ++r) {
              if (padj[q][r] && s[r] == kUnmapped) closed = false;
            }
            if (!closed) continue;
            s[q] = kFinished;
          }
          emit(s, k, -1);
        }
        break;
      }
      case NiceKind::join: {
        const auto& left = tables[node.children[0]];
        const auto& right = tables[node.children[1]];
        auto active = [p](const PatternState& s) {
          PatternState a = s;
          for (int q = 0; q < p; ++q) {
            if (a[q] == kFinished) a[q] = kUnmapped;
          }
          return a;
        };
        std::unordered_map<PatternState, std::vector<int>, PatternStateHash> by_active;
        for (int k = 0; k < static_cast<int>(right.size()); ++k) {
          by_active[active(right[k].state)].push_back(k);
        }
        for (int k = 0; k < static_cast<int>(left.size()); ++k) {
          auto it = by_active.find(active(left[k].state));
          if (it == by_active.end()) continue;
          const PatternState& s1 = left[k].state;
          for (int r : it->second) {
            const PatternState& s2 = right[r].state;
            PatternState merged = s1;
            bool ok = true;
            for (int q = 0; q < p && ok; ++q) {
              if (s1[q] == kFinished && s2[q] == kFinished) ok = false;
              else if (s2[q] == kFinished) merged[q] = kFinished;
            }
            for (int q = 0; q < p && ok; ++q) {
              if (s1[q] != kFinished || s2[q] == kFinished) continue;
              for (int x = 0; x < p; ++x) {
                if (s2[x] == kFinished && s1[x] != kFinished && padj[q][x]) ok = false;
              }
            }
            if (ok) emit(merged, k, r);
          }
        }
        break;
      }
    }
  }

  PatternState done;
  done.fill(kFinished);
  const auto& root = tables[nd.root];
  int found = -1;
  for (int k = 0; k < static_cast<int>(root.size()); ++k) {
    if (root[k].state == done) {
      found = k;
      break;
    }
  }
  if (found == -1) return std::nullopt;

  std::vector<Vertex> map(p, kNoVertex);
  std::vector<std::pair<int, int>> stack{{nd.root, found}};
  while (!stack.empty()) {
    const auto [node, idx] = stack.back();
    stack.pop_back();
    const IsoEntry& en = tables[node][idx];
    for (int q = 0; q < p; ++q) {
      if (en.state[q] >= 0) map[q] = en.state[q];
    }
    const NiceNode& nn = nd.nodes[node];
    if (!nn.children.empty()) stack.push_back({nn.children[0], en.a});
    if (nn.children.size() == 2) stack.push_back({nn.children[1], en.b});
  }
  if (!is_pattern_embedding(g, pattern, map, induced)) {
    throw std::logic_error("dp_subiso witness does not verify");
  }
  return map;
}

std::vector<Vertex> dp_solve(Problem p, const NiceDecomposition& nd, const Graph& g) {
  switch (p) {
    case Problem::mis: return dp_mis(nd, g);
    case Problem::vc: return dp_vc(nd, g);
    case Problem::ds: return dp_ds(nd, g, std::vector<bool>(g.num_vertices(), true));
  }
  throw Error("unknown problem");
}

namespace {

std::vector<bool> membership(const Graph& g, const std::vector<Vertex>& set, bool* ok) {
  std::vector<bool> in(g.num_vertices(), false);
  *ok = true;
  for (Vertex v : set) {
    if (v < 0 || v >= g.num_vertices() || in[v]) *ok = false;
    else in[v] = true;
  }
  return in;
}

}  // namespace

bool is_independent_set(const Graph& g, const std::vector<Vertex>& set) {
  bool ok = false;
  const auto in = membership(g, set, &ok);
  if (!ok) return false;
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) return false;
  }
  return true;
}

bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& set) {
  bool ok = false;
  const auto in = membership(g, set, &ok);
  if (!ok) return false;
  for (const Edge& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) return false;
  }
  return true;
}

bool dominates(const Graph& g, const std::vector<Vertex>& set, const std::vector<bool>& required) {
  bool ok = false;
  const auto in = membership(g, set, &ok);
  if (!ok) return false;
  std::vector<bool> covered = in;
  for (const Edge& e : g.edges()) {
    if (in[e.u]) covered[e.v] = true;
    if (in[e.v]) covered[e.u] = true;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (required[v] && !covered[v]) return false;
  }
  return true;
}

bool is_dominating_set(const Graph& g, const std::vector<Vertex>& set) {
  return dominates(g, set, std::vector<bool>(g.num_vertices(), true));
}

bool is_feasible(Problem p, const Graph& g, const std::vector<Vertex>& set) {
  switch (p) {
    case Problem::mis: return is_independent_set(g, set);
    case Problem::vc: return is_vertex_cover(g, set);
    case Problem::ds: return is_dominating_set(g, set);
  }
  return false;
}

bool is_pattern_embedding(const Graph& g, const Graph& pattern, const std::vector<Vertex>& map,
                          bool induced) {
  const int p = pattern.num_vertices();
  if (static_cast<int>(map.size()) != p) return false;
  std::vector<Vertex> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : map) {
    if (v < 0 || v >= g.num_vertices()) return false;
  }
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      const bool pe = pattern.has_edge(a, b);
      const bool he = g.has_edge(map[a], map[b]);
      if (pe && !he) return false;
      if (induced && he && !pe) return false;
    }
  }
  return true;
}

}  // namespace shallow
