#include "shallow/baker.hpp"

#include <algorithm>
#include <string>

#include "shallow/decomposition.hpp"
#include "shallow/dp.hpp"
#include "shallow/errors.hpp"
#include "shallow/planar_td.hpp"

namespace shallow {

namespace {

void check_parameters(int k, int offset) {
  if (k < 2) throw Error("slicing parameter k must be at least 2, got " + std::to_string(k));
  if (offset < 0 || offset >= k) {
    throw Error("offset must lie in [0, k), got " + std::to_string(offset));
  }
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

std::vector<LevelWindow> level_windows(int depth, int k, int offset, SliceMode mode) {
  check_parameters(k, offset);
  if (depth < 0) throw Error("negative depth");
  std::vector<LevelWindow> out;
  if (mode == SliceMode::delete_levels) {
    int start = -1;
    for (int l = 0; l <= depth + 1; ++l) {
      const bool usable = l <= depth && l % k != offset;
      if (usable && start < 0) start = l;
      if (!usable && start >= 0) {
        out.push_back({start, l - 1, start, l - 1});
        start = -1;
      }
    }
    return out;
  }
  // i ranges over every block that can touch [0, depth]
  for (int i = floor_div(-offset - 1, k); i * k + offset <= depth + 1; ++i) {
    LevelWindow w;
    if (mode == SliceMode::duplicate_levels) {
      w.core_lo = i * k + offset;
      w.core_hi = (i + 1) * k + offset;
      w.lo = w.core_lo;
      w.hi = w.core_hi;
    } else {
      w.core_lo = i * k + offset;
      w.core_hi = (i + 1) * k + offset - 1;
      w.lo = w.core_lo - 1;
      w.hi = w.core_hi + 1;
    }
    w.lo = std::max(w.lo, 0);
    w.hi = std::min(w.hi, depth);
    w.core_lo = std::max(w.core_lo, 0);
    w.core_hi = std::min(w.core_hi, depth);
    if (w.lo > w.hi || w.core_lo > w.core_hi) continue;
    out.push_back(w);
  }
  if (mode == SliceMode::duplicate_levels) {
    // clipping can leave single-level windows at the ends inside a neighbour
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::vector<LevelWindow> kept;
    for (std::size_t i = 0; i < out.size(); ++i) {
      auto inside = [&](std::size_t j) {
        return j < out.size() && j != i && out[j].lo <= out[i].lo && out[i].hi <= out[j].hi;
      };
      if (inside(i + 1) || (i > 0 && inside(i - 1))) continue;
      kept.push_back(out[i]);
    }
    out = std::move(kept);
  }
  return out;
}

SliceFamily build_slices(const Graph& g, const Layering& layering, int k, int offset, SliceMode mode) {
  if (static_cast<int>(layering.level.size()) != g.num_vertices()) {
    throw Error("layering does not belong to this graph");
  }
  SliceFamily family;
  family.k = k;
  family.offset = offset;
  family.mode = mode;
  for (const LevelWindow& w : level_windows(layering.depth, k, offset, mode)) {
    std::vector<bool> keep(g.num_vertices(), false);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const int l = layering.level[v];
      keep[v] = l != kUnreached && l >= w.lo && l <= w.hi;
    }
    Slice s;
    s.window = w;
    s.sub = induced_subgraph(g, keep);
    s.core.resize(s.sub.graph.num_vertices());
    for (Vertex v = 0; v < s.sub.graph.num_vertices(); ++v) {
      const int l = layering.level[s.sub.map.new_to_old[v]];
      s.core[v] = l >= w.core_lo && l <= w.core_hi;
    }
    family.slices.push_back(std::move(s));
  }
  return family;
}

namespace {

struct Component {
  DerivedEmbedding part;
  Layering layering;
};

std::vector<Component> layered_components(const EmbeddedGraph& e) {
  int count = 0;
  const std::vector<int> comp = connected_components(e.graph(), &count);
  std::vector<Component> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    std::vector<bool> keep(e.num_vertices());
    for (Vertex v = 0; v < e.num_vertices(); ++v) keep[v] = comp[v] == c;
    Component item{induced_subgraph(e, keep), {}};
    item.layering = bfs_layering(item.part.embedding.graph(), choose_root(item.part.embedding.graph()));
    out.push_back(std::move(item));
  }
  return out;
}

// Beyond this width a min-degree decomposition of the slice is tried as well
// and used when it is narrower.
constexpr int kAlternativeWidth = 5;

NiceDecomposition slice_decomposition(const SliceDecomposition& sd) {
  TreeDecomposition td = sd.td;
  if (td.width() > kAlternativeWidth) {
    TreeDecomposition alt = min_degree_decomposition(sd.slice.graph);
    if (alt.width() < td.width()) td = std::move(alt);
  }
  return make_nice(td);
}

// Solves one offset; the returned set uses ids of e.
std::vector<Vertex> solve_offset(Problem p, const EmbeddedGraph& e, const std::vector<Component>& comps,
                                 int k, int offset) {
  const SliceMode mode = p == Problem::mis   ? SliceMode::delete_levels
                         : p == Problem::vc ? SliceMode::duplicate_levels
                                            : SliceMode::dominating;
  std::vector<bool> chosen(e.num_vertices(), false);
  for (const Component& comp : comps) {
    for (const LevelWindow& w : level_windows(comp.layering.depth, k, offset, mode)) {
      const SliceDecomposition sd = slice_td(comp.part.embedding, comp.layering, w.lo, w.hi);
      const Graph& sg = sd.slice.graph;
      const NiceDecomposition nd = slice_decomposition(sd);
      std::vector<Vertex> local;
      if (p == Problem::ds) {
        std::vector<bool> required(sg.num_vertices());
        for (Vertex v = 0; v < sg.num_vertices(); ++v) {
          const int l = comp.layering.level[sd.slice.map.new_to_old[v]];
          required[v] = l >= w.core_lo && l <= w.core_hi;
        }
        local = dp_ds(nd, sg, required);
      } else {
        local = dp_solve(p, nd, sg);
      }
      for (Vertex v : local) chosen[comp.part.map.new_to_old[sd.slice.map.new_to_old[v]]] = true;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < e.num_vertices(); ++v) {
    if (chosen[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

PtasResult ptas(Problem p, const EmbeddedGraph& e, int k, const Execution& exec) {
  check_parameters(k, 0);
  if (!e.is_planar()) throw Error("the embedding has genus " + std::to_string(e.genus()) + ", expected 0");
  if (p == Problem::ds && e.num_components() > 1) {
    throw Error("dominating set scheme requires a connected graph");
  }
  const std::vector<Component> comps = layered_components(e);
  std::vector<std::vector<Vertex>> solutions(k);
  parallel_for(static_cast<std::size_t>(k), exec,
               [&](std::size_t o) { solutions[o] = solve_offset(p, e, comps, k, static_cast<int>(o)); });

  PtasResult out;
  out.k = k;
  for (int o = 0; o < k; ++o) {
    const int value = static_cast<int>(solutions[o].size());
    out.per_offset_values.push_back(value);
    const int best = out.per_offset_values[out.offset];
    if (p == Problem::mis ? value > best : value < best) out.offset = o;
  }
  out.solution = std::move(solutions[out.offset]);
  if (!is_feasible(p, e.graph(), out.solution)) {
    throw std::logic_error("approximation scheme produced an infeasible " + to_string(p) + " solution");
  }
  return out;
}

PtasResult ptas_mis(const EmbeddedGraph& e, int k, const Execution& exec) {
  return ptas(Problem::mis, e, k, exec);
}

PtasResult ptas_vc(const EmbeddedGraph& e, int k, const Execution& exec) {
  return ptas(Problem::vc, e, k, exec);
}

PtasResult ptas_ds(const EmbeddedGraph& e, int k, const Execution& exec) {
  return ptas(Problem::ds, e, k, exec);
}

SubisoResult subiso_driver(const EmbeddedGraph& e, const Graph& pattern, bool induced, const Execution& exec) {
  if (pattern.num_vertices() > kMaxPatternVertices) {
    throw Error("pattern has " + std::to_string(pattern.num_vertices()) + " vertices; at most " +
                std::to_string(kMaxPatternVertices) + " are supported");
  }
  if (!e.is_planar()) throw Error("the host embedding has genus " + std::to_string(e.genus()) + ", expected 0");
  SubisoResult out;
  if (pattern.num_vertices() == 0) {
    out.map = std::vector<Vertex>{};
    return out;
  }
  const std::optional<int> diam = diameter(pattern);
  if (!diam) throw Error("pattern is not connected");
  out.pattern_diameter = *diam;
  out.k = *diam + 2;

  const std::vector<Component> comps = layered_components(e);
  struct OffsetResult {
    std::optional<std::vector<Vertex>> map;
    LevelWindow window;
    int searched = 0;
  };
  std::vector<OffsetResult> results(out.k);
  parallel_for(static_cast<std::size_t>(out.k), exec, [&](std::size_t o) {
    OffsetResult& r = results[o];
    for (const Component& comp : comps) {
      for (const LevelWindow& w :
           level_windows(comp.layering.depth, out.k, static_cast<int>(o), SliceMode::delete_levels)) {
        if (r.map) break;
        const SliceDecomposition sd = slice_td(comp.part.embedding, comp.layering, w.lo, w.hi);
        if (sd.slice.graph.num_vertices() < pattern.num_vertices()) continue;
        ++r.searched;
        auto local = dp_subiso(slice_decomposition(sd), sd.slice.graph, pattern, induced);
        if (!local) continue;
        for (Vertex& v : *local) v = comp.part.map.new_to_old[sd.slice.map.new_to_old[v]];
        r.map = std::move(local);
        r.window = w;
      }
      if (r.map) break;
    }
  });
  for (int o = 0; o < out.k; ++o) {
    out.windows_searched += results[o].searched;
    if (!out.map && results[o].map) {
      out.map = results[o].map;
      out.offset = o;
      out.window = results[o].window;
    }
  }
  if (out.map && !is_pattern_embedding(e.graph(), pattern, *out.map, induced)) {
    throw std::logic_error("subgraph search returned a witness that does not verify");
  }
  return out;
}

}  // namespace shallow
