#pragma once

#include <optional>
#include <vector>

#include "shallow/embedding.hpp"
#include "shallow/parallel.hpp"
#include "shallow/problem.hpp"

namespace shallow {

// delete_levels: windows are the maximal runs avoiding levels = offset (mod k).
// duplicate_levels: windows [i*k + offset, (i+1)*k + offset], sharing one level.
// dominating: cores [i*k + offset, (i+1)*k + offset - 1] partition the levels;
// each window is its core widened by one level on both sides.
enum class SliceMode { delete_levels, duplicate_levels, dominating };

struct LevelWindow {
  int lo = 0;
  int hi = 0;
  int core_lo = 0;  // equal to lo/hi outside dominating mode
  int core_hi = 0;
  friend bool operator==(const LevelWindow&, const LevelWindow&) = default;
};

// Windows clipped to [0, depth]; windows contained in a neighbouring one are
// dropped. Throws Error unless k >= 2 and 0 <= offset < k.
std::vector<LevelWindow> level_windows(int depth, int k, int offset, SliceMode mode);

struct Slice {
  LevelWindow window;
  DerivedGraph sub;             // induced on the window's levels, local ids
  std::vector<bool> core;       // per local vertex: level within the core
};

struct SliceFamily {
  int k = 0;
  int offset = 0;
  SliceMode mode = SliceMode::delete_levels;
  std::vector<Slice> slices;
};

// Vertices the layering did not reach belong to no slice.
SliceFamily build_slices(const Graph& g, const Layering& layering, int k, int offset, SliceMode mode);

struct PtasResult {
  std::vector<Vertex> solution;  // sorted
  int k = 0;
  int offset = 0;                // chosen offset (ties to the smaller one)
  std::vector<int> per_offset_values;
};

// Each connected component is layered by BFS from choose_root(component); a
// single offset is applied to all components. Offsets are evaluated through
// parallel_for; the answer does not depend on exec. Throws Error for k < 2
// or a nonplanar embedding; ptas_ds also for a disconnected one.
PtasResult ptas_mis(const EmbeddedGraph& e, int k, const Execution& exec = {});
PtasResult ptas_vc(const EmbeddedGraph& e, int k, const Execution& exec = {});
PtasResult ptas_ds(const EmbeddedGraph& e, int k, const Execution& exec = {});
PtasResult ptas(Problem p, const EmbeddedGraph& e, int k, const Execution& exec = {});

struct SubisoResult {
  std::optional<std::vector<Vertex>> map;  // pattern vertex -> host vertex
  int pattern_diameter = 0;
  int k = 0;                 // diameter + 2 offsets, windows of diameter + 1 levels
  int offset = -1;           // where the witness was found
  LevelWindow window;
  int windows_searched = 0;
};

// Searches every window of every offset with the tree decomposition DP; the
// reported witness is the one of the lowest offset, then lowest window (and
// component). Throws Error for a disconnected pattern or nonplanar host.
SubisoResult subiso_driver(const EmbeddedGraph& e, const Graph& pattern, bool induced,
                           const Execution& exec = {});

}  // namespace shallow
