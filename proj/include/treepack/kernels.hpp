#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treepack/point_set.hpp"

// Data-parallel inner loops. Each kernel comes in a serial and an OpenMP
// flavor; both produce identical results (the benchmark tool and the
// consistency tests compare them). Callers pick via Mode.
namespace treepack::kernels {

enum class Mode { Serial, Parallel };

struct PairCounts {
  int n = 0;
  // right[i * n + j]: points strictly right of the line p_i -> p_j.
  std::vector<int> right;
  // Some third point lies exactly on a pair line (collinear triple).
  bool any_on = false;
};

// O(n^3) count of points on the open right side of every ordered pair
// line. Entries with i == j or p_i == p_j are left at -1.
PairCounts open_right_counts(const PointSet& pts, Mode mode);

// Indices (a, b), a < b, of segment pairs that cross properly; sorted.
std::vector<std::pair<int, int>> crossing_pairs(const std::vector<Segment>& segs,
                                                Mode mode);

// Lexicographically first duplicate pair, if any, then first collinear
// triple. Duplicate pairs take precedence over triples.
std::optional<GeneralPositionViolation> scan_general_position(const PointSet& pts,
                                                              Mode mode);

}  // namespace treepack::kernels

namespace treepack {

GeneralPositionResult is_general_position(
    const PointSet& pts, kernels::Mode mode = kernels::Mode::Parallel);

}  // namespace treepack
