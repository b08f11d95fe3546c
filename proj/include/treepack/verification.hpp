#pragma once

#include <string>
#include <vector>

#include "treepack/kernels.hpp"
#include "treepack/point_set.hpp"
#include "treepack/tree_packing.hpp"

namespace treepack {

struct PlanenessResult {
  bool ok = true;
  int first_e1 = -1;  // indices into the tree's edge list
  int first_e2 = -1;
};

// All-pairs exact crossing check over the tree's edges.
PlanenessResult is_plane(const SpanningTree& tree, const PointSet& pts,
                         kernels::Mode mode = kernels::Mode::Parallel);

struct SpanningTreeDefect {
  bool ok = true;
  std::string detail;
};

// Exactly n-1 edges, valid indices, no repeated undirected edge, one
// connected component.
SpanningTreeDefect is_spanning_tree(const SpanningTree& tree, const PointSet& pts);

struct DisjointnessResult {
  bool ok = true;
  int tree_a = -1;
  int tree_b = -1;
  DirectedEdge edge;  // stored with tail < head
};

DisjointnessResult are_pairwise_edge_disjoint(const std::vector<SpanningTree>& trees);

// Minimum, over all closed halfplanes containing q, of the number of
// points inside. Angular sweep: sort the points around q, then every
// closed half-rotation window between consecutive critical directions is
// scored via prefix sums; q itself counts when it is in the set. q is a
// centerpoint iff the result reaches depth_threshold(n).
int min_halfplane_count(const Point2& q, const PointSet& pts);

struct Lemma1Result {
  bool ok = true;
  int point_index = -1;
  Side side = Side::On;
  int count = -1;
};

// For every point p of the set, both closed halfplanes bounded by the
// line through c and p must hold at least depth_threshold(n) + 1 points
// (points on the line count for both sides). Holds whenever c is a
// centerpoint; the first violating (p, side) is reported otherwise.
Lemma1Result check_lemma1(const Point2& c, const PointSet& pts);

}  // namespace treepack
