#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treepack/center_region.hpp"
#include "treepack/point_set.hpp"

namespace treepack {

// Counter-clockwise order of the points around a center, by exact angle
// from the +x direction. In the center-in-set case the center point
// itself is excluded from the order.
struct RadialOrder {
  Point2 center;
  std::vector<int> order;  // input indices; order[t] sits at radial position t
};

RadialOrder compute_radial_order(const PointSet& pts, const Centerpoint& c);

struct DirectedEdge {
  int tail = -1;
  int head = -1;
  friend bool operator==(const DirectedEdge& a, const DirectedEdge& b) {
    return a.tail == b.tail && a.head == b.head;
  }
};

enum class ConstructionCase { Residue0, Residue1, Residue2, CenterInSet, Star };

// The spanning directed graph for one start position, in radial-position
// space [0, m). Three tails send edges to runs of following points; the
// graph has exactly m edges and a single directed cycle through its
// tails. Requires m == 3k + residue and 0 <= start < k.
std::vector<DirectedEdge> build_graph(int m, int start, int k, int residue);

struct ExtractedTree {
  std::vector<DirectedEdge> edges;  // m - 1 edges, construction order
  DirectedEdge removed;             // the cycle edge whose head is start
};

// Removes the one cycle-closing edge returning to the start position.
ExtractedTree extract_tree(const std::vector<DirectedEdge>& graph, int start);

struct SpanningTree {
  std::vector<DirectedEdge> edges;  // input indices, tail first
  int start = 0;                    // radial position of the first tail
  ConstructionCase construction = ConstructionCase::Star;
  std::optional<DirectedEdge> removed;  // input indices

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

struct Packing {
  int n = 0;
  int alpha = 0;
  std::uint64_t seed = 0;
  int center_dimension = -1;
  std::optional<Centerpoint> centerpoint;
  std::optional<RadialOrder> radial_order;
  std::vector<SpanningTree> trees;
  bool verified = false;
};

// Builds floor(n/3) pairwise edge-disjoint plane spanning trees around a
// centerpoint: the residue-matched construction for a 2-dimensional
// center, the reduced construction plus a connecting edge when the
// center is a point of the set, and a single star for n in {3,4,5}.
// With verify set, every guarantee is re-checked and a failure throws
// CheckError rather than returning a bad packing.
Packing pack_spanning_trees(const PointSet& pts, std::uint64_t seed,
                            bool verify = true,
                            kernels::Mode mode = kernels::Mode::Parallel);

}  // namespace treepack
