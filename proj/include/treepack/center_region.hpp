#pragma once

#include <cstdint>
#include <vector>

#include "treepack/convex_region.hpp"
#include "treepack/kernels.hpp"
#include "treepack/point_set.hpp"

namespace treepack {

// ceil(n / 3): the depth threshold every halfplane containing a
// centerpoint must meet.
inline int depth_threshold(int n) { return (n + 2) / 3; }

struct CenterHalfplane {
  int i = -1;  // boundary runs through point i toward point j
  int j = -1;
  Halfplane halfplane;
  int outside_count = 0;  // points strictly right of the boundary
};

struct CenterRegion {
  ConvexRegion region;
  int alpha = 0;
  std::vector<CenterHalfplane> defining_halfplanes;  // ordered by (i, j)
};

// All closed-left pair halfplanes whose open right side holds at most
// alpha - 1 points. Their intersection is the center. Throws InputError
// (naming the violating indices) when the set is not in general position.
std::vector<CenterHalfplane> enumerate_center_halfplanes(
    const PointSet& pts, kernels::Mode mode = kernels::Mode::Parallel);

// Intersects the defining halfplanes, starting from the bounding box of
// the points (the center lies inside their convex hull). Never Empty for
// valid input.
CenterRegion compute_center_region(const PointSet& pts,
                                   kernels::Mode mode = kernels::Mode::Parallel);

struct DimensionReport {
  int dimension = -1;        // 0, 1, or 2
  bool corollary_applies = false;  // n >= 6 (input was general position)
  int n_mod_3 = -1;
  bool point_in_set = false;  // dimension 0 only
  int point_index = -1;       // dimension 0 and in the set
};

// Dimension of the region plus the facts the 0-dimensional case promises.
// For n >= 6 a dimension outside {0, 2}, or a 0-dimensional center whose
// point is not in the set or with n % 3 != 1, throws CheckError: the
// construction's guarantee failed, which means a bug somewhere.
DimensionReport classify_dimension(const CenterRegion& center, const PointSet& pts);

struct Centerpoint {
  Point2 c;
  bool in_set = false;
  int index = -1;  // index into the point set when in_set
};

// Picks a concrete centerpoint. A 0-dimensional center is its own
// answer. Inside a 2-dimensional center the vertex average is tried
// first and nudged by seeded convex combinations until it lies on no
// line through two points of the set.
Centerpoint select_centerpoint(const CenterRegion& center, const PointSet& pts,
                               std::uint64_t seed);

// True iff q lies on some line through two distinct points of pts.
bool on_any_pair_line(const Point2& q, const PointSet& pts);

}  // namespace treepack
