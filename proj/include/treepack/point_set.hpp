#pragma once

#include <string>
#include <vector>

#include "treepack/geometry.hpp"

namespace treepack {

// Ordered list of points; indices into it are the stable identity used
// by every downstream structure and file format.
using PointSet = std::vector<Point2>;

struct GeneralPositionViolation {
  enum class Kind { DuplicatePair, CollinearTriple };
  Kind kind;
  int a = -1;
  int b = -1;
  int c = -1;  // unused for duplicates

  std::string describe() const;
};

struct GeneralPositionResult {
  bool ok = true;
  GeneralPositionViolation violation;  // meaningful only when !ok
};

struct BoundingBox {
  Rational min_x, min_y, max_x, max_y;
};

BoundingBox bounding_box(const PointSet& pts);

}  // namespace treepack
