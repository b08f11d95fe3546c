#include "treepack/point_set.hpp"

#include "treepack/errors.hpp"

namespace treepack {

std::string GeneralPositionViolation::describe() const {
  if (kind == Kind::DuplicatePair) {
    return "duplicate points at indices " + std::to_string(a) + " and " +
           std::to_string(b);
  }
  return "collinear points at indices " + std::to_string(a) + ", " +
         std::to_string(b) + ", " + std::to_string(c);
}

BoundingBox bounding_box(const PointSet& pts) {
  if (pts.empty()) throw CheckError("bounding box of an empty point set");
  BoundingBox bb{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const Point2& p : pts) {
    if (p.x < bb.min_x) bb.min_x = p.x;
    if (p.y < bb.min_y) bb.min_y = p.y;
    if (bb.max_x < p.x) bb.max_x = p.x;
    if (bb.max_y < p.y) bb.max_y = p.y;
  }
  return bb;
}

}  // namespace treepack
