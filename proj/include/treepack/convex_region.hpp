#pragma once

#include <vector>

#include "treepack/geometry.hpp"

namespace treepack {

enum class RegionKind { Empty, Point, Segment, Polygon };

// Convex region in canonical form, so equality of regions is equality of
// vertex lists:
//   Polygon  >= 3 vertices, counter-clockwise, no consecutive collinear
//            vertices, lexicographically smallest vertex first
//   Segment  two distinct endpoints in lexicographic order
//   Point    one vertex
class ConvexRegion {
 public:
  ConvexRegion() = default;  // Empty

  static ConvexRegion empty();
  static ConvexRegion point(Point2 p);
  static ConvexRegion segment(Point2 a, Point2 b);
  // Canonicalizes an arbitrary convex vertex loop; collapses degenerate
  // loops to Segment / Point / Empty.
  static ConvexRegion from_loop(std::vector<Point2> loop);

  RegionKind kind() const { return kind_; }
  const std::vector<Point2>& vertices() const { return vertices_; }
  int dimension() const;  // -1 for Empty, else 0 / 1 / 2

  bool contains(const Point2& q) const;
  Point2 vertex_average() const;
  Rational twice_area() const;  // shoelace; 0 unless Polygon

  friend bool operator==(const ConvexRegion& a, const ConvexRegion& b) {
    return a.kind_ == b.kind_ && a.vertices_ == b.vertices_;
  }

 private:
  ConvexRegion(RegionKind kind, std::vector<Point2> vertices)
      : kind_(kind), vertices_(std::move(vertices)) {}
  RegionKind kind_ = RegionKind::Empty;
  std::vector<Point2> vertices_;
};

// Exact intersection of a convex region with a closed halfplane. The
// result may drop dimension; vertex coordinates are exact intersections
// of boundary lines.
ConvexRegion clip(const ConvexRegion& region, const Halfplane& h);

// Intersection point of the boundary line of l with segment (u, v), for
// endpoints strictly on opposite sides.
Point2 line_segment_intersection(const DirectedLine& l, const Point2& u,
                                 const Point2& v);

}  // namespace treepack
