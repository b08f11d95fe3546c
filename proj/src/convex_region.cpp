#include "treepack/convex_region.hpp"

#include <algorithm>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

// Signed value of q against the boundary of l: positive left, 0 on.
Rational line_value(const DirectedLine& l, const Point2& q) {
  return (l.through.x - l.anchor.x) * (q.y - l.anchor.y) -
         (l.through.y - l.anchor.y) * (q.x - l.anchor.x);
}

void drop_consecutive_duplicates(std::vector<Point2>& loop) {
  std::vector<Point2> out;
  out.reserve(loop.size());
  for (const Point2& p : loop) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  loop = std::move(out);
}

}  // namespace

ConvexRegion ConvexRegion::empty() { return ConvexRegion(RegionKind::Empty, {}); }

ConvexRegion ConvexRegion::point(Point2 p) {
  return ConvexRegion(RegionKind::Point, {std::move(p)});
}

ConvexRegion ConvexRegion::segment(Point2 a, Point2 b) {
  if (a == b) throw CheckError("segment region with equal endpoints");
  if (lex_less(b, a)) std::swap(a, b);
  return ConvexRegion(RegionKind::Segment, {std::move(a), std::move(b)});
}

ConvexRegion ConvexRegion::from_loop(std::vector<Point2> loop) {
  drop_consecutive_duplicates(loop);
  if (loop.empty()) return empty();
  if (loop.size() == 1) return point(loop[0]);

  // All collinear (or all equal) collapses to a segment or point.
  bool flat = true;
  for (std::size_t k = 2; k < loop.size() && flat; ++k) {
    if (orientation(loop[0], loop[1], loop[k]) != Orientation::Collinear)
      flat = false;
  }
  if (flat) {
    Point2 lo = loop[0], hi = loop[0];
    for (const Point2& p : loop) {
      if (lex_less(p, lo)) lo = p;
      if (lex_less(hi, p)) hi = p;
    }
    if (lo == hi) return point(lo);
    return segment(lo, hi);
  }

  // Counter-clockwise orientation via the shoelace sign.
  Rational twice_area(0);
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Point2& p = loop[i];
    const Point2& q = loop[(i + 1) % loop.size()];
    twice_area += p.x * q.y - q.x * p.y;
  }
  if (twice_area.sign() < 0) std::reverse(loop.begin(), loop.end());

  // Merge collinear runs until stable.
  bool changed = true;
  while (changed && loop.size() > 2) {
    changed = false;
    std::vector<Point2> out;
    out.reserve(loop.size());
    const std::size_t m = loop.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Point2& prev = loop[(i + m - 1) % m];
      const Point2& cur = loop[i];
      const Point2& next = loop[(i + 1) % m];
      if (orientation(prev, cur, next) == Orientation::Collinear) {
        changed = true;
        continue;
      }
      out.push_back(cur);
    }
    loop = std::move(out);
    drop_consecutive_duplicates(loop);
  }
  if (loop.size() < 3) return from_loop(std::move(loop));

  auto first = std::min_element(loop.begin(), loop.end(), lex_less);
  std::rotate(loop.begin(), first, loop.end());
  return ConvexRegion(RegionKind::Polygon, std::move(loop));
}

int ConvexRegion::dimension() const {
  switch (kind_) {
    case RegionKind::Empty: return -1;
    case RegionKind::Point: return 0;
    case RegionKind::Segment: return 1;
    case RegionKind::Polygon: return 2;
  }
  return -1;
}

bool ConvexRegion::contains(const Point2& q) const {
  switch (kind_) {
    case RegionKind::Empty:
      return false;
    case RegionKind::Point:
      return vertices_[0] == q;
    case RegionKind::Segment: {
      const Point2& a = vertices_[0];
      const Point2& b = vertices_[1];
      if (orientation(a, b, q) != Orientation::Collinear) return false;
      return !lex_less(q, a) && !lex_less(b, q);
    }
    case RegionKind::Polygon: {
      const std::size_t m = vertices_.size();
      for (std::size_t i = 0; i < m; ++i) {
        if (side_of_line({vertices_[i], vertices_[(i + 1) % m]}, q) == Side::Right)
          return false;
      }
      return true;
    }
  }
  return false;
}

Point2 ConvexRegion::vertex_average() const {
  if (vertices_.empty()) throw CheckError("vertex average of an empty region");
  Rational sx(0), sy(0);
  for (const Point2& p : vertices_) {
    sx += p.x;
    sy += p.y;
  }
  Rational m(static_cast<long>(vertices_.size()));
  return Point2{sx / m, sy / m};
}

Rational ConvexRegion::twice_area() const {
  if (kind_ != RegionKind::Polygon) return Rational(0);
  Rational acc(0);
  const std::size_t m = vertices_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& p = vertices_[i];
    const Point2& q = vertices_[(i + 1) % m];
    acc += p.x * q.y - q.x * p.y;
  }
  return acc;
}

Point2 line_segment_intersection(const DirectedLine& l, const Point2& u,
                                 const Point2& v) {
  Rational fu = line_value(l, u);
  Rational fv = line_value(l, v);
  if (fu.sign() == fv.sign()) {
    throw CheckError("segment endpoints do not straddle the line");
  }
  Rational t = fu / (fu - fv);
  return Point2{u.x + t * (v.x - u.x), u.y + t * (v.y - u.y)};
}

ConvexRegion clip(const ConvexRegion& region, const Halfplane& h) {
  const DirectedLine& bl = h.boundary;
  switch (region.kind()) {
    case RegionKind::Empty:
      return region;
    case RegionKind::Point:
      return h.contains(region.vertices()[0]) ? region : ConvexRegion::empty();
    case RegionKind::Segment: {
      const Point2& a = region.vertices()[0];
      const Point2& b = region.vertices()[1];
      Side sa = side_of_line(bl, a);
      Side sb = side_of_line(bl, b);
      if (sa != Side::Right && sb != Side::Right) return region;
      if (sa == Side::Right && sb == Side::Right) return ConvexRegion::empty();
      if (sa == Side::On) return ConvexRegion::point(a);
      if (sb == Side::On) return ConvexRegion::point(b);
      Point2 m = line_segment_intersection(bl, a, b);
      const Point2& keep = (sa == Side::Left) ? a : b;
      if (m == keep) return ConvexRegion::point(m);
      return ConvexRegion::segment(keep, m);
    }
    case RegionKind::Polygon: {
      const auto& vs = region.vertices();
      const std::size_t m = vs.size();
      std::vector<Point2> out;
      out.reserve(m + 1);
      for (std::size_t i = 0; i < m; ++i) {
        const Point2& u = vs[i];
        const Point2& v = vs[(i + 1) % m];
        bool in_u = side_of_line(bl, u) != Side::Right;
        bool in_v = side_of_line(bl, v) != Side::Right;
        if (in_u && in_v) {
          out.push_back(v);
        } else if (in_u && !in_v) {
          if (side_of_line(bl, u) == Side::On) out.push_back(u);
          else out.push_back(line_segment_intersection(bl, u, v));
        } else if (!in_u && in_v) {
          if (side_of_line(bl, v) == Side::On) {
            out.push_back(v);
          } else {
            out.push_back(line_segment_intersection(bl, u, v));
            out.push_back(v);
          }
        }
      }
      return ConvexRegion::from_loop(std::move(out));
    }
  }
  return ConvexRegion::empty();
}

}  // namespace treepack
