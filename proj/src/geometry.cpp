#include "treepack/geometry.hpp"

namespace treepack {

bool lex_less(const Point2& a, const Point2& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Orientation orientation(const Point2& a, const Point2& b, const Point2& c) {
  // Integer coordinates are the common case (generated instances, most
  // fixtures); a pure mpz determinant avoids per-op canonicalization.
  if (a.x.is_integer() && a.y.is_integer() && b.x.is_integer() &&
      b.y.is_integer() && c.x.is_integer() && c.y.is_integer()) {
    mpz_class ux = b.x.numerator() - a.x.numerator();
    mpz_class uy = b.y.numerator() - a.y.numerator();
    mpz_class vx = c.x.numerator() - a.x.numerator();
    mpz_class vy = c.y.numerator() - a.y.numerator();
    mpz_class det = ux * vy - uy * vx;
    int s = sgn(det);
    return s > 0 ? Orientation::CounterClockwise
           : s < 0 ? Orientation::Clockwise
                   : Orientation::Collinear;
  }
  Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  int s = det.sign();
  return s > 0 ? Orientation::CounterClockwise
         : s < 0 ? Orientation::Clockwise
                 : Orientation::Collinear;
}

Side side_of_line(const DirectedLine& l, const Point2& q) {
  switch (orientation(l.anchor, l.through, q)) {
    case Orientation::CounterClockwise: return Side::Left;
    case Orientation::Clockwise: return Side::Right;
    default: return Side::On;
  }
}

namespace {

// For four collinear points: do the two segments overlap in more than a
// point? Compared along the axis where s has extent.
bool collinear_segments_overlap(const Segment& s, const Segment& t) {
  const bool use_x = s.a.x != s.b.x;
  auto coord = [&](const Point2& p) { return use_x ? p.x : p.y; };
  Rational s_lo = coord(s.a), s_hi = coord(s.b);
  if (s_hi < s_lo) std::swap(s_lo, s_hi);
  Rational t_lo = coord(t.a), t_hi = coord(t.b);
  if (t_hi < t_lo) std::swap(t_lo, t_hi);
  Rational lo = s_lo < t_lo ? t_lo : s_lo;
  Rational hi = s_hi < t_hi ? s_hi : t_hi;
  return lo < hi;
}

}  // namespace

bool segments_cross_properly(const Segment& s, const Segment& t) {
  Orientation o1 = orientation(s.a, s.b, t.a);
  Orientation o2 = orientation(s.a, s.b, t.b);
  Orientation o3 = orientation(t.a, t.b, s.a);
  Orientation o4 = orientation(t.a, t.b, s.b);

  if (o1 != Orientation::Collinear && o2 != Orientation::Collinear &&
      o3 != Orientation::Collinear && o4 != Orientation::Collinear) {
    return o1 != o2 && o3 != o4;
  }
  if (o1 == Orientation::Collinear && o2 == Orientation::Collinear &&
      o3 == Orientation::Collinear && o4 == Orientation::Collinear) {
    return collinear_segments_overlap(s, t);
  }
  // An endpoint touching the other segment is not a proper crossing.
  return false;
}

}  // namespace treepack
