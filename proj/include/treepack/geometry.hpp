#pragma once

#include "treepack/rational.hpp"

namespace treepack {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
};

// Lexicographic order (x, then y). Used for canonical vertex lists.
bool lex_less(const Point2& a, const Point2& b);

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

// Sign of det(b - a, c - a), computed exactly.
Orientation orientation(const Point2& a, const Point2& b, const Point2& c);

enum class Side { Right = -1, On = 0, Left = 1 };

// Line oriented from anchor toward through; anchor != through.
struct DirectedLine {
  Point2 anchor;
  Point2 through;
};

Side side_of_line(const DirectedLine& l, const Point2& q);

// Closed halfplane to the left of its oriented boundary. Every halfplane
// in the system is stored in this one normal form.
struct Halfplane {
  DirectedLine boundary;
  bool contains(const Point2& q) const {
    return side_of_line(boundary, q) != Side::Right;
  }
};

struct Segment {
  Point2 a;
  Point2 b;
};

// True iff the segments meet in a single point interior to both, or are
// collinear with an overlap of positive length. Shared endpoints and
// endpoint-on-interior contacts do not count.
bool segments_cross_properly(const Segment& s, const Segment& t);

}  // namespace treepack
