#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treepack/errors.hpp"
#include "treepack/generator.hpp"
#include "treepack/kernels.hpp"

using namespace treepack;

namespace {

Point2 pt(long x, long y) { return {Rational(x), Rational(y)}; }

Point2 random_point(Lcg64& rng, long span) {
  long s2 = 2 * span + 1;
  return pt(static_cast<long>(rng.next() % s2) - span,
            static_cast<long>(rng.next() % s2) - span);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::parse("2.625") == Rational(21, 8));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("2.625").str() == "21/8");
  CHECK(Rational::parse("10/5").str() == "2");
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(1, -2).str() == "-1/2");

  CHECK_THROWS_AS(Rational::parse("x"), InputError);
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), InputError);
  CHECK_THROWS_AS(Rational::parse(""), InputError);
  CHECK_THROWS_AS(Rational::parse("1e3"), InputError);
}

TEST_CASE("rational arithmetic stays reduced") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 18));
  CHECK((a / b) == Rational(2));
  CHECK((a / b).denominator() == 1);
  CHECK_THROWS_AS(a / Rational(0), CheckError);
}

TEST_CASE("orientation basic cases") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == Orientation::CounterClockwise);
  CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == Orientation::Collinear);
  CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == Orientation::Clockwise);
}

TEST_CASE("orientation handles non-integer coordinates") {
  Point2 a{Rational::parse("1/3"), Rational::parse("1/7")};
  Point2 b{Rational::parse("2/3"), Rational::parse("1/7")};
  Point2 c{Rational::parse("1/3"), Rational::parse("8/7")};
  CHECK(orientation(a, b, c) == Orientation::CounterClockwise);
  Point2 mid{(a.x + b.x) / Rational(2), (a.y + b.y) / Rational(2)};
  CHECK(orientation(a, b, mid) == Orientation::Collinear);
}

TEST_CASE("orientation is antisymmetric under swaps") {
  Lcg64 rng(11);
  for (int it = 0; it < 300; ++it) {
    Point2 a = random_point(rng, 50);
    Point2 b = random_point(rng, 50);
    Point2 c = random_point(rng, 50);
    Orientation o = orientation(a, b, c);
    auto flip = [](Orientation x) {
      return x == Orientation::CounterClockwise ? Orientation::Clockwise
             : x == Orientation::Clockwise      ? Orientation::CounterClockwise
                                                : Orientation::Collinear;
    };
    CHECK(orientation(b, a, c) == flip(o));
    CHECK(orientation(a, c, b) == flip(o));
    CHECK(orientation(c, b, a) == flip(o));
  }
}

TEST_CASE("side_of_line") {
  DirectedLine l{pt(0, 0), pt(1, 0)};
  CHECK(side_of_line(l, pt(0, 1)) == Side::Left);
  CHECK(side_of_line(l, pt(5, 0)) == Side::On);
  CHECK(side_of_line(l, pt(0, -1)) == Side::Right);
  CHECK(Halfplane{l}.contains(pt(0, 1)));
  CHECK(Halfplane{l}.contains(pt(5, 0)));
  CHECK(!Halfplane{l}.contains(pt(0, -1)));
}

TEST_CASE("segments_cross_properly") {
  auto seg = [](long x1, long y1, long x2, long y2) {
    return Segment{pt(x1, y1), pt(x2, y2)};
  };
  CHECK(segments_cross_properly(seg(0, 0, 2, 2), seg(0, 2, 2, 0)));
  CHECK(!segments_cross_properly(seg(0, 0, 1, 0), seg(1, 0, 1, 1)));
  CHECK(!segments_cross_properly(seg(0, 0, 1, 0), seg(0, 1, 1, 1)));
  // endpoint in the interior of the other segment: a touch, not a crossing
  CHECK(!segments_cross_properly(seg(0, 0, 2, 0), seg(1, 0, 1, 1)));
  // collinear with positive-length overlap violates planeness
  CHECK(segments_cross_properly(seg(0, 0, 2, 0), seg(1, 0, 3, 0)));
  CHECK(segments_cross_properly(seg(0, 0, 3, 0), seg(1, 0, 2, 0)));
  // collinear, touching only at an endpoint
  CHECK(!segments_cross_properly(seg(0, 0, 1, 0), seg(1, 0, 2, 0)));
  // collinear, disjoint
  CHECK(!segments_cross_properly(seg(0, 0, 1, 0), seg(2, 0, 3, 0)));
  // vertical collinear overlap
  CHECK(segments_cross_properly(seg(0, 0, 0, 2), seg(0, 1, 0, 3)));
}

TEST_CASE("segments_cross_properly is symmetric") {
  Lcg64 rng(23);
  for (int it = 0; it < 300; ++it) {
    Segment s{random_point(rng, 20), random_point(rng, 20)};
    Segment t{random_point(rng, 20), random_point(rng, 20)};
    if (s.a == s.b || t.a == t.b) continue;
    CHECK(segments_cross_properly(s, t) == segments_cross_properly(t, s));
  }
}

TEST_CASE("is_general_position") {
  PointSet good = {pt(0, 0), pt(1, 0), pt(0, 1)};
  CHECK(is_general_position(good).ok);

  PointSet collinear = {pt(0, 0), pt(1, 1), pt(2, 2), pt(0, 1)};
  auto r1 = is_general_position(collinear);
  REQUIRE(!r1.ok);
  CHECK(r1.violation.kind == GeneralPositionViolation::Kind::CollinearTriple);
  CHECK(r1.violation.a == 0);
  CHECK(r1.violation.b == 1);
  CHECK(r1.violation.c == 2);

  PointSet dup = {pt(0, 0), pt(0, 0), pt(1, 0)};
  auto r2 = is_general_position(dup);
  REQUIRE(!r2.ok);
  CHECK(r2.violation.kind == GeneralPositionViolation::Kind::DuplicatePair);
  CHECK(r2.violation.a == 0);
  CHECK(r2.violation.b == 1);
}

TEST_CASE("generated instances are in general position") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    auto pts = generate_instance(6, seed, 36);
    CHECK(pts.size() == 6);
    CHECK(is_general_position(pts).ok);
  }
  auto tri = generate_instance(3, 9, 9);
  CHECK(tri.size() == 3);
  CHECK(is_general_position(tri).ok);
}

TEST_CASE("generation is deterministic and validates parameters") {
  auto a = generate_instance(8, 42, 64);
  auto b = generate_instance(8, 42, 64);
  CHECK(a == b);
  CHECK_THROWS_AS(generate_instance(2, 0, 100), InputError);
  CHECK_THROWS_AS(generate_instance(10, 0, 99), InputError);
}
