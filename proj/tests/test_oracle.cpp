#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treepack/center_region.hpp"
#include "treepack/generator.hpp"
#include "treepack/oracle.hpp"
#include "treepack/tree_packing.hpp"
#include "treepack/verification.hpp"

using namespace treepack;

namespace {

Point2 pt(long x, long y) { return {Rational(x), Rational(y)}; }

PointSet hexagon() {
  return {pt(4, 0), pt(2, 3), pt(-2, 3), pt(-4, 0), pt(-2, -3), pt(2, -3)};
}

}  // namespace

TEST_CASE("membership basics") {
  auto hex = hexagon();
  CHECK(oracle::center_membership(pt(0, 0), hex));
  CHECK(!oracle::center_membership(pt(50, 50), hex));

  PointSet tri = {pt(0, 0), pt(3, 0), pt(0, 3)};
  CHECK(oracle::center_membership(pt(1, 1), tri));
  CHECK(!oracle::center_membership(pt(-1, -1), tri));
  // a hull vertex of the triangle still reaches depth 1 = ceil(3/3)
  CHECK(oracle::center_membership(pt(0, 0), tri));
}

TEST_CASE("membership agrees with the sweep-based depth") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    int n = 5 + static_cast<int>(seed % 7);
    auto pts = generate_instance(n, seed, 4 * n * n);
    auto center = compute_center_region(pts);
    auto probes = oracle::build_region_probes(center, pts);
    auto both = [&](const Point2& q) {
      int a = min_halfplane_count(q, pts);
      int b = oracle::min_halfplane_count(q, pts);
      CHECK(a == b);
      return a;
    };
    for (const Point2& q : probes.expected_inside) {
      CHECK(both(q) >= center.alpha);
    }
    for (const Point2& q : probes.expected_outside) {
      CHECK(both(q) < center.alpha);
    }
  }
}

TEST_CASE("region agreement on good regions") {
  for (const PointSet& pts :
       {hexagon(), PointSet{pt(0, 0), pt(9, 1), pt(7, 7), pt(2, 8), pt(4, 3)}}) {
    auto center = compute_center_region(pts);
    auto agreement = oracle::region_agreement(pts, center);
    CHECK(agreement.agree);
    CHECK(agreement.disagreements.empty());
  }
}

TEST_CASE("region agreement flags a corrupted region") {
  auto pts = hexagon();
  auto center = compute_center_region(pts);
  REQUIRE(center.region.kind() == RegionKind::Polygon);
  // move one vertex outward
  auto verts = center.region.vertices();
  verts[0] = Point2{verts[0].x + Rational(10), verts[0].y + Rational(10)};
  CenterRegion corrupted = center;
  corrupted.region = ConvexRegion::from_loop(verts);
  auto agreement = oracle::region_agreement(pts, corrupted);
  CHECK(!agreement.agree);
  CHECK(!agreement.disagreements.empty());
}

TEST_CASE("region agreement covers point regions with four failing probes") {
  CenterRegion fake;
  fake.alpha = 1;
  fake.region = ConvexRegion::point(pt(1, 1));
  PointSet tri = {pt(0, 0), pt(3, 0), pt(0, 3)};
  // (1,1) is a member for alpha=1, but so are its neighbors: the triangle
  // center is 2-dimensional, so the probes must disagree
  auto agreement = oracle::region_agreement(tri, fake);
  CHECK(!agreement.agree);

  // a genuine point region passes with all four probes failing
  PointSet plus = {pt(0, 0), pt(6, 1), pt(-1, 6), pt(-6, -2), pt(2, -6)};
  auto center = compute_center_region(plus);
  if (center.region.kind() == RegionKind::Point) {
    auto ok = oracle::region_agreement(plus, center);
    CHECK(ok.agree);
  }
}

TEST_CASE("packing recheck agrees with the verifier") {
  auto pts = generate_instance(10, 3, 400);
  auto packing = pack_spanning_trees(pts, 0);
  auto recheck = oracle::packing_recheck(packing, pts);
  CHECK(recheck.ok);
  CHECK(recheck.findings.empty());
}

TEST_CASE("packing recheck flags an injected shared edge") {
  auto pts = generate_instance(9, 8, 324);
  auto packing = pack_spanning_trees(pts, 0);
  REQUIRE(packing.trees.size() == 3);
  // copy an edge of tree 1 over an edge of tree 2
  Packing bad = packing;
  bad.trees[1].edges[0] = bad.trees[0].edges[0];
  auto recheck = oracle::packing_recheck(bad, pts);
  CHECK(!recheck.ok);
  bool saw_duplicate = false;
  for (const auto& f : recheck.findings) {
    if (f.find("appears in trees") != std::string::npos) saw_duplicate = true;
  }
  CHECK(saw_duplicate);
  CHECK(!are_pairwise_edge_disjoint(bad.trees).ok);
}

TEST_CASE("packing recheck flags an injected crossing") {
  PointSet pts = {pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0), pt(5, 1), pt(1, 5)};
  Packing bad;
  bad.n = 6;
  SpanningTree t;
  t.edges = {{0, 1}, {2, 3}, {0, 2}, {3, 4}, {4, 5}};
  bad.trees.push_back(t);
  auto recheck = oracle::packing_recheck(bad, pts);
  CHECK(!recheck.ok);
  bool saw_cross = false;
  for (const auto& f : recheck.findings) {
    if (f.find("cross") != std::string::npos) saw_cross = true;
  }
  CHECK(saw_cross);
}
