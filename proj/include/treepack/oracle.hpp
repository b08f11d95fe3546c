#pragma once

#include <string>
#include <vector>

#include "treepack/center_region.hpp"
#include "treepack/point_set.hpp"
#include "treepack/tree_packing.hpp"

// Brute-force reference implementations used to cross-check the main
// algorithms on small instances. They share only the low-level exact
// predicates with the main path; no sorting, sweeping, or clipping code
// is reused here.
namespace treepack::oracle {

// Minimum closed-halfplane count at q by full enumeration: for every
// point direction out of q, score all four one-sided half-rotation
// windows directly from orientation and dot signs.
int min_halfplane_count(const Point2& q, const PointSet& pts);

// q belongs to the center iff every closed halfplane containing q holds
// at least ceil(n/3) points.
bool center_membership(const Point2& q, const PointSet& pts);

// Probe points a region answers for: vertices and interior samples must
// be members; points nudged just outside must not be. The nudge is
// 1/1024 of the larger bounding-box extent (of the region, or of the
// point set when the region has no extent).
struct RegionProbes {
  std::vector<Point2> expected_inside;
  std::vector<Point2> expected_outside;
};

RegionProbes build_region_probes(const CenterRegion& center, const PointSet& pts);

struct RegionAgreement {
  bool agree = true;
  std::vector<std::string> disagreements;
};

RegionAgreement region_agreement(const PointSet& pts, const CenterRegion& center);

struct PackingRecheck {
  bool ok = true;
  std::vector<std::string> findings;
};

// Re-derives planeness and disjointness from raw segments and index
// pairs, ignoring all construction metadata.
PackingRecheck packing_recheck(const Packing& packing, const PointSet& pts);

}  // namespace treepack::oracle
