#include "treepack/center_region.hpp"

#include <string>

#include "treepack/errors.hpp"
#include "treepack/generator.hpp"

namespace treepack {

std::vector<CenterHalfplane> enumerate_center_halfplanes(const PointSet& pts,
                                                         kernels::Mode mode) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw InputError("need at least 3 points");

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (pts[i] == pts[j]) {
        throw InputError("not in general position: " +
                         GeneralPositionViolation{
                             GeneralPositionViolation::Kind::DuplicatePair, i, j, -1}
                             .describe());
      }
    }
  }

  kernels::PairCounts counts = kernels::open_right_counts(pts, mode);
  if (counts.any_on) {
    auto v = kernels::scan_general_position(pts, mode);
    throw InputError("not in general position: " +
                     (v ? v->describe() : std::string("collinear triple")));
  }

  const int alpha = depth_threshold(n);
  std::vector<CenterHalfplane> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int right = counts.right[static_cast<std::size_t>(i) * n + j];
      if (right <= alpha - 1) {
        out.push_back(CenterHalfplane{i, j, Halfplane{{pts[i], pts[j]}}, right});
      }
    }
  }
  return out;
}

CenterRegion compute_center_region(const PointSet& pts, kernels::Mode mode) {
  CenterRegion center;
  center.alpha = depth_threshold(static_cast<int>(pts.size()));
  center.defining_halfplanes = enumerate_center_halfplanes(pts, mode);

  BoundingBox bb = bounding_box(pts);
  ConvexRegion region = ConvexRegion::from_loop({{bb.min_x, bb.min_y},
                                                 {bb.max_x, bb.min_y},
                                                 {bb.max_x, bb.max_y},
                                                 {bb.min_x, bb.max_y}});
  for (const CenterHalfplane& ch : center.defining_halfplanes) {
    region = clip(region, ch.halfplane);
    if (region.kind() == RegionKind::Empty) {
      throw CheckError("center region became empty; a centerpoint always exists");
    }
  }
  center.region = std::move(region);
  return center;
}

DimensionReport classify_dimension(const CenterRegion& center, const PointSet& pts) {
  const int n = static_cast<int>(pts.size());
  DimensionReport report;
  report.dimension = center.region.dimension();
  report.corollary_applies = n >= 6;
  report.n_mod_3 = n % 3;

  if (report.dimension < 0) {
    throw CheckError("center region is empty; a centerpoint always exists");
  }
  if (report.dimension == 0) {
    const Point2& p = center.region.vertices()[0];
    for (int i = 0; i < n; ++i) {
      if (pts[i] == p) {
        report.point_in_set = true;
        report.point_index = i;
        break;
      }
    }
  }
  if (report.corollary_applies) {
    if (report.dimension == 1) {
      throw CheckError(
          "center of a general-position set must be 0- or 2-dimensional, got a "
          "segment");
    }
    if (report.dimension == 0) {
      if (!report.point_in_set) {
        throw CheckError(
            "0-dimensional center must be a point of the set, but is not");
      }
      if (report.n_mod_3 != 1) {
        throw CheckError("0-dimensional center requires n = 3k+1, got n = " +
                         std::to_string(n));
      }
    }
  }
  return report;
}

bool on_any_pair_line(const Point2& q, const PointSet& pts) {
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (orientation(pts[i], pts[j], q) == Orientation::Collinear) return true;
    }
  }
  return false;
}

Centerpoint select_centerpoint(const CenterRegion& center, const PointSet& pts,
                               std::uint64_t seed) {
  const ConvexRegion& region = center.region;
  switch (region.kind()) {
    case RegionKind::Empty:
      throw CheckError("cannot select a centerpoint from an empty region");
    case RegionKind::Segment:
      throw InputError(
          "center region is one-dimensional; no usable centerpoint selection");
    case RegionKind::Point: {
      Centerpoint cp{region.vertices()[0], false, -1};
      for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        if (pts[i] == cp.c) {
          cp.in_set = true;
          cp.index = i;
          break;
        }
      }
      return cp;
    }
    case RegionKind::Polygon:
      break;
  }

  // Vertex average is interior; if it happens to lie on a pair line, walk
  // through seeded interior points until one is clean. Pair lines cover
  // measure zero of a 2-dimensional region, so this terminates fast.
  Point2 candidate = region.vertex_average();
  Lcg64 rng(seed);
  const int max_attempts = 512;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    if (!on_any_pair_line(candidate, pts)) return Centerpoint{candidate, false, -1};
    Rational sum_w(0), sx(0), sy(0);
    for (const Point2& v : region.vertices()) {
      Rational w(static_cast<long>(1 + rng.next() % 997));
      sum_w += w;
      sx += w * v.x;
      sy += w * v.y;
    }
    candidate = Point2{sx / sum_w, sy / sum_w};
  }
  throw CheckError("failed to find a centerpoint off all pair lines");
}

}  // namespace treepack
