#include "treepack/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "treepack/errors.hpp"

namespace treepack::oracle {

int min_halfplane_count(const Point2& q, const PointSet& pts) {
  int at_q = 0;
  for (const Point2& p : pts) {
    if (p == q) ++at_q;
  }

  int best = std::numeric_limits<int>::max();
  for (const Point2& p : pts) {
    if (p == q) continue;
    // Classify every other point against the line through q and p.
    int left = 0, right = 0, on_forward = 0, on_backward = 0;
    for (const Point2& x : pts) {
      if (x == q) continue;
      switch (orientation(q, p, x)) {
        case Orientation::CounterClockwise:
          ++left;
          break;
        case Orientation::Clockwise:
          ++right;
          break;
        case Orientation::Collinear: {
          Rational dot = (x.x - q.x) * (p.x - q.x) + (x.y - q.y) * (p.y - q.y);
          if (dot.sign() > 0) ++on_forward;
          else ++on_backward;
          break;
        }
      }
    }
    // The four closed half-rotation windows adjacent to this direction.
    best = std::min({best, left + on_backward, left + on_forward,
                     right + on_forward, right + on_backward});
  }
  if (best == std::numeric_limits<int>::max()) best = 0;
  return best + at_q;
}

bool center_membership(const Point2& q, const PointSet& pts) {
  return min_halfplane_count(q, pts) >= depth_threshold(static_cast<int>(pts.size()));
}

namespace {

Rational probe_offset(const CenterRegion& center, const PointSet& pts) {
  const auto& vs = center.region.vertices();
  Rational w(0), h(0);
  if (!vs.empty()) {
    Rational min_x = vs[0].x, max_x = vs[0].x, min_y = vs[0].y, max_y = vs[0].y;
    for (const Point2& v : vs) {
      if (v.x < min_x) min_x = v.x;
      if (max_x < v.x) max_x = v.x;
      if (v.y < min_y) min_y = v.y;
      if (max_y < v.y) max_y = v.y;
    }
    w = max_x - min_x;
    h = max_y - min_y;
  }
  Rational extent = w < h ? h : w;
  if (extent.sign() == 0) {
    BoundingBox bb = bounding_box(pts);
    Rational pw = bb.max_x - bb.min_x, ph = bb.max_y - bb.min_y;
    extent = pw < ph ? ph : pw;
  }
  if (extent.sign() == 0) extent = Rational(1);
  return extent / Rational(1024);
}

// Outward probe for the polygon edge a -> b of a counter-clockwise
// polygon: midpoint pushed along the right-hand normal, scaled so the
// displacement is on the order of delta.
Point2 outward_probe(const Point2& a, const Point2& b, const Rational& delta) {
  Point2 mid{(a.x + b.x) / Rational(2), (a.y + b.y) / Rational(2)};
  Rational dx = b.x - a.x, dy = b.y - a.y;
  Rational scale = delta / (abs(dx) + abs(dy));
  return Point2{mid.x + dy * scale, mid.y - dx * scale};
}

}  // namespace

RegionProbes build_region_probes(const CenterRegion& center, const PointSet& pts) {
  RegionProbes probes;
  const ConvexRegion& region = center.region;
  const Rational delta = probe_offset(center, pts);
  const auto& vs = region.vertices();

  switch (region.kind()) {
    case RegionKind::Empty:
      break;
    case RegionKind::Point: {
      const Point2& p = vs[0];
      probes.expected_inside.push_back(p);
      probes.expected_outside.push_back({p.x + delta, p.y});
      probes.expected_outside.push_back({p.x - delta, p.y});
      probes.expected_outside.push_back({p.x, p.y + delta});
      probes.expected_outside.push_back({p.x, p.y - delta});
      break;
    }
    case RegionKind::Segment: {
      probes.expected_inside.push_back(vs[0]);
      probes.expected_inside.push_back(vs[1]);
      probes.expected_inside.push_back(region.vertex_average());
      probes.expected_outside.push_back(outward_probe(vs[0], vs[1], delta));
      probes.expected_outside.push_back(outward_probe(vs[1], vs[0], delta));
      break;
    }
    case RegionKind::Polygon: {
      for (const Point2& v : vs) probes.expected_inside.push_back(v);
      probes.expected_inside.push_back(region.vertex_average());
      const std::size_t m = vs.size();
      for (std::size_t i = 0; i < m; ++i) {
        probes.expected_outside.push_back(
            outward_probe(vs[i], vs[(i + 1) % m], delta));
      }
      break;
    }
  }
  return probes;
}

RegionAgreement region_agreement(const PointSet& pts, const CenterRegion& center) {
  RegionAgreement out;
  if (center.region.kind() == RegionKind::Empty) {
    out.agree = false;
    out.disagreements.push_back("region is empty");
    return out;
  }
  RegionProbes probes = build_region_probes(center, pts);
  for (const Point2& p : probes.expected_inside) {
    if (!center_membership(p, pts)) {
      out.agree = false;
      out.disagreements.push_back("expected member fails: (" + p.x.str() + ", " +
                                  p.y.str() + ")");
    }
  }
  for (const Point2& p : probes.expected_outside) {
    if (center_membership(p, pts)) {
      out.agree = false;
      out.disagreements.push_back("expected outsider passes: (" + p.x.str() +
                                  ", " + p.y.str() + ")");
    }
  }
  return out;
}

PackingRecheck packing_recheck(const Packing& packing, const PointSet& pts) {
  PackingRecheck out;
  for (std::size_t t = 0; t < packing.trees.size(); ++t) {
    const auto& edges = packing.trees[t].edges;
    for (std::size_t a = 0; a < edges.size(); ++a) {
      Segment sa{pts[edges[a].tail], pts[edges[a].head]};
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        Segment sb{pts[edges[b].tail], pts[edges[b].head]};
        if (segments_cross_properly(sa, sb)) {
          out.ok = false;
          out.findings.push_back("tree " + std::to_string(t + 1) + ": edges " +
                                 std::to_string(a) + " and " + std::to_string(b) +
                                 " cross");
        }
      }
    }
  }
  std::map<std::pair<int, int>, std::size_t> owner;
  for (std::size_t t = 0; t < packing.trees.size(); ++t) {
    for (const DirectedEdge& e : packing.trees[t].edges) {
      auto key = std::minmax(e.tail, e.head);
      auto [it, inserted] = owner.emplace(key, t);
      if (!inserted && it->second != t) {
        out.ok = false;
        out.findings.push_back("edge (" + std::to_string(key.first) + ", " +
                               std::to_string(key.second) + ") appears in trees " +
                               std::to_string(it->second + 1) + " and " +
                               std::to_string(t + 1));
      }
    }
  }
  return out;
}

}  // namespace treepack::oracle
