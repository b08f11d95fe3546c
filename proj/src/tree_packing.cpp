#include "treepack/tree_packing.hpp"

#include <algorithm>
#include <string>

#include "treepack/errors.hpp"
#include "treepack/verification.hpp"

namespace treepack {

namespace {

// Angle comparison without trigonometry: split at the +x axis into the
// upper half [0, pi) and lower half [pi, 2pi), then order within a half
// by the cross-product sign.
int half_of(const Point2& v) {
  if (v.y.sign() > 0) return 0;
  if (v.y.sign() < 0) return 1;
  return v.x.sign() > 0 ? 0 : 1;
}

Rational cross(const Point2& u, const Point2& v) {
  return u.x * v.y - u.y * v.x;
}

bool angle_less(const Point2& u, const Point2& v) {
  int hu = half_of(u), hv = half_of(v);
  if (hu != hv) return hu < hv;
  return cross(u, v).sign() > 0;
}

bool same_direction(const Point2& u, const Point2& v) {
  return cross(u, v).sign() == 0 && (u.x * v.x + u.y * v.y).sign() > 0;
}

}  // namespace

RadialOrder compute_radial_order(const PointSet& pts, const Centerpoint& c) {
  const int n = static_cast<int>(pts.size());
  RadialOrder ro;
  ro.center = c.c;
  ro.order.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (c.in_set && i == c.index) continue;
    if (pts[i] == c.c) {
      throw InputError("a point of the set coincides with the centerpoint");
    }
    ro.order.push_back(i);
  }

  std::vector<Point2> vecs(n);
  for (int i : ro.order) vecs[i] = Point2{pts[i].x - c.c.x, pts[i].y - c.c.y};
  std::sort(ro.order.begin(), ro.order.end(),
            [&](int a, int b) { return angle_less(vecs[a], vecs[b]); });

  for (std::size_t t = 1; t < ro.order.size(); ++t) {
    if (same_direction(vecs[ro.order[t - 1]], vecs[ro.order[t]])) {
      throw InputError("angular tie: points " + std::to_string(ro.order[t - 1]) +
                       " and " + std::to_string(ro.order[t]) +
                       " are collinear with the centerpoint");
    }
  }
  return ro;
}

std::vector<DirectedEdge> build_graph(int m, int start, int k, int residue) {
  if (k < 1 || residue < 0 || residue > 2 || m != 3 * k + residue ||
      start < 0 || start >= k) {
    throw CheckError("build_graph parameters out of range");
  }
  std::vector<DirectedEdge> edges;
  edges.reserve(m);
  auto emit_run = [&](int tail, int count) {
    tail %= m;
    for (int t = 1; t <= count; ++t) edges.push_back({tail, (tail + t) % m});
  };
  switch (residue) {
    case 0:
      emit_run(start, k);
      emit_run(start + k, k);
      emit_run(start + 2 * k, k);
      break;
    case 1:
      emit_run(start, k + 1);
      emit_run(start + k + 1, k);
      emit_run(start + 2 * k + 1, k);
      break;
    case 2:
      emit_run(start, k + 1);
      emit_run(start + k + 1, k + 1);
      emit_run(start + 2 * k + 2, k);
      break;
  }
  return edges;
}

ExtractedTree extract_tree(const std::vector<DirectedEdge>& graph, int start) {
  ExtractedTree out;
  out.edges.reserve(graph.size() > 0 ? graph.size() - 1 : 0);
  bool found = false;
  for (const DirectedEdge& e : graph) {
    if (e.head == start) {
      if (found) throw CheckError("more than one edge returns to the start");
      out.removed = e;
      found = true;
      continue;
    }
    out.edges.push_back(e);
  }
  if (!found) throw CheckError("no cycle edge returns to the start position");
  return out;
}

namespace {

ConstructionCase case_for_residue(int residue) {
  switch (residue) {
    case 0: return ConstructionCase::Residue0;
    case 1: return ConstructionCase::Residue1;
    default: return ConstructionCase::Residue2;
  }
}

SpanningTree map_to_input_indices(const ExtractedTree& et, int start,
                                  ConstructionCase cc,
                                  const std::vector<int>& order) {
  SpanningTree tree;
  tree.start = start;
  tree.construction = cc;
  tree.edges.reserve(et.edges.size());
  for (const DirectedEdge& e : et.edges) {
    tree.edges.push_back({order[e.tail], order[e.head]});
  }
  tree.removed = DirectedEdge{order[et.removed.tail], order[et.removed.head]};
  return tree;
}

void verify_packing(const Packing& packing, const PointSet& pts,
                    kernels::Mode mode) {
  for (std::size_t t = 0; t < packing.trees.size(); ++t) {
    auto plane = is_plane(packing.trees[t], pts, mode);
    if (!plane.ok) {
      throw CheckError("tree " + std::to_string(t + 1) + " is not plane: edges " +
                       std::to_string(plane.first_e1) + " and " +
                       std::to_string(plane.first_e2) + " cross");
    }
    auto defect = is_spanning_tree(packing.trees[t], pts);
    if (!defect.ok) {
      throw CheckError("tree " + std::to_string(t + 1) +
                       " is not a spanning tree: " + defect.detail);
    }
  }
  auto disjoint = are_pairwise_edge_disjoint(packing.trees);
  if (!disjoint.ok) {
    throw CheckError("trees " + std::to_string(disjoint.tree_a + 1) + " and " +
                     std::to_string(disjoint.tree_b + 1) + " share edge (" +
                     std::to_string(disjoint.edge.tail) + ", " +
                     std::to_string(disjoint.edge.head) + ")");
  }
  if (packing.centerpoint) {
    int depth = min_halfplane_count(packing.centerpoint->c, pts);
    if (depth < packing.alpha) {
      throw CheckError("selected point has halfplane depth " +
                       std::to_string(depth) + " < " +
                       std::to_string(packing.alpha));
    }
    auto lemma = check_lemma1(packing.centerpoint->c, pts);
    if (!lemma.ok) {
      throw CheckError("halfplane through the centerpoint and point " +
                       std::to_string(lemma.point_index) + " holds only " +
                       std::to_string(lemma.count) + " points");
    }
  }
}

}  // namespace

Packing pack_spanning_trees(const PointSet& pts, std::uint64_t seed, bool verify,
                            kernels::Mode mode) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw InputError("need at least 3 points");

  Packing packing;
  packing.n = n;
  packing.alpha = depth_threshold(n);
  packing.seed = seed;

  if (n <= 5) {
    // One tree suffices; the star from the first point is plane because
    // no three points are collinear. The center is still computed so the
    // result reports its dimension honestly.
    auto gp = is_general_position(pts, mode);
    if (!gp.ok) {
      throw InputError("not in general position: " + gp.violation.describe());
    }
    CenterRegion center = compute_center_region(pts, mode);
    DimensionReport report = classify_dimension(center, pts);
    packing.center_dimension = report.dimension;
    if (report.dimension != 1) {
      packing.centerpoint = select_centerpoint(center, pts, seed);
    }
    SpanningTree star;
    star.construction = ConstructionCase::Star;
    star.start = 0;
    for (int i = 1; i < n; ++i) star.edges.push_back({0, i});
    packing.trees.push_back(std::move(star));
    if (verify) {
      verify_packing(packing, pts, mode);
      packing.verified = true;
    }
    return packing;
  }

  CenterRegion center = compute_center_region(pts, mode);
  DimensionReport report = classify_dimension(center, pts);
  packing.center_dimension = report.dimension;
  Centerpoint c = select_centerpoint(center, pts, seed);
  packing.centerpoint = c;
  RadialOrder ro = compute_radial_order(pts, c);

  if (report.dimension == 2) {
    const int k = n / 3;
    const int residue = n % 3;
    for (int s = 0; s < k; ++s) {
      auto graph = build_graph(n, s, k, residue);
      auto et = extract_tree(graph, s);
      packing.trees.push_back(
          map_to_input_indices(et, s, case_for_residue(residue), ro.order));
    }
  } else {
    // The center is one point of the set: pack the remaining 3k points
    // around it with the residue-0 construction, then hand tree i the
    // edge from the center to its start point.
    const int m = n - 1;
    const int k = m / 3;
    for (int s = 0; s < k; ++s) {
      auto graph = build_graph(m, s, k, 0);
      auto et = extract_tree(graph, s);
      SpanningTree tree =
          map_to_input_indices(et, s, ConstructionCase::CenterInSet, ro.order);
      tree.edges.push_back({c.index, ro.order[s]});
      packing.trees.push_back(std::move(tree));
    }
  }
  packing.radial_order = std::move(ro);

  if (verify) {
    verify_packing(packing, pts, mode);
    packing.verified = true;
  }
  return packing;
}

}  // namespace treepack
