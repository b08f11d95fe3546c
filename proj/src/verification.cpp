#include "treepack/verification.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "treepack/center_region.hpp"
#include "treepack/errors.hpp"

namespace treepack {

namespace {

int half_of(const Point2& v) {
  if (v.y.sign() > 0) return 0;
  if (v.y.sign() < 0) return 1;
  return v.x.sign() > 0 ? 0 : 1;
}

int cross_sign(const Point2& u, const Point2& v) {
  return (u.x * v.y - u.y * v.x).sign();
}

int dot_sign(const Point2& u, const Point2& v) {
  return (u.x * v.x + u.y * v.y).sign();
}

bool angle_less(const Point2& u, const Point2& v) {
  int hu = half_of(u), hv = half_of(v);
  if (hu != hv) return hu < hv;
  return cross_sign(u, v) > 0;
}

bool same_direction(const Point2& u, const Point2& v) {
  return cross_sign(u, v) == 0 && dot_sign(u, v) > 0;
}

bool antipodal(const Point2& u, const Point2& v) {
  return cross_sign(u, v) == 0 && dot_sign(u, v) < 0;
}

}  // namespace

PlanenessResult is_plane(const SpanningTree& tree, const PointSet& pts,
                         kernels::Mode mode) {
  std::vector<Segment> segs;
  segs.reserve(tree.edges.size());
  for (const DirectedEdge& e : tree.edges) {
    segs.push_back({pts[e.tail], pts[e.head]});
  }
  auto crossings = kernels::crossing_pairs(segs, mode);
  if (crossings.empty()) return {};
  return {false, crossings.front().first, crossings.front().second};
}

SpanningTreeDefect is_spanning_tree(const SpanningTree& tree, const PointSet& pts) {
  const int n = static_cast<int>(pts.size());
  if (static_cast<int>(tree.edges.size()) != n - 1) {
    return {false, "expected " + std::to_string(n - 1) + " edges, got " +
                       std::to_string(tree.edges.size())};
  }
  std::set<std::pair<int, int>> seen;
  for (const DirectedEdge& e : tree.edges) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      return {false, "edge index out of range"};
    }
    if (e.tail == e.head) return {false, "self-loop"};
    auto key = std::minmax(e.tail, e.head);
    if (!seen.insert(key).second) {
      return {false, "repeated edge (" + std::to_string(key.first) + ", " +
                         std::to_string(key.second) + ")"};
    }
  }

  // n-1 distinct edges connect n vertices iff there is one component.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const DirectedEdge& e : tree.edges) {
    int a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) return {false, "disconnected"};
  return {};
}

DisjointnessResult are_pairwise_edge_disjoint(const std::vector<SpanningTree>& trees) {
  std::map<std::pair<int, int>, int> owner;
  for (int t = 0; t < static_cast<int>(trees.size()); ++t) {
    for (const DirectedEdge& e : trees[t].edges) {
      auto key = std::minmax(e.tail, e.head);
      auto [it, inserted] = owner.emplace(key, t);
      if (!inserted && it->second != t) {
        return {false, it->second, t, {key.first, key.second}};
      }
    }
  }
  return {};
}

int min_halfplane_count(const Point2& q, const PointSet& pts) {
  int at_q = 0;
  std::vector<Point2> vecs;
  vecs.reserve(pts.size());
  for (const Point2& p : pts) {
    if (p == q) {
      ++at_q;
    } else {
      vecs.push_back({p.x - q.x, p.y - q.y});
    }
  }
  if (vecs.empty()) return at_q;

  // Critical directions: every point direction and its opposite. The
  // window (d, d + pi] held just after a critical direction d realises
  // every locally minimal closed-halfplane count.
  struct Dir {
    Point2 v;
    int weight;  // points at exactly this direction
  };
  std::vector<Dir> dirs;
  dirs.reserve(2 * vecs.size());
  for (const Point2& v : vecs) {
    dirs.push_back({v, 1});
    dirs.push_back({Point2{-v.x, -v.y}, 0});
  }
  std::sort(dirs.begin(), dirs.end(),
            [](const Dir& a, const Dir& b) { return angle_less(a.v, b.v); });
  std::vector<Dir> merged;
  for (const Dir& d : dirs) {
    if (!merged.empty() && same_direction(merged.back().v, d.v)) {
      merged.back().weight += d.weight;
    } else {
      merged.push_back(d);
    }
  }

  // Closed under negation, so the list has even length and the opposite
  // of entry u sits exactly half a turn later.
  const int r = static_cast<int>(merged.size());
  if (r % 2 != 0) throw CheckError("direction list must have even length");
  for (int u = 0; u < r / 2; ++u) {
    if (!antipodal(merged[u].v, merged[u + r / 2].v)) {
      throw CheckError("direction list is not antipodally aligned");
    }
  }

  std::vector<long> pref(r + 1, 0);
  for (int u = 0; u < r; ++u) pref[u + 1] = pref[u] + merged[u].weight;
  auto prefix_doubled = [&](int x) {  // prefix over the cyclic sequence
    return (x / r) * pref[r] + pref[x % r];
  };

  long best = std::numeric_limits<long>::max();
  for (int u = 0; u < r; ++u) {
    // weights of directions strictly after u, up to and including u + r/2
    long window = prefix_doubled(u + r / 2 + 1) - prefix_doubled(u + 1);
    best = std::min(best, window);
  }
  return static_cast<int>(best) + at_q;
}

Lemma1Result check_lemma1(const Point2& c, const PointSet& pts) {
  const int n = static_cast<int>(pts.size());
  const int need = depth_threshold(n) + 1;
  for (int ip = 0; ip < n; ++ip) {
    if (pts[ip] == c) continue;
    DirectedLine line{c, pts[ip]};
    int left = 0, right = 0;
    for (const Point2& x : pts) {
      Side s = side_of_line(line, x);
      if (s != Side::Right) ++left;
      if (s != Side::Left) ++right;
    }
    if (left < need) return {false, ip, Side::Left, left};
    if (right < need) return {false, ip, Side::Right, right};
  }
  return {};
}

}  // namespace treepack
