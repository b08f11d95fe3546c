#include "treepack/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "treepack/errors.hpp"

namespace treepack::kernels {

namespace {

// Counts for one ordered pair; flags a collinear third point.
inline int right_count_for_pair(const PointSet& pts, int i, int j, bool& saw_on) {
  const int n = static_cast<int>(pts.size());
  const DirectedLine line{pts[i], pts[j]};
  int right = 0;
  for (int k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    Side s = side_of_line(line, pts[k]);
    if (s == Side::Right) ++right;
    else if (s == Side::On) saw_on = true;
  }
  return right;
}

}  // namespace

PairCounts open_right_counts(const PointSet& pts, Mode mode) {
  const int n = static_cast<int>(pts.size());
  PairCounts out;
  out.n = n;
  out.right.assign(static_cast<std::size_t>(n) * n, -1);
  bool any_on = false;

  if (mode == Mode::Parallel) {
#pragma omp parallel for schedule(dynamic, 8) reduction(|| : any_on)
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j || pts[i] == pts[j]) continue;
        bool saw_on = false;
        out.right[static_cast<std::size_t>(i) * n + j] =
            right_count_for_pair(pts, i, j, saw_on);
        any_on = any_on || saw_on;
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j || pts[i] == pts[j]) continue;
        bool saw_on = false;
        out.right[static_cast<std::size_t>(i) * n + j] =
            right_count_for_pair(pts, i, j, saw_on);
        any_on = any_on || saw_on;
      }
    }
  }
  out.any_on = any_on;
  return out;
}

std::vector<std::pair<int, int>> crossing_pairs(const std::vector<Segment>& segs,
                                                Mode mode) {
  const int m = static_cast<int>(segs.size());
  std::vector<std::pair<int, int>> found;

  if (mode == Mode::Parallel) {
#pragma omp parallel
    {
      std::vector<std::pair<int, int>> local;
#pragma omp for schedule(dynamic, 16) nowait
      for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
          if (segments_cross_properly(segs[a], segs[b])) local.emplace_back(a, b);
        }
      }
#pragma omp critical
      found.insert(found.end(), local.begin(), local.end());
    }
  } else {
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (segments_cross_properly(segs[a], segs[b])) found.emplace_back(a, b);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::optional<GeneralPositionViolation> scan_general_position(const PointSet& pts,
                                                              Mode mode) {
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (pts[i] == pts[j]) {
        return GeneralPositionViolation{
            GeneralPositionViolation::Kind::DuplicatePair, i, j, -1};
      }
    }
  }

  // Encode (i, j, k) so the numeric minimum is the lexicographic first.
  const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  std::uint64_t best = none;

  if (mode == Mode::Parallel) {
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best)
    for (int i = 0; i < n; ++i) {
      std::uint64_t local = none;
      for (int j = i + 1; j < n && local == none; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if (orientation(pts[i], pts[j], pts[k]) == Orientation::Collinear) {
            local = (static_cast<std::uint64_t>(i) * nn + j) * nn + k;
            break;
          }
        }
      }
      best = std::min(best, local);
    }
  } else {
    for (int i = 0; i < n && best == none; ++i) {
      for (int j = i + 1; j < n && best == none; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if (orientation(pts[i], pts[j], pts[k]) == Orientation::Collinear) {
            best = (static_cast<std::uint64_t>(i) * nn + j) * nn + k;
            break;
          }
        }
      }
    }
  }

  if (best == none) return std::nullopt;
  int k = static_cast<int>(best % nn);
  int j = static_cast<int>((best / nn) % nn);
  int i = static_cast<int>(best / (nn * nn));
  return GeneralPositionViolation{GeneralPositionViolation::Kind::CollinearTriple,
                                  i, j, k};
}

}  // namespace treepack::kernels

namespace treepack {

GeneralPositionResult is_general_position(const PointSet& pts, kernels::Mode mode) {
  GeneralPositionResult res;
  if (auto v = kernels::scan_general_position(pts, mode)) {
    res.ok = false;
    res.violation = *v;
  }
  return res;
}

}  // namespace treepack
