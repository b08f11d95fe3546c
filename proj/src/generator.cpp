#include "treepack/generator.hpp"

#include "treepack/errors.hpp"

namespace treepack {

PointSet generate_instance(int n, std::uint64_t seed, std::uint64_t span) {
  if (n < 3) throw InputError("need n >= 3");
  if (span < static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n)) {
    throw InputError("span must be at least n^2");
  }

  Lcg64 rng(seed);
  PointSet pts;
  pts.reserve(n);
  long attempts = 0;
  const long max_attempts = 1'000'000;

  while (static_cast<int>(pts.size()) < n) {
    if (++attempts > max_attempts) {
      throw CheckError("instance generation exceeded the attempt cap");
    }
    Rational x(static_cast<unsigned long>(rng.next() % (span + 1)));
    Rational y(static_cast<unsigned long>(rng.next() % (span + 1)));
    Point2 cand{x, y};

    bool ok = true;
    for (const Point2& p : pts) {
      if (p == cand) {
        ok = false;
        break;
      }
    }
    const int m = static_cast<int>(pts.size());
    for (int i = 0; i < m && ok; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (orientation(pts[i], pts[j], cand) == Orientation::Collinear) {
          ok = false;
          break;
        }
      }
    }
    if (ok) pts.push_back(std::move(cand));
  }
  return pts;
}

}  // namespace treepack
