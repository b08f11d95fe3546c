// Compares the serial and OpenMP kernel flavors on generated instances
// and checks that they produce identical results while timing them.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "treepack/generator.hpp"
#include "treepack/kernels.hpp"
#include "treepack/tree_packing.hpp"

namespace {

using treepack::kernels::Mode;

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename F>
double time_of(F&& f) {
  double t0 = now_seconds();
  f();
  return now_seconds() - t0;
}

void report(const char* kernel, int n, double serial_s, double parallel_s,
            bool agree) {
  std::printf("%-22s %6d %12.3f %12.3f %8.2fx   %s\n", kernel, n, serial_s * 1e3,
              parallel_s * 1e3, serial_s / parallel_s, agree ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> sizes = {32, 64, 96};
  if (argc > 1) {
    sizes.clear();
    for (int i = 1; i < argc; ++i) sizes.push_back(std::atoi(argv[i]));
  }

#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled\n");
#endif
  std::printf("%-22s %6s %12s %12s %9s   %s\n", "kernel", "n", "serial_ms",
              "parallel_ms", "speedup", "agree");

  for (int n : sizes) {
    auto pts = treepack::generate_instance(
        n, 7, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));

    treepack::kernels::PairCounts cs, cp;
    double ts = time_of([&] { cs = treepack::kernels::open_right_counts(pts, Mode::Serial); });
    double tp = time_of([&] { cp = treepack::kernels::open_right_counts(pts, Mode::Parallel); });
    report("open_right_counts", n, ts, tp,
           cs.right == cp.right && cs.any_on == cp.any_on);

    auto vs = treepack::kernels::scan_general_position(pts, Mode::Serial);
    auto vp = treepack::kernels::scan_general_position(pts, Mode::Parallel);
    ts = time_of([&] { vs = treepack::kernels::scan_general_position(pts, Mode::Serial); });
    tp = time_of([&] { vp = treepack::kernels::scan_general_position(pts, Mode::Parallel); });
    report("collinear_scan", n, ts, tp, vs.has_value() == vp.has_value());

    // Crossing scan over all edges of a full packing.
    auto packing = treepack::pack_spanning_trees(pts, 0, false, Mode::Parallel);
    std::vector<treepack::Segment> segs;
    for (const auto& tree : packing.trees) {
      for (const auto& e : tree.edges) segs.push_back({pts[e.tail], pts[e.head]});
    }
    std::vector<std::pair<int, int>> xs, xp;
    ts = time_of([&] { xs = treepack::kernels::crossing_pairs(segs, Mode::Serial); });
    tp = time_of([&] { xp = treepack::kernels::crossing_pairs(segs, Mode::Parallel); });
    report("crossing_pairs", n, ts, tp, xs == xp);

    treepack::Packing ps, pp;
    ts = time_of([&] { ps = treepack::pack_spanning_trees(pts, 0, true, Mode::Serial); });
    tp = time_of([&] { pp = treepack::pack_spanning_trees(pts, 0, true, Mode::Parallel); });
    report("pack_and_verify", n, ts, tp, ps.trees == pp.trees);
  }
  return 0;
}
