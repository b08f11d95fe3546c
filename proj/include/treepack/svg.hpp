#pragma once

#include <string>

#include "treepack/center_region.hpp"
#include "treepack/point_set.hpp"
#include "treepack/tree_packing.hpp"

namespace treepack {

struct SvgOptions {
  int width = 600;
  int height = 600;
  double margin_fraction = 0.05;
};

// Rendering is the one place coordinates become floating point.
// Packings get one <g class="tree"> layer per tree; points are labeled
// circles (p_1.. in radial order when available, input order otherwise)
// and the centerpoint gets its own marker.
std::string render_packing_svg(const PointSet& pts, const Packing& packing,
                               const SvgOptions& options = {});

std::string render_region_svg(const PointSet& pts, const CenterRegion& center,
                              const SvgOptions& options = {});

std::string render_points_svg(const PointSet& pts, const SvgOptions& options = {});

}  // namespace treepack
