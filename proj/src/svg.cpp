#include "treepack/svg.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#ffbb78"};

struct Mapper {
  double scale, off_x, off_y;
  int height;

  std::pair<double, double> map(const Point2& p) const {
    double x = off_x + scale * p.x.to_double();
    double y = height - (off_y + scale * p.y.to_double());
    return {x, y};
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

Mapper make_mapper(const PointSet& pts, const SvgOptions& opt) {
  if (pts.empty()) throw CheckError("nothing to render");
  BoundingBox bb = bounding_box(pts);
  double min_x = bb.min_x.to_double(), max_x = bb.max_x.to_double();
  double min_y = bb.min_y.to_double(), max_y = bb.max_y.to_double();
  double span_x = max_x - min_x, span_y = max_y - min_y;
  if (span_x <= 0) span_x = 1;
  if (span_y <= 0) span_y = 1;
  double margin = opt.margin_fraction;
  double sx = opt.width * (1 - 2 * margin) / span_x;
  double sy = opt.height * (1 - 2 * margin) / span_y;
  double scale = sx < sy ? sx : sy;
  double off_x = (opt.width - scale * span_x) / 2 - scale * min_x;
  double off_y = (opt.height - scale * span_y) / 2 - scale * min_y;
  return Mapper{scale, off_x, off_y, opt.height};
}

void open_svg(std::ostringstream& out, const SvgOptions& opt) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << opt.width
      << " " << opt.height << "\" width=\"" << opt.width << "\" height=\""
      << opt.height << "\">\n";
  out << "  <rect width=\"" << opt.width << "\" height=\"" << opt.height
      << "\" fill=\"white\"/>\n";
}

void draw_points(std::ostringstream& out, const PointSet& pts,
                 const std::vector<int>& label_order, const Mapper& m) {
  out << "  <g class=\"points\" fill=\"#202020\" font-size=\"11\">\n";
  std::vector<int> label_of(pts.size(), 0);
  for (std::size_t t = 0; t < label_order.size(); ++t) {
    label_of[label_order[t]] = static_cast<int>(t) + 1;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto [x, y] = m.map(pts[i]);
    out << "    <circle class=\"site\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
        << "\" r=\"3\"/>\n";
    if (label_of[i] > 0) {
      out << "    <text x=\"" << fmt(x + 5) << "\" y=\"" << fmt(y - 5)
          << "\">p_" << label_of[i] << "</text>\n";
    }
  }
  out << "  </g>\n";
}

void draw_centerpoint(std::ostringstream& out, const Point2& c, const Mapper& m) {
  auto [x, y] = m.map(c);
  out << "  <circle class=\"centerpoint\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
      << "\" r=\"4.5\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  out << "  <text x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y + 12)
      << "\" font-size=\"11\">c</text>\n";
}

std::vector<int> default_order(const PointSet& pts) {
  std::vector<int> order(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
  return order;
}

}  // namespace

std::string render_packing_svg(const PointSet& pts, const Packing& packing,
                               const SvgOptions& opt) {
  std::ostringstream out;
  Mapper m = make_mapper(pts, opt);
  open_svg(out, opt);

  for (std::size_t t = 0; t < packing.trees.size(); ++t) {
    const char* color = kPalette[t % kPalette.size()];
    out << "  <g class=\"tree\" id=\"tree-" << (t + 1) << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\">\n";
    for (const DirectedEdge& e : packing.trees[t].edges) {
      auto [x1, y1] = m.map(pts[e.tail]);
      auto [x2, y2] = m.map(pts[e.head]);
      out << "    <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\""
          << fmt(x2) << "\" y2=\"" << fmt(y2) << "\"/>\n";
    }
    out << "  </g>\n";
  }

  draw_points(out, pts,
              packing.radial_order ? packing.radial_order->order
                                   : default_order(pts),
              m);
  if (packing.centerpoint) draw_centerpoint(out, packing.centerpoint->c, m);
  out << "</svg>\n";
  return out.str();
}

std::string render_region_svg(const PointSet& pts, const CenterRegion& center,
                              const SvgOptions& opt) {
  std::ostringstream out;
  Mapper m = make_mapper(pts, opt);
  open_svg(out, opt);

  const auto& vs = center.region.vertices();
  switch (center.region.kind()) {
    case RegionKind::Polygon: {
      out << "  <polygon class=\"center-region\" fill=\"#2ca02c\" "
             "fill-opacity=\"0.25\" stroke=\"#2ca02c\" points=\"";
      for (std::size_t i = 0; i < vs.size(); ++i) {
        auto [x, y] = m.map(vs[i]);
        if (i) out << " ";
        out << fmt(x) << "," << fmt(y);
      }
      out << "\"/>\n";
      break;
    }
    case RegionKind::Segment: {
      auto [x1, y1] = m.map(vs[0]);
      auto [x2, y2] = m.map(vs[1]);
      out << "  <line class=\"center-region\" stroke=\"#2ca02c\" "
             "stroke-width=\"2\" x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1)
          << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2) << "\"/>\n";
      break;
    }
    case RegionKind::Point: {
      auto [x, y] = m.map(vs[0]);
      out << "  <circle class=\"center-region\" cx=\"" << fmt(x) << "\" cy=\""
          << fmt(y) << "\" r=\"6\" fill=\"#2ca02c\" fill-opacity=\"0.6\"/>\n";
      break;
    }
    case RegionKind::Empty:
      break;
  }

  draw_points(out, pts, default_order(pts), m);
  out << "</svg>\n";
  return out.str();
}

std::string render_points_svg(const PointSet& pts, const SvgOptions& opt) {
  std::ostringstream out;
  Mapper m = make_mapper(pts, opt);
  open_svg(out, opt);
  draw_points(out, pts, default_order(pts), m);
  out << "</svg>\n";
  return out.str();
}

}  // namespace treepack
