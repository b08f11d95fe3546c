#include "treepack/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "treepack/center_region.hpp"
#include "treepack/errors.hpp"
#include "treepack/generator.hpp"
#include "treepack/io.hpp"
#include "treepack/oracle.hpp"
#include "treepack/svg.hpp"
#include "treepack/tree_packing.hpp"
#include "treepack/verification.hpp"

namespace treepack {

namespace {

using kernels::Mode;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

std::optional<ConstructionCase> case_from_token(const std::string& token) {
  if (token == "3k") return ConstructionCase::Residue0;
  if (token == "3k+1") return ConstructionCase::Residue1;
  if (token == "3k+2") return ConstructionCase::Residue2;
  if (token == "0dim") return ConstructionCase::CenterInSet;
  if (token == "star") return ConstructionCase::Star;
  return std::nullopt;
}

Packing packing_from_document(const PackingDocument& doc) {
  Packing packing;
  packing.n = doc.n;
  packing.alpha = doc.alpha;
  packing.seed = doc.seed;
  packing.center_dimension = doc.center_dimension;
  if (doc.centerpoint) {
    packing.centerpoint =
        Centerpoint{*doc.centerpoint, doc.centerpoint_in_set.value_or(false), -1};
  }
  if (doc.radial_order) {
    Point2 center = doc.centerpoint ? *doc.centerpoint : Point2{};
    packing.radial_order = RadialOrder{center, *doc.radial_order};
  }
  for (const auto& rec : doc.trees) {
    SpanningTree tree;
    auto cc = case_from_token(rec.construction);
    if (!cc) throw InputError("unknown construction '" + rec.construction + "'");
    tree.construction = *cc;
    tree.start = rec.start;
    tree.removed = rec.removed;
    tree.edges = rec.edges;
    packing.trees.push_back(std::move(tree));
  }
  packing.verified = doc.verified;
  return packing;
}

int cmd_pack(const std::string& input, std::uint64_t seed, bool no_verify,
             const std::string& svg_path, Mode mode, std::ostream& out) {
  PointSet pts = parse_point_file_at(input);
  Packing packing = pack_spanning_trees(pts, seed, !no_verify, mode);
  out << emit_packing_document(document_from_packing(packing));
  if (!svg_path.empty()) write_file(svg_path, render_packing_svg(pts, packing));
  return 0;
}

int cmd_center(const std::string& input, bool with_oracle,
               const std::string& svg_path, Mode mode, std::ostream& out) {
  PointSet pts = parse_point_file_at(input);
  CenterRegion center = compute_center_region(pts, mode);
  DimensionReport report = classify_dimension(center, pts);

  out << "treepack-center v1\n";
  out << "n " << pts.size() << "\n";
  out << "alpha " << center.alpha << "\n";
  out << "dimension " << report.dimension << "\n";
  const auto& vs = center.region.vertices();
  switch (center.region.kind()) {
    case RegionKind::Polygon: {
      out << "shape polygon";
      for (const Point2& v : vs) out << " " << v.x.str() << " " << v.y.str();
      out << "\n";
      break;
    }
    case RegionKind::Segment:
      out << "shape segment " << vs[0].x.str() << " " << vs[0].y.str() << " "
          << vs[1].x.str() << " " << vs[1].y.str() << "\n";
      break;
    case RegionKind::Point:
      out << "shape point " << vs[0].x.str() << " " << vs[0].y.str() << "\n";
      out << "point_in_set " << (report.point_in_set ? 1 : 0) << "\n";
      break;
    case RegionKind::Empty:
      throw CheckError("empty center region");
  }
  out << "n_mod_3 " << report.n_mod_3 << "\n";
  out << "halfplane_count " << center.defining_halfplanes.size() << "\n";

  if (!svg_path.empty()) write_file(svg_path, render_region_svg(pts, center));

  if (with_oracle) {
    auto agreement = oracle::region_agreement(pts, center);
    if (agreement.agree) {
      out << "oracle agreement\n";
    } else {
      out << "oracle disagreement\n";
      for (const std::string& d : agreement.disagreements) {
        out << "  " << d << "\n";
      }
      return 2;
    }
  }
  return 0;
}

int cmd_gen(int n, std::uint64_t seed, std::uint64_t span, std::ostream& out) {
  if (span == 0) {
    span = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  }
  PointSet pts = generate_instance(n, seed, span);
  out << emit_point_file(pts);
  return 0;
}

int cmd_verify(const std::string& points_path, const std::string& doc_path,
               Mode mode, std::ostream& out) {
  PointSet pts = parse_point_file_at(points_path);
  PackingDocument doc = parse_packing_document_at(doc_path);
  Packing packing = packing_from_document(doc);

  const int n = static_cast<int>(pts.size());
  int failures = 0;
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    out << "check " << name << " " << (ok ? "ok" : "FAIL") ;
    if (!ok && !detail.empty()) out << " (" << detail << ")";
    out << "\n";
    if (!ok) ++failures;
  };

  check("n", doc.n == n,
        "document says " + std::to_string(doc.n) + ", input has " +
            std::to_string(n));
  check("alpha", doc.alpha == depth_threshold(n), "expected " +
            std::to_string(depth_threshold(n)));
  check("tree_count", static_cast<int>(doc.trees.size()) == n / 3,
        "expected " + std::to_string(n / 3));

  bool indices_ok = true;
  for (const auto& rec : doc.trees) {
    for (const DirectedEdge& e : rec.edges) {
      if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) indices_ok = false;
    }
  }
  check("edge_indices", indices_ok, "index out of range");
  if (!indices_ok) return 2;

  for (std::size_t t = 0; t < packing.trees.size(); ++t) {
    auto defect = is_spanning_tree(packing.trees[t], pts);
    check("tree_" + std::to_string(t + 1) + "_spanning", defect.ok, defect.detail);
    auto plane = is_plane(packing.trees[t], pts, mode);
    check("tree_" + std::to_string(t + 1) + "_plane", plane.ok,
          plane.ok ? "" : "edges " + std::to_string(plane.first_e1) + " and " +
                              std::to_string(plane.first_e2) + " cross");
  }
  auto disjoint = are_pairwise_edge_disjoint(packing.trees);
  check("pairwise_disjoint", disjoint.ok,
        disjoint.ok ? ""
                    : "trees " + std::to_string(disjoint.tree_a + 1) + " and " +
                          std::to_string(disjoint.tree_b + 1) + " share (" +
                          std::to_string(disjoint.edge.tail) + ", " +
                          std::to_string(disjoint.edge.head) + ")");

  if (packing.centerpoint) {
    int depth = min_halfplane_count(packing.centerpoint->c, pts);
    check("centerpoint_depth", depth >= doc.alpha,
          "depth " + std::to_string(depth) + " < " + std::to_string(doc.alpha));
    auto lemma = check_lemma1(packing.centerpoint->c, pts);
    check("lemma_halfplanes", lemma.ok,
          lemma.ok ? ""
                   : "line through point " + std::to_string(lemma.point_index) +
                         " holds only " + std::to_string(lemma.count));
    if (doc.radial_order) {
      try {
        Centerpoint c{*doc.centerpoint, false, -1};
        for (int i = 0; i < n; ++i) {
          if (pts[i] == c.c) {
            c.in_set = true;
            c.index = i;
            break;
          }
        }
        RadialOrder recomputed = compute_radial_order(pts, c);
        check("radial_order", recomputed.order == *doc.radial_order,
              "does not match the recomputed order");
      } catch (const InputError& e) {
        check("radial_order", false, e.what());
      }
    }
  }

  return failures == 0 ? 0 : 2;
}

int cmd_render(const std::string& points_path, const std::string& packing_path,
               bool region, int width, int height, const std::string& out_path,
               Mode mode, std::ostream& out) {
  PointSet pts = parse_point_file_at(points_path);
  SvgOptions options;
  options.width = width;
  options.height = height;

  std::string svg;
  if (!packing_path.empty()) {
    Packing packing = packing_from_document(parse_packing_document_at(packing_path));
    svg = render_packing_svg(pts, packing, options);
  } else if (region) {
    CenterRegion center = compute_center_region(pts, mode);
    svg = render_region_svg(pts, center, options);
  } else {
    svg = render_points_svg(pts, options);
  }
  if (out_path.empty()) out << svg;
  else write_file(out_path, svg);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"plane spanning tree packing around exact centerpoints"};
  app.require_subcommand(1);

  std::string input, document, svg_path, out_path;
  std::uint64_t seed = 0, span = 0;
  int n = 0, width = 600, height = 600;
  bool no_verify = false, with_oracle = false, serial = false, region = false;

  auto* pack = app.add_subcommand("pack", "pack spanning trees and print the document");
  pack->add_option("input", input, "point file")->required();
  pack->add_option("--seed", seed, "centerpoint selection seed");
  pack->add_flag("--no-verify", no_verify, "skip the self-checks");
  pack->add_option("--svg", svg_path, "also write an SVG drawing");
  pack->add_flag("--serial", serial, "serial kernels");

  auto* center = app.add_subcommand("center", "report the center region");
  center->add_option("input", input, "point file")->required();
  center->add_flag("--oracle", with_oracle, "cross-check against the brute-force oracle");
  center->add_option("--svg", svg_path, "also write an SVG drawing");
  center->add_flag("--serial", serial, "serial kernels");

  auto* gen = app.add_subcommand("gen", "generate a general-position instance");
  gen->add_option("n", n, "number of points")->required();
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--span", span, "coordinate range [0, span]; default n^2");

  auto* verify = app.add_subcommand("verify", "re-check a packing document");
  verify->add_option("points", input, "point file")->required();
  verify->add_option("document", document, "packing document")->required();
  verify->add_flag("--serial", serial, "serial kernels");

  auto* render = app.add_subcommand("render", "draw points, a packing, or the center");
  render->add_option("points", input, "point file")->required();
  render->add_option("--packing", document, "packing document to draw");
  render->add_flag("--region", region, "draw the center region");
  render->add_option("--out", out_path, "output path (default: stdout)");
  render->add_option("--width", width, "SVG width");
  render->add_option("--height", height, "SVG height");
  render->add_flag("--serial", serial, "serial kernels");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Mode mode = serial ? Mode::Serial : Mode::Parallel;
  try {
    if (app.got_subcommand(pack)) {
      return cmd_pack(input, seed, no_verify, svg_path, mode, out);
    }
    if (app.got_subcommand(center)) {
      return cmd_center(input, with_oracle, svg_path, mode, out);
    }
    if (app.got_subcommand(gen)) {
      return cmd_gen(n, seed, span, out);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(input, document, mode, out);
    }
    if (app.got_subcommand(render)) {
      return cmd_render(input, document, region, width, height, out_path, mode, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CheckError& e) {
    err << "verification failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace treepack
