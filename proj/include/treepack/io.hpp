#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treepack/point_set.hpp"
#include "treepack/tree_packing.hpp"

namespace treepack {

// Point file: one "x y" pair per line, coordinates as decimal literals
// or exact fractions "p/q"; '#' starts a comment; blank lines ignored.
// Duplicate points are rejected here, before any geometry runs.
PointSet parse_point_file(std::istream& in);
PointSet parse_point_file_at(const std::string& path);
std::string emit_point_file(const PointSet& pts);

// Machine-readable packing description with a fixed field order, so two
// runs with the same input and seed produce byte-identical documents.
struct PackingDocument {
  struct TreeRecord {
    std::string construction;  // 3k | 3k+1 | 3k+2 | 0dim | star
    int start = 0;
    std::optional<DirectedEdge> removed;
    std::vector<DirectedEdge> edges;  // input indices, tail first
    friend bool operator==(const TreeRecord&, const TreeRecord&) = default;
  };

  int n = 0;
  int alpha = 0;
  std::uint64_t seed = 0;
  int center_dimension = -1;
  std::optional<Point2> centerpoint;
  std::optional<bool> centerpoint_in_set;
  std::optional<std::vector<int>> radial_order;
  std::vector<TreeRecord> trees;
  bool verified = false;

  friend bool operator==(const PackingDocument&, const PackingDocument&) = default;
};

std::string construction_token(ConstructionCase c);

PackingDocument document_from_packing(const Packing& packing);
std::string emit_packing_document(const PackingDocument& doc);
PackingDocument parse_packing_document(std::istream& in);
PackingDocument parse_packing_document_at(const std::string& path);

}  // namespace treepack
