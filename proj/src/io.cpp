#include "treepack/io.hpp"

#include <fstream>
#include <sstream>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

PointSet parse_point_file(std::istream& in) {
  PointSet pts;
  std::vector<int> source_lines;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) {
      throw InputError("line " + std::to_string(lineno) +
                       ": expected two coordinates");
    }
    Point2 p{Rational::parse(toks[0]), Rational::parse(toks[1])};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] == p) {
        throw InputError("line " + std::to_string(lineno) +
                         ": duplicate of the point on line " +
                         std::to_string(source_lines[i]));
      }
    }
    pts.push_back(std::move(p));
    source_lines.push_back(lineno);
  }
  if (pts.empty()) throw InputError("no points in input");
  return pts;
}

PointSet parse_point_file_at(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_point_file(in);
}

std::string emit_point_file(const PointSet& pts) {
  std::ostringstream out;
  for (const Point2& p : pts) out << p.x.str() << " " << p.y.str() << "\n";
  return out.str();
}

std::string construction_token(ConstructionCase c) {
  switch (c) {
    case ConstructionCase::Residue0: return "3k";
    case ConstructionCase::Residue1: return "3k+1";
    case ConstructionCase::Residue2: return "3k+2";
    case ConstructionCase::CenterInSet: return "0dim";
    case ConstructionCase::Star: return "star";
  }
  return "?";
}

PackingDocument document_from_packing(const Packing& packing) {
  PackingDocument doc;
  doc.n = packing.n;
  doc.alpha = packing.alpha;
  doc.seed = packing.seed;
  doc.center_dimension = packing.center_dimension;
  if (packing.centerpoint) {
    doc.centerpoint = packing.centerpoint->c;
    doc.centerpoint_in_set = packing.centerpoint->in_set;
  }
  if (packing.radial_order) doc.radial_order = packing.radial_order->order;
  for (const SpanningTree& tree : packing.trees) {
    PackingDocument::TreeRecord rec;
    rec.construction = construction_token(tree.construction);
    rec.start = tree.start;
    rec.removed = tree.removed;
    rec.edges = tree.edges;
    doc.trees.push_back(std::move(rec));
  }
  doc.verified = packing.verified;
  return doc;
}

std::string emit_packing_document(const PackingDocument& doc) {
  std::ostringstream out;
  out << "treepack-packing v1\n";
  out << "n " << doc.n << "\n";
  out << "alpha " << doc.alpha << "\n";
  out << "seed " << doc.seed << "\n";
  out << "center_dimension " << doc.center_dimension << "\n";
  if (doc.centerpoint) {
    out << "centerpoint " << doc.centerpoint->x.str() << " "
        << doc.centerpoint->y.str() << "\n";
    out << "centerpoint_in_set " << (*doc.centerpoint_in_set ? 1 : 0) << "\n";
  } else {
    out << "centerpoint none\n";
    out << "centerpoint_in_set none\n";
  }
  if (doc.radial_order) {
    out << "radial_order";
    for (int i : *doc.radial_order) out << " " << i;
    out << "\n";
  } else {
    out << "radial_order none\n";
  }
  out << "tree_count " << doc.trees.size() << "\n";
  for (std::size_t t = 0; t < doc.trees.size(); ++t) {
    const auto& rec = doc.trees[t];
    out << "tree " << (t + 1) << " case " << rec.construction << " start "
        << rec.start << " removed ";
    if (rec.removed) out << rec.removed->tail << " " << rec.removed->head;
    else out << "none";
    out << "\n";
    out << "tree " << (t + 1) << " edges";
    for (const DirectedEdge& e : rec.edges) out << " " << e.tail << " " << e.head;
    out << "\n";
  }
  out << "verification " << (doc.verified ? "full" : "skipped") << "\n";
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::vector<std::string> expect(const std::string& key) {
    std::string line;
    if (!std::getline(in_, line)) {
      throw InputError("packing document ended early, expected '" + key + "'");
    }
    ++lineno_;
    auto toks = tokens_of(line);
    std::size_t nkey = tokens_of(key).size();
    if (toks.size() < nkey) bad(key);
    auto keytoks = tokens_of(key);
    for (std::size_t i = 0; i < nkey; ++i) {
      if (toks[i] != keytoks[i]) bad(key);
    }
    toks.erase(toks.begin(), toks.begin() + nkey);
    return toks;
  }

 private:
  [[noreturn]] void bad(const std::string& key) {
    throw InputError("packing document line " + std::to_string(lineno_) +
                     ": expected '" + key + "'");
  }
  std::istream& in_;
  int lineno_ = 0;
};

int to_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("packing document: bad integer '" + s + "'");
  }
}

std::uint64_t to_u64(const std::string& s) {
  try {
    std::size_t pos = 0;
    std::uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("packing document: bad integer '" + s + "'");
  }
}

}  // namespace

PackingDocument parse_packing_document(std::istream& in) {
  LineReader reader(in);
  PackingDocument doc;

  auto header = reader.expect("treepack-packing");
  if (header.size() != 1 || header[0] != "v1") {
    throw InputError("unsupported packing document version");
  }
  auto one = [&](const std::string& key) {
    auto toks = reader.expect(key);
    if (toks.size() != 1) throw InputError("expected one value after '" + key + "'");
    return toks[0];
  };

  doc.n = to_int(one("n"));
  doc.alpha = to_int(one("alpha"));
  doc.seed = to_u64(one("seed"));
  doc.center_dimension = to_int(one("center_dimension"));

  auto cp = reader.expect("centerpoint");
  if (cp.size() == 1 && cp[0] == "none") {
    // stays empty
  } else if (cp.size() == 2) {
    doc.centerpoint = Point2{Rational::parse(cp[0]), Rational::parse(cp[1])};
  } else {
    throw InputError("bad centerpoint line");
  }
  auto in_set = one("centerpoint_in_set");
  if (in_set == "none") {
    if (doc.centerpoint) throw InputError("centerpoint_in_set missing");
  } else {
    doc.centerpoint_in_set = to_int(in_set) != 0;
  }

  auto order = reader.expect("radial_order");
  if (!(order.size() == 1 && order[0] == "none")) {
    std::vector<int> indices;
    for (const std::string& s : order) indices.push_back(to_int(s));
    doc.radial_order = std::move(indices);
  }

  int tree_count = to_int(one("tree_count"));
  if (tree_count < 0) throw InputError("negative tree count");
  for (int t = 1; t <= tree_count; ++t) {
    PackingDocument::TreeRecord rec;
    auto meta = reader.expect("tree " + std::to_string(t) + " case");
    // layout: <construction> start <s> removed (<tail> <head> | none)
    if (meta.size() < 4 || meta[1] != "start" || meta[3] != "removed") {
      throw InputError("bad tree metadata line");
    }
    rec.construction = meta[0];
    rec.start = to_int(meta[2]);
    if (meta.size() == 5 && meta[4] == "none") {
      // no removed edge
    } else if (meta.size() == 6) {
      rec.removed = DirectedEdge{to_int(meta[4]), to_int(meta[5])};
    } else {
      throw InputError("bad removed-edge field");
    }
    auto edges = reader.expect("tree " + std::to_string(t) + " edges");
    if (edges.size() % 2 != 0) throw InputError("odd edge index count");
    for (std::size_t i = 0; i < edges.size(); i += 2) {
      rec.edges.push_back(DirectedEdge{to_int(edges[i]), to_int(edges[i + 1])});
    }
    doc.trees.push_back(std::move(rec));
  }

  auto verified = one("verification");
  if (verified == "full") doc.verified = true;
  else if (verified == "skipped") doc.verified = false;
  else throw InputError("bad verification field");
  return doc;
}

PackingDocument parse_packing_document_at(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_packing_document(in);
}

}  // namespace treepack
