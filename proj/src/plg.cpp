#include "facehit/plg.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "facehit/errors.hpp"

namespace facehit {

namespace {

int parse_int(const std::string& tok, const std::string& context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected an integer in " + context + ", got '" + tok + "'");
  return value;
}

DartRef parse_dart_token(const std::string& tok, const std::string& context) {
  if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
    throw ParseError("expected a dart token like 3+ or 3- in " + context + ", got '" +
                     tok + "'");
  DartRef r;
  r.positive = tok.back() == '+';
  r.edge = parse_int(tok.substr(0, tok.size() - 1), context);
  return r;
}

std::string dart_token(const DartRef& r) {
  return std::to_string(r.edge) + (r.positive ? "+" : "-");
}

// Rotation lines are cyclic; canonical form starts at the smallest token
// (edge id ascending, + before -).
std::vector<DartRef> canonical_rotation(const std::vector<DartRef>& rot) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < rot.size(); ++i) {
    auto key = [](const DartRef& r) { return std::pair<EdgeId, int>(r.edge, r.positive ? 0 : 1); };
    if (key(rot[i]) < key(rot[best])) best = i;
  }
  std::vector<DartRef> out;
  out.reserve(rot.size());
  for (std::size_t i = 0; i < rot.size(); ++i) out.push_back(rot[(best + i) % rot.size()]);
  return out;
}

}  // namespace

PlgDocument parse_plg(const std::string& text) {
  PlgDocument doc;
  std::set<VertexId> seen_vertices;
  std::set<EdgeId> seen_edges;
  std::set<VertexId> seen_rotations;
  bool saw_header = false;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);

    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "plg" || toks[1] != "1")
        throw ParseError("expected header 'plg 1' on " + where);
      saw_header = true;
      continue;
    }

    const std::string& kw = toks[0];
    if (kw == "v") {
      if (toks.size() != 2) throw ParseError("'v' takes one id on " + where);
      VertexId v = parse_int(toks[1], where);
      if (!seen_vertices.insert(v).second)
        throw ParseError("duplicate vertex " + std::to_string(v) + " on " + where);
      doc.data.vertices.push_back(v);
    } else if (kw == "e") {
      if (toks.size() != 4) throw ParseError("'e' takes id, u, v on " + where);
      Edge e;
      e.id = parse_int(toks[1], where);
      e.u = parse_int(toks[2], where);
      e.v = parse_int(toks[3], where);
      if (!seen_edges.insert(e.id).second)
        throw ParseError("duplicate edge id " + std::to_string(e.id) + " on " + where);
      doc.data.edges.push_back(e);
    } else if (kw == "rot") {
      if (toks.size() < 2) throw ParseError("'rot' needs a vertex id on " + where);
      VertexId v = parse_int(toks[1], where);
      if (!seen_rotations.insert(v).second)
        throw ParseError("second rotation for vertex " + std::to_string(v) + " on " + where);
      std::vector<DartRef> rot;
      for (std::size_t i = 2; i < toks.size(); ++i)
        rot.push_back(parse_dart_token(toks[i], where));
      doc.data.rotations[v] = std::move(rot);
    } else if (kw == "anchor") {
      if (toks.size() < 3) throw ParseError("'anchor' is incomplete on " + where);
      int c = parse_int(toks[1], where);
      if (doc.data.anchors.count(c))
        throw ParseError("second anchor for component " + std::to_string(c) + " on " + where);
      AnchorSpec a;
      if (toks[2] == "root") {
        if (toks.size() != 3) throw ParseError("'anchor ... root' takes no more on " + where);
      } else if (toks[2] == "in") {
        if (toks.size() != 5)
          throw ParseError("'anchor <c> in <c> <face>' expected on " + where);
        a.root = false;
        a.parent_component = parse_int(toks[3], where);
        a.parent_local_face = parse_int(toks[4], where);
      } else {
        throw ParseError("anchor must be 'root' or 'in' on " + where);
      }
      doc.data.anchors[c] = a;
    } else if (kw == "outer") {
      if (toks.size() != 3) throw ParseError("'outer' takes component, face on " + where);
      int c = parse_int(toks[1], where);
      if (doc.data.outer_faces.count(c))
        throw ParseError("second outer face for component " + std::to_string(c) + " on " +
                         where);
      doc.data.outer_faces[c] = parse_int(toks[2], where);
    } else if (kw == "kind") {
      if (toks.size() != 3) throw ParseError("'kind' takes edge id, true|dummy on " + where);
      EdgeId e = parse_int(toks[1], where);
      if (doc.kinds.count(e))
        throw ParseError("second kind for edge " + std::to_string(e) + " on " + where);
      if (toks[2] == "true")
        doc.kinds[e] = EdgeKind::true_edge;
      else if (toks[2] == "dummy")
        doc.kinds[e] = EdgeKind::dummy_edge;
      else
        throw ParseError("kind must be 'true' or 'dummy' on " + where);
    } else {
      throw ParseError("unknown directive '" + kw + "' on " + where);
    }
  }
  if (!saw_header) throw ParseError("empty input: missing 'plg 1' header");
  for (const auto& [e, kind] : doc.kinds)
    if (!seen_edges.count(e))
      throw ParseError("kind for unknown edge " + std::to_string(e));
  return doc;
}

std::string write_plg(const GraphData& data) { return write_plg(data, {}); }

std::string write_plg(const GraphData& data, const std::map<EdgeId, EdgeKind>& kinds) {
  std::vector<VertexId> verts = data.vertices;
  std::sort(verts.begin(), verts.end());
  std::vector<Edge> edges = data.edges;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });

  std::ostringstream os;
  os << "plg 1\n";
  for (VertexId v : verts) os << "v " << v << "\n";
  for (const Edge& e : edges) os << "e " << e.id << " " << e.u << " " << e.v << "\n";
  for (VertexId v : verts) {
    auto it = data.rotations.find(v);
    if (it == data.rotations.end() || it->second.empty()) continue;
    os << "rot " << v;
    for (const DartRef& r : canonical_rotation(it->second)) os << " " << dart_token(r);
    os << "\n";
  }
  for (const auto& [c, a] : data.anchors) {
    if (a.root)
      os << "anchor " << c << " root\n";
    else
      os << "anchor " << c << " in " << a.parent_component << " " << a.parent_local_face
         << "\n";
  }
  for (const auto& [c, lf] : data.outer_faces)
    if (lf != 0) os << "outer " << c << " " << lf << "\n";
  for (const auto& [e, kind] : kinds)
    os << "kind " << e << " " << (kind == EdgeKind::true_edge ? "true" : "dummy") << "\n";
  return os.str();
}

std::string write_dot(const GraphData& data, const std::map<VertexId, std::string>& vertex_color,
                      const std::map<EdgeId, EdgeKind>& kinds) {
  std::vector<VertexId> verts = data.vertices;
  std::sort(verts.begin(), verts.end());
  std::vector<Edge> edges = data.edges;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });

  std::ostringstream os;
  os << "graph plg {\n";
  os << "  node [shape=circle];\n";
  for (VertexId v : verts) {
    os << "  " << v;
    auto it = vertex_color.find(v);
    if (it != vertex_color.end())
      os << " [style=filled fillcolor=\"" << it->second << "\"]";
    os << ";\n";
  }
  for (const Edge& e : edges) {
    os << "  " << e.u << " -- " << e.v << " [label=\"" << e.id << "\"";
    auto it = kinds.find(e.id);
    if (it != kinds.end() && it->second == EdgeKind::dummy_edge) os << " style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace facehit
