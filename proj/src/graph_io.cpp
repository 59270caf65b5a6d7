#include "mfn/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace mfn {

namespace {

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

MultiFunction ParsedGraph::to_multifunction() const {
  return from_graph(edges, edges.directed ? GraphKind::digraph
                                          : GraphKind::undirected);
}

ParsedGraph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;

  std::uint32_t count = 0;
  bool directed = false;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream ss(line);
    std::string tag, direction;
    long long declared = 0;
    if (!(ss >> tag >> declared >> direction) || tag != "n")
      throw parse_error("expected header 'n <count> <directed|undirected>'",
                        lineno);
    std::string extra;
    if (ss >> extra) throw parse_error("trailing text after header", lineno);
    if (declared <= 0) throw parse_error("vertex count must be positive", lineno);
    if (direction == "directed")
      directed = true;
    else if (direction == "undirected")
      directed = false;
    else
      throw parse_error("direction must be 'directed' or 'undirected'", lineno);
    count = static_cast<std::uint32_t>(declared);
    saw_header = true;
    break;
  }
  if (!saw_header) throw parse_error("missing header line", lineno + 1);

  ParsedGraph out{EdgeList{VertexUniverse(count), directed, {}}};
  std::set<std::pair<Vertex, Vertex>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream ss(line);
    long long a = 0, b = 0;
    if (!(ss >> a >> b)) throw parse_error("expected edge 'u v'", lineno);
    std::string extra;
    if (ss >> extra) throw parse_error("trailing text after edge", lineno);
    if (a < 0 || b < 0 || a >= count || b >= count)
      throw parse_error("vertex index out of range", lineno);
    Vertex u = static_cast<Vertex>(a);
    Vertex v = static_cast<Vertex>(b);
    if (!directed && u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw parse_error("duplicate edge", lineno);
    out.edges.edges.emplace_back(u, v);
  }
  return out;
}

ParsedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open graph file: " + path, 0);
  return parse_graph(in);
}

}  // namespace mfn
