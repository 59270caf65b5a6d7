#ifndef MFN_GRAPH_IO_HPP
#define MFN_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "mfn/structure.hpp"

namespace mfn {

// Text edge-list format:
//   # comment lines and blank lines are skipped
//   n <count> <directed|undirected>
//   u v          one edge per line, 0 <= u,v < count
// Undirected files store each unordered edge at most once; repeating an
// edge (in either orientation) is an error.  Directed files reject exact
// duplicates.
struct ParsedGraph {
  EdgeList edges;

  MultiFunction to_multifunction() const;
};

ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_file(const std::string& path);

}  // namespace mfn

#endif  // MFN_GRAPH_IO_HPP
