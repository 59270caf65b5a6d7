#ifndef MFN_STRUCTURE_HPP
#define MFN_STRUCTURE_HPP

#include <utility>
#include <vector>

#include "mfn/core.hpp"

namespace mfn {

enum class GraphKind {
  simple,
  undirected,
  everywhereloop_undirected,
  digraph,
  simple_digraph,
  everywhereloop_digraph,
  orgraph,
};

// An explicit edge list over one universe.  Undirected lists store each
// unordered edge once with the smaller endpoint first; loops are (v, v).
struct EdgeList {
  VertexUniverse universe;
  bool directed = false;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

// One chosen endpoint for every unordered pair of distinct vertices,
// materialized as a table.
class Selection {
 public:
  // Chooses the larger endpoint of every pair.
  static Selection max_picker(const VertexUniverse& universe);
  // Chooses the smaller endpoint of every pair.
  static Selection min_picker(const VertexUniverse& universe);
  // Arbitrary table: entry for the pair (u, v), u < v, listed in
  // lexicographic pair order; every entry must name one of its endpoints.
  static Selection from_table(const VertexUniverse& universe,
                              const std::vector<Vertex>& table);

  const VertexUniverse& universe() const { return universe_; }
  // The chosen endpoint of {u, v}; u and v must be distinct.
  Vertex choose(Vertex u, Vertex v) const;

 private:
  explicit Selection(VertexUniverse universe);

  VertexUniverse universe_;
  std::vector<Vertex> chosen_;  // indexed by pair rank of (min, max)
};

// Neighborhood multifunction of an edge list after validating the kind
// invariants.  Undirected kinds relate both endpoints of every edge;
// directed kinds take row v from the edges entering v, so the edge list
// is exactly the picture of the result.
MultiFunction from_graph(const EdgeList& g, GraphKind kind);

// Picture of F as an edge list.  With directed = false the relation must
// be undirected and edges come out unordered.
EdgeList to_graph(const MultiFunction& f, bool directed);

// Row v collects the vertices u whose pair {u, v} selects v.
MultiFunction multiselection(const Selection& s);

// Intersection of F with the multiselection: keeps one direction of every
// undirected edge.
MultiFunction orient(const MultiFunction& f, const Selection& s);

// Whether the product of all rows is nonempty; equals strictness.
bool has_selection(const MultiFunction& f);

}  // namespace mfn

#endif  // MFN_STRUCTURE_HPP
