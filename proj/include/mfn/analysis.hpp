#ifndef MFN_ANALYSIS_HPP
#define MFN_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mfn/core.hpp"

namespace mfn {

// A walk-count distance; disengaged means unreachable.
using Distance = std::optional<std::uint32_t>;

struct Bipartition {
  VertexSet side_u;
  VertexSet side_w;
};

// All-pairs least walk lengths.
class DistanceMatrix {
 public:
  DistanceMatrix(VertexUniverse universe, std::vector<Distance> entries);

  const VertexUniverse& universe() const { return universe_; }
  Distance at(Vertex u, Vertex w) const;

 private:
  VertexUniverse universe_;
  std::vector<Distance> entries_;  // row-major, |V| x |V|
};

// No member of U lies in F of another member (ordered pairs, including
// the member itself paired with itself).
bool is_independent(const MultiFunction& f, const VertexSet& u);

// Every ordered pair of members is related, the diagonal included, so a
// loopless multifunction has no nonempty clique.
bool is_clique(const MultiFunction& f, const VertexSet& u);

// Every vertex reaches every vertex by some walk; the length-zero walk
// counts, so a single-vertex universe is always connected.
bool is_connected(const MultiFunction& f);

// Equivalence classes of mutual reachability, ordered by smallest member.
// Requires an undirected multifunction.
std::vector<VertexSet> components(const MultiFunction& f);

// Two independent sides covering the universe, or absent when no such
// split exists.  Per component, the side of the smallest vertex is its
// even-walk reachability class.  Requires a strict simple-graph
// multifunction.
std::optional<Bipartition> bipartition(const MultiFunction& f);

// Decides bipartiteness by checking that the even-power closure splits
// every component.  Requires a strict simple-graph multifunction.
bool is_bipartite_even_iteration(const MultiFunction& f);

// Whether some odd-length closed walk passes through v.  Checking odd
// lengths up to 3|V| suffices: a reachable odd cycle has length at most
// |V| and is reached by a walk of at most |V| edges, which closes into an
// odd walk of at most 3|V| edges.  Requires an undirected multifunction.
bool has_odd_closed_walk(const MultiFunction& f, Vertex v);

// Least-walk-length metric; entries across components are unreachable.
// Requires a simple-graph multifunction.
DistanceMatrix metric(const MultiFunction& f);

// Largest pairwise distance within M; empty and singleton sets have
// diameter zero.  Requires a simple-graph multifunction.
Distance diameter(const MultiFunction& f, const VertexSet& m);

}  // namespace mfn

#endif  // MFN_ANALYSIS_HPP
