#ifndef MFN_SETOPS_HPP
#define MFN_SETOPS_HPP

#include "mfn/core.hpp"

namespace mfn {

// Union of F over the members of A.
VertexSet image_union(const MultiFunction& f, const VertexSet& a);

// Intersection of F over the members of A; A must be nonempty.
VertexSet image_intersect(const MultiFunction& f, const VertexSet& a);

// Vertices whose row meets B.
VertexSet preimage_complete(const MultiFunction& f, const VertexSet& b);

// Vertices whose row is contained in B.
VertexSet preimage_small(const MultiFunction& f, const VertexSet& b);

// Members of W with a neighbor outside W.
VertexSet boundary(const MultiFunction& f, const VertexSet& w);

}  // namespace mfn

#endif  // MFN_SETOPS_HPP
