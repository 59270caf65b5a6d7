#ifndef MFN_ITERATE_HPP
#define MFN_ITERATE_HPP

#include <cstdint>

#include "mfn/core.hpp"

namespace mfn {

// n-fold iteration of the union image, per vertex: row v of the result is
// the set reachable into v by walks of exactly |n| edges (inverted walks
// for negative n).  Computed by repeated squaring of the relation.
MultiFunction power_image(const MultiFunction& f, std::int64_t n);

// Set-level power: union of power_image rows over the members of A.
VertexSet power_image_set(const MultiFunction& f, std::int64_t n,
                          const VertexSet& a);

// n-fold iteration of the complete preimage; equals the image power of
// the inverse.
MultiFunction power_preimage(const MultiFunction& f, std::int64_t n);

// Union of all powers whose exponent is a multiple of m, the n = 0 term
// included, so the result is reflexive.  Equivalently the
// reflexive-transitive closure of the m-th power; m must be nonzero and a
// negative m closes the inverse instead.
MultiFunction closure(const MultiFunction& f, std::int64_t m);

// Pointwise containment of rows.
bool is_subset(const MultiFunction& f, const MultiFunction& g);

}  // namespace mfn

#endif  // MFN_ITERATE_HPP
