#ifndef MFN_FILTERS_HPP
#define MFN_FILTERS_HPP

#include <cstdint>
#include <vector>

#include "mfn/core.hpp"

namespace mfn {

// An explicitly enumerated collection of vertex sets over one universe,
// kept deduplicated in canonical order (cardinality, then lexicographic)
// so equality is structural.
class SetFamily {
 public:
  explicit SetFamily(VertexUniverse universe);
  SetFamily(VertexUniverse universe, std::vector<VertexSet> members);

  const VertexUniverse& universe() const { return universe_; }
  const std::vector<VertexSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const VertexSet& s) const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }
  friend bool operator!=(const SetFamily& a, const SetFamily& b) {
    return !(a == b);
  }

 private:
  VertexUniverse universe_;
  std::vector<VertexSet> members_;
};

// Cardinality threshold: a concrete finite bound, or the marker that the
// condition always holds on a finite universe.
class CardBound {
 public:
  static CardBound finite(std::uint32_t k) { return CardBound(k); }
  static CardBound unbounded() { return CardBound(); }

  bool is_unbounded() const { return unbounded_; }
  // Whether a set of the given cardinality falls below the bound.
  bool admits(std::size_t cardinality) const {
    return unbounded_ || cardinality < bound_;
  }

 private:
  CardBound() : unbounded_(true), bound_(0) {}
  explicit CardBound(std::uint32_t k) : unbounded_(false), bound_(k) {}

  bool unbounded_;
  std::uint32_t bound_;
};

// Membership-defined families enumerate the full powerset, so the
// universe size is capped.
inline constexpr std::uint32_t kFamilyUniverseCap = 16;

// Sets whose complete preimage stays inside A; an ideal.
SetFamily neigh_family(const MultiFunction& f, const VertexSet& a,
                       std::uint32_t cap = kFamilyUniverseCap);

// Sets whose small preimage covers A; a filter, dual to the above.
SetFamily wall_family(const MultiFunction& f, const VertexSet& a,
                      std::uint32_t cap = kFamilyUniverseCap);

// Sets with fewer than k neighbors.
SetFamily neigh_card(const MultiFunction& f, CardBound k,
                     std::uint32_t cap = kFamilyUniverseCap);

// Sets whose small preimage misses fewer than k vertices.
SetFamily wall_card(const MultiFunction& f, CardBound k,
                    std::uint32_t cap = kFamilyUniverseCap);

// Sets with no neighbors at all: neigh_family at the empty set.
SetFamily isol_family(const MultiFunction& f,
                      std::uint32_t cap = kFamilyUniverseCap);

// Sets every row fits into: wall_family at the full set.
SetFamily build_family(const MultiFunction& f,
                       std::uint32_t cap = kFamilyUniverseCap);

// Complement every member; an involution exchanging ideals and filters.
SetFamily dual(const SetFamily& fam);

// Nonempty, downward closed, closed under pairwise union.
bool is_ideal(const SetFamily& fam);

// Nonempty, upward closed, closed under pairwise intersection.
bool is_filter(const SetFamily& fam);

// A filter that does not contain the empty set.
bool is_proper_filter(const SetFamily& fam);

// Nonempty, closed under pairwise intersection, and upward closed along
// the small preimage: a member inside preimage_small(F, W) forces W in.
bool is_fplus_filter(const MultiFunction& f, const SetFamily& fam);

// Sets U such that some nonempty finite intersection of generators is
// contained in preimage_small(F, U).  With no generators the result is
// empty (the empty intersection is not taken).
SetFamily generated_filter(const MultiFunction& f, const SetFamily& gens,
                           std::uint32_t cap = kFamilyUniverseCap);

// Vertices whose whole row is exactly {v}.
VertexSet leaf_set(const MultiFunction& f, Vertex v);

// Whether the family has members of arbitrarily small diameter; on the
// integer-valued walk metric this means a member of diameter zero.
// Requires a simple-graph multifunction and a nonempty family.
bool is_cauchy(const MultiFunction& f, const SetFamily& fam);

}  // namespace mfn

#endif  // MFN_FILTERS_HPP
