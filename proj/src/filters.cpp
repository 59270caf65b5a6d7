#include "mfn/filters.hpp"

#include <algorithm>
#include <bit>

#include "mfn/analysis.hpp"
#include "mfn/setops.hpp"

namespace mfn {

namespace {

void check_cap(const MultiFunction& f, std::uint32_t cap) {
  if (f.universe().size() > cap)
    throw cap_exceeded("universe too large for explicit family enumeration");
}

VertexSet set_from_mask(const VertexUniverse& universe, std::uint64_t mask) {
  VertexSet s(universe);
  while (mask) {
    const int bit = std::countr_zero(mask);
    s.insert(static_cast<Vertex>(bit));
    mask &= mask - 1;
  }
  return s;
}

// Enumerate the powerset and keep the subsets the predicate accepts.
template <typename Pred>
SetFamily enumerate_family(const MultiFunction& f, std::uint32_t cap,
                           Pred&& accept) {
  check_cap(f, cap);
  const std::uint64_t limit = std::uint64_t{1} << f.universe().size();
  std::vector<VertexSet> members;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    VertexSet u = set_from_mask(f.universe(), mask);
    if (accept(u)) members.push_back(std::move(u));
  }
  return SetFamily(f.universe(), std::move(members));
}

void require_nonempty(const SetFamily& fam) {
  if (fam.empty()) throw empty_argument("family axioms need a nonempty family");
}

}  // namespace

SetFamily::SetFamily(VertexUniverse universe) : universe_(universe) {}

SetFamily::SetFamily(VertexUniverse universe, std::vector<VertexSet> members)
    : universe_(universe), members_(std::move(members)) {
  for (const VertexSet& s : members_)
    if (s.universe() != universe_)
      throw universe_mismatch("family member from a different universe");
  std::sort(members_.begin(), members_.end(), VertexSet::family_less);
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool SetFamily::contains(const VertexSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s,
                            VertexSet::family_less);
}

SetFamily neigh_family(const MultiFunction& f, const VertexSet& a,
                       std::uint32_t cap) {
  if (f.universe() != a.universe())
    throw universe_mismatch("set and multifunction over different universes");
  return enumerate_family(f, cap, [&](const VertexSet& u) {
    return preimage_complete(f, u).subset_of(a);
  });
}

SetFamily wall_family(const MultiFunction& f, const VertexSet& a,
                      std::uint32_t cap) {
  if (f.universe() != a.universe())
    throw universe_mismatch("set and multifunction over different universes");
  return enumerate_family(f, cap, [&](const VertexSet& u) {
    return a.subset_of(preimage_small(f, u));
  });
}

SetFamily neigh_card(const MultiFunction& f, CardBound k, std::uint32_t cap) {
  return enumerate_family(f, cap, [&](const VertexSet& u) {
    return k.admits(preimage_complete(f, u).count());
  });
}

SetFamily wall_card(const MultiFunction& f, CardBound k, std::uint32_t cap) {
  return enumerate_family(f, cap, [&](const VertexSet& u) {
    return k.admits(preimage_small(f, u).complement().count());
  });
}

SetFamily isol_family(const MultiFunction& f, std::uint32_t cap) {
  return neigh_family(f, VertexSet(f.universe()), cap);
}

SetFamily build_family(const MultiFunction& f, std::uint32_t cap) {
  return wall_family(f, VertexSet::full(f.universe()), cap);
}

SetFamily dual(const SetFamily& fam) {
  std::vector<VertexSet> members;
  members.reserve(fam.size());
  for (const VertexSet& s : fam.members()) members.push_back(s.complement());
  return SetFamily(fam.universe(), std::move(members));
}

bool is_ideal(const SetFamily& fam) {
  require_nonempty(fam);
  // Downward closure is generated by single-element removals.
  for (const VertexSet& s : fam.members())
    for (Vertex v : s.elements()) {
      VertexSet smaller = s;
      smaller.erase(v);
      if (!fam.contains(smaller)) return false;
    }
  for (const VertexSet& a : fam.members())
    for (const VertexSet& b : fam.members())
      if (!fam.contains(a | b)) return false;
  return true;
}

bool is_filter(const SetFamily& fam) {
  require_nonempty(fam);
  for (const VertexSet& s : fam.members())
    for (Vertex v : s.complement().elements()) {
      VertexSet larger = s;
      larger.insert(v);
      if (!fam.contains(larger)) return false;
    }
  for (const VertexSet& a : fam.members())
    for (const VertexSet& b : fam.members())
      if (!fam.contains(a & b)) return false;
  return true;
}

bool is_proper_filter(const SetFamily& fam) {
  return is_filter(fam) && !fam.contains(VertexSet(fam.universe()));
}

bool is_fplus_filter(const MultiFunction& f, const SetFamily& fam) {
  if (f.universe() != fam.universe())
    throw universe_mismatch("family and multifunction over different universes");
  require_nonempty(fam);
  for (const VertexSet& a : fam.members())
    for (const VertexSet& b : fam.members())
      if (!fam.contains(a & b)) return false;

  check_cap(f, kFamilyUniverseCap);
  const std::uint64_t limit = std::uint64_t{1} << f.universe().size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const VertexSet w = set_from_mask(f.universe(), mask);
    if (fam.contains(w)) continue;
    const VertexSet small = preimage_small(f, w);
    for (const VertexSet& u : fam.members())
      if (u.subset_of(small)) return false;
  }
  return true;
}

SetFamily generated_filter(const MultiFunction& f, const SetFamily& gens,
                           std::uint32_t cap) {
  if (f.universe() != gens.universe())
    throw universe_mismatch("family and multifunction over different universes");
  // Close the generators under pairwise intersection; the lattice is finite.
  std::vector<VertexSet> closed = gens.members();
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<VertexSet> found;
    for (std::size_t i = 0; i < closed.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        VertexSet meet = closed[i] & closed[j];
        if (!std::binary_search(closed.begin(), closed.end(), meet,
                                VertexSet::family_less))
          found.push_back(std::move(meet));
      }
    if (!found.empty()) {
      closed.insert(closed.end(), found.begin(), found.end());
      std::sort(closed.begin(), closed.end(), VertexSet::family_less);
      closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
      grew = true;
    }
  }
  return enumerate_family(f, cap, [&](const VertexSet& u) {
    const VertexSet small = preimage_small(f, u);
    for (const VertexSet& c : closed)
      if (c.subset_of(small)) return true;
    return false;
  });
}

VertexSet leaf_set(const MultiFunction& f, Vertex v) {
  if (!f.universe().contains(v)) throw bad_argument("vertex outside universe");
  VertexSet target(f.universe());
  target.insert(v);
  VertexSet out(f.universe());
  for (Vertex w = 0; w < f.universe().size(); ++w)
    if (f(w) == target) out.insert(w);
  return out;
}

bool is_cauchy(const MultiFunction& f, const SetFamily& fam) {
  if (f.universe() != fam.universe())
    throw universe_mismatch("family and multifunction over different universes");
  if (!classify(f).simple_graph)
    throw precondition_violation(
        "operation requires a simple-graph multifunction");
  require_nonempty(fam);
  for (const VertexSet& m : fam.members()) {
    const Distance d = diameter(f, m);
    if (d && *d == 0) return true;
  }
  return false;
}

}  // namespace mfn
