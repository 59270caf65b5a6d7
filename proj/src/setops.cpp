#include "mfn/setops.hpp"

namespace mfn {

namespace {

void check_universe(const MultiFunction& f, const VertexSet& s) {
  if (f.universe() != s.universe())
    throw universe_mismatch("set and multifunction over different universes");
}

}  // namespace

VertexSet image_union(const MultiFunction& f, const VertexSet& a) {
  check_universe(f, a);
  VertexSet out(f.universe());
  a.for_each([&](Vertex v) { out |= f(v); });
  return out;
}

VertexSet image_intersect(const MultiFunction& f, const VertexSet& a) {
  check_universe(f, a);
  if (a.empty())
    throw empty_argument("intersection image of the empty set is undefined");
  VertexSet out = VertexSet::full(f.universe());
  a.for_each([&](Vertex v) { out &= f(v); });
  return out;
}

VertexSet preimage_complete(const MultiFunction& f, const VertexSet& b) {
  check_universe(f, b);
  VertexSet out(f.universe());
  for (Vertex v = 0; v < f.universe().size(); ++v)
    if (f(v).intersects(b)) out.insert(v);
  return out;
}

VertexSet preimage_small(const MultiFunction& f, const VertexSet& b) {
  check_universe(f, b);
  VertexSet out(f.universe());
  for (Vertex v = 0; v < f.universe().size(); ++v)
    if (f(v).subset_of(b)) out.insert(v);
  return out;
}

VertexSet boundary(const MultiFunction& f, const VertexSet& w) {
  check_universe(f, w);
  return w & preimage_complete(f, w.complement());
}

}  // namespace mfn
