#include "mfn/iterate.hpp"

#include <vector>

#include "mfn/setops.hpp"

namespace mfn {

namespace {

// Relation composition: row v of the result collects G over the members
// of F(v), so compose(F, G) is the "apply F first, then G" power.
MultiFunction compose(const MultiFunction& f, const MultiFunction& g) {
  MultiFunction out(f.universe());
  for (Vertex v = 0; v < f.universe().size(); ++v) {
    VertexSet row(f.universe());
    f(v).for_each([&](Vertex a) { row |= g(a); });
    out.set_row(v, std::move(row));
  }
  return out;
}

}  // namespace

MultiFunction power_image(const MultiFunction& f, std::int64_t n) {
  if (n < 0) return power_image(invert(f), -n);
  MultiFunction result = MultiFunction::identity(f.universe());
  MultiFunction base = f;
  std::uint64_t e = static_cast<std::uint64_t>(n);
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

VertexSet power_image_set(const MultiFunction& f, std::int64_t n,
                          const VertexSet& a) {
  if (f.universe() != a.universe())
    throw universe_mismatch("set and multifunction over different universes");
  return image_union(power_image(f, n), a);
}

MultiFunction power_preimage(const MultiFunction& f, std::int64_t n) {
  return power_image(invert(f), n);
}

MultiFunction closure(const MultiFunction& f, std::int64_t m) {
  if (m == 0) throw bad_argument("closure modulus must be nonzero");
  if (m < 0) return closure(invert(f), -m);

  const MultiFunction step = power_image(f, m);
  const std::uint32_t n = f.universe().size();
  MultiFunction out(f.universe());
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet reached(f.universe());
    reached.insert(v);
    queue.clear();
    queue.push_back(v);
    while (!queue.empty()) {
      const Vertex a = queue.back();
      queue.pop_back();
      step(a).for_each([&](Vertex u) {
        if (!reached.contains(u)) {
          reached.insert(u);
          queue.push_back(u);
        }
      });
    }
    out.set_row(v, std::move(reached));
  }
  return out;
}

bool is_subset(const MultiFunction& f, const MultiFunction& g) {
  if (f.universe() != g.universe())
    throw universe_mismatch("comparing multifunctions over different universes");
  for (Vertex v = 0; v < f.universe().size(); ++v)
    if (!f(v).subset_of(g(v))) return false;
  return true;
}

}  // namespace mfn
