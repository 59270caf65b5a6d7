#include "mfn/analysis.hpp"

#include <algorithm>

#include "mfn/iterate.hpp"
#include "mfn/setops.hpp"

namespace mfn {

namespace {

void require_undirected(const MultiFunction& f) {
  if (!classify(f).undirected)
    throw precondition_violation("operation requires an undirected multifunction");
}

void require_simple(const MultiFunction& f) {
  if (!classify(f).simple_graph)
    throw precondition_violation(
        "operation requires a simple-graph multifunction");
}

void require_strict_simple(const MultiFunction& f) {
  const PropertyReport rep = classify(f);
  if (!rep.simple_graph)
    throw precondition_violation(
        "operation requires a simple-graph multifunction");
  if (!rep.strict)
    throw precondition_violation("operation requires a strict multifunction");
}

// Distances from one source by breadth-first frontier expansion.
std::vector<Distance> bfs_distances(const MultiFunction& f, Vertex source) {
  std::vector<Distance> dist(f.universe().size());
  VertexSet seen(f.universe());
  seen.insert(source);
  dist[source] = 0;
  VertexSet frontier = seen;
  std::uint32_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    VertexSet next = image_union(f, frontier);
    next -= seen;
    for (Vertex v : next.elements()) dist[v] = depth;
    seen |= next;
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

DistanceMatrix::DistanceMatrix(VertexUniverse universe,
                               std::vector<Distance> entries)
    : universe_(universe), entries_(std::move(entries)) {
  const std::size_t n = universe_.size();
  if (entries_.size() != n * n)
    throw bad_argument("distance matrix entry count mismatch");
}

Distance DistanceMatrix::at(Vertex u, Vertex w) const {
  if (!universe_.contains(u) || !universe_.contains(w))
    throw bad_argument("vertex outside universe");
  return entries_[static_cast<std::size_t>(u) * universe_.size() + w];
}

bool is_independent(const MultiFunction& f, const VertexSet& u) {
  if (f.universe() != u.universe())
    throw universe_mismatch("set and multifunction over different universes");
  return !u.intersects(preimage_complete(f, u));
}

bool is_clique(const MultiFunction& f, const VertexSet& u) {
  return is_independent(complement(f), u);
}

bool is_connected(const MultiFunction& f) {
  const MultiFunction reach = closure(f, 1);
  for (Vertex v = 0; v < f.universe().size(); ++v)
    if (!reach(v).is_full()) return false;
  return true;
}

std::vector<VertexSet> components(const MultiFunction& f) {
  require_undirected(f);
  const MultiFunction reach = closure(f, 1);
  std::vector<VertexSet> out;
  VertexSet assigned(f.universe());
  for (Vertex v = 0; v < f.universe().size(); ++v) {
    if (assigned.contains(v)) continue;
    out.push_back(reach(v));
    assigned |= reach(v);
  }
  return out;
}

std::optional<Bipartition> bipartition(const MultiFunction& f) {
  require_strict_simple(f);
  const MultiFunction even_reach = closure(f, 2);
  VertexSet side_u(f.universe());
  VertexSet side_w(f.universe());
  for (const VertexSet& comp : components(f)) {
    const VertexSet even_class = even_reach(comp.min());
    const VertexSet rest = comp - even_class;
    if (rest.empty()) return std::nullopt;
    side_u |= even_class;
    side_w |= rest;
  }
  if (!is_independent(f, side_u) || !is_independent(f, side_w))
    return std::nullopt;
  return Bipartition{side_u, side_w};
}

bool is_bipartite_even_iteration(const MultiFunction& f) {
  require_strict_simple(f);
  const MultiFunction even_reach = closure(f, 2);
  for (const VertexSet& comp : components(f))
    if (even_reach(comp.min()) == comp) return false;
  return true;
}

bool has_odd_closed_walk(const MultiFunction& f, Vertex v) {
  require_undirected(f);
  if (!f.universe().contains(v)) throw bad_argument("vertex outside universe");
  const std::uint32_t bound = 3 * f.universe().size();
  const MultiFunction square = power_image(f, 2);
  MultiFunction current = f;  // exponent 1
  for (std::uint32_t n = 1; n <= bound; n += 2) {
    if (current(v).contains(v)) return true;
    if (n + 2 <= bound) {
      MultiFunction next(f.universe());
      for (Vertex w = 0; w < f.universe().size(); ++w)
        next.set_row(w, image_union(square, current(w)));
      current = std::move(next);
    }
  }
  return false;
}

DistanceMatrix metric(const MultiFunction& f) {
  require_simple(f);
  const std::uint32_t n = f.universe().size();
  std::vector<Distance> entries(static_cast<std::size_t>(n) * n);
  for (Vertex u = 0; u < n; ++u) {
    const std::vector<Distance> row = bfs_distances(f, u);
    for (Vertex w = 0; w < n; ++w)
      entries[static_cast<std::size_t>(u) * n + w] = row[w];
  }
  return DistanceMatrix(f.universe(), std::move(entries));
}

Distance diameter(const MultiFunction& f, const VertexSet& m) {
  require_simple(f);
  if (f.universe() != m.universe())
    throw universe_mismatch("set and multifunction over different universes");
  const std::vector<Vertex> members = m.elements();
  if (members.size() <= 1) return 0;
  std::uint32_t sup = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::vector<Distance> row = bfs_distances(f, members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Distance d = row[members[j]];
      if (!d) return std::nullopt;
      sup = std::max(sup, *d);
    }
  }
  return sup;
}

}  // namespace mfn
