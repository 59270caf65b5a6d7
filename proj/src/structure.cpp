#include "mfn/structure.hpp"

#include <algorithm>
#include <set>

namespace mfn {

namespace {

bool is_directed_kind(GraphKind kind) {
  switch (kind) {
    case GraphKind::simple:
    case GraphKind::undirected:
    case GraphKind::everywhereloop_undirected:
      return false;
    case GraphKind::digraph:
    case GraphKind::simple_digraph:
    case GraphKind::everywhereloop_digraph:
    case GraphKind::orgraph:
      return true;
  }
  throw bad_argument("unknown graph kind");
}

std::size_t pair_rank(Vertex u, Vertex v) {
  // u < v required; rank within the lexicographically ordered pairs.
  return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
}

void validate(const EdgeList& g, GraphKind kind) {
  if (is_directed_kind(kind) != g.directed)
    throw precondition_violation(
        "edge list direction does not match the requested graph kind");
  for (auto [a, b] : g.edges)
    if (!g.universe.contains(a) || !g.universe.contains(b))
      throw precondition_violation("edge endpoint outside universe");

  if (kind == GraphKind::simple || kind == GraphKind::simple_digraph ||
      kind == GraphKind::orgraph) {
    for (auto [a, b] : g.edges)
      if (a == b)
        throw precondition_violation("loop edge in a loopless graph kind");
  }
  if (kind == GraphKind::simple) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [a, b] : g.edges)
      if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
        throw precondition_violation("duplicate edge in a simple graph");
  }
  if (kind == GraphKind::orgraph) {
    std::set<std::pair<Vertex, Vertex>> seen(g.edges.begin(), g.edges.end());
    for (auto [a, b] : g.edges)
      if (seen.count({b, a}))
        throw precondition_violation("opposite edge pair in an orgraph");
  }
  if (kind == GraphKind::everywhereloop_undirected ||
      kind == GraphKind::everywhereloop_digraph) {
    std::vector<bool> loop(g.universe.size(), false);
    for (auto [a, b] : g.edges)
      if (a == b) loop[a] = true;
    for (bool has : loop)
      if (!has)
        throw precondition_violation(
            "everywhereloop graph kind requires a loop at every vertex");
  }
}

}  // namespace

MultiFunction from_graph(const EdgeList& g, GraphKind kind) {
  validate(g, kind);
  MultiFunction f(g.universe);
  if (g.directed) {
    for (auto [a, b] : g.edges) f.add(b, a);
  } else {
    for (auto [a, b] : g.edges) {
      f.add(a, b);
      f.add(b, a);
    }
  }
  return f;
}

EdgeList to_graph(const MultiFunction& f, bool directed) {
  EdgeList out{f.universe(), directed, {}};
  if (directed) {
    for (Vertex v = 0; v < f.universe().size(); ++v)
      for (Vertex u : f(v).elements()) out.edges.emplace_back(u, v);
  } else {
    if (!classify(f).undirected)
      throw precondition_violation(
          "undirected edge extraction needs an undirected multifunction");
    for (Vertex v = 0; v < f.universe().size(); ++v)
      for (Vertex u : f(v).elements())
        if (u <= v) out.edges.emplace_back(u, v);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Selection::Selection(VertexUniverse universe) : universe_(universe) {
  const std::size_t n = universe.size();
  chosen_.resize(n * (n - 1) / 2, 0);
}

Selection Selection::max_picker(const VertexUniverse& universe) {
  Selection s(universe);
  for (Vertex v = 1; v < universe.size(); ++v)
    for (Vertex u = 0; u < v; ++u) s.chosen_[pair_rank(u, v)] = v;
  return s;
}

Selection Selection::min_picker(const VertexUniverse& universe) {
  Selection s(universe);
  for (Vertex v = 1; v < universe.size(); ++v)
    for (Vertex u = 0; u < v; ++u) s.chosen_[pair_rank(u, v)] = u;
  return s;
}

Selection Selection::from_table(const VertexUniverse& universe,
                                const std::vector<Vertex>& table) {
  Selection s(universe);
  if (table.size() != s.chosen_.size())
    throw precondition_violation(
        "selection table does not cover every vertex pair");
  std::size_t i = 0;
  for (Vertex v = 1; v < universe.size(); ++v)
    for (Vertex u = 0; u < v; ++u, ++i) {
      if (table[i] != u && table[i] != v)
        throw precondition_violation(
            "selection table entry is not an endpoint of its pair");
      s.chosen_[pair_rank(u, v)] = table[i];
    }
  return s;
}

Vertex Selection::choose(Vertex u, Vertex v) const {
  if (!universe_.contains(u) || !universe_.contains(v))
    throw bad_argument("vertex outside universe");
  if (u == v) throw bad_argument("selection is defined on distinct pairs");
  return chosen_[pair_rank(std::min(u, v), std::max(u, v))];
}

MultiFunction multiselection(const Selection& s) {
  const VertexUniverse& universe = s.universe();
  MultiFunction f(universe);
  for (Vertex v = 0; v < universe.size(); ++v)
    for (Vertex u = 0; u < universe.size(); ++u)
      if (u != v && s.choose(u, v) == v) f.add(v, u);
  return f;
}

MultiFunction orient(const MultiFunction& f, const Selection& s) {
  if (f.universe() != s.universe())
    throw universe_mismatch("selection over a different universe");
  return combine(f, multiselection(s), SetOp::intersection);
}

bool has_selection(const MultiFunction& f) { return classify(f).strict; }

}  // namespace mfn
