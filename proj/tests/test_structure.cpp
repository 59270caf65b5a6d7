#include <doctest.h>

#include <random>

#include "mfn/structure.hpp"
#include "test_helpers.hpp"

using namespace mfn;
using namespace mfn::testing;

TEST_CASE("from_graph on undirected kinds") {
  const VertexUniverse u(3);
  const EdgeList p3_edges{u, false, {{0, 1}, {1, 2}}};
  CHECK(from_graph(p3_edges, GraphKind::simple) == p3());

  const EdgeList loop{u, false, {{0, 0}}};
  CHECK_THROWS_AS(from_graph(loop, GraphKind::simple), precondition_violation);
  const MultiFunction with_loop = from_graph(loop, GraphKind::undirected);
  CHECK(with_loop(0) == set_of(u, {0}));

  const EdgeList dup{u, false, {{0, 1}, {1, 0}}};
  CHECK_THROWS_AS(from_graph(dup, GraphKind::simple), precondition_violation);

  EdgeList all_loops{u, false, {{0, 0}, {1, 1}, {2, 2}, {0, 1}}};
  CHECK(classify(from_graph(all_loops, GraphKind::everywhereloop_undirected))
            .everywhereloop);
  all_loops.edges.erase(all_loops.edges.begin());
  CHECK_THROWS_AS(
      from_graph(all_loops, GraphKind::everywhereloop_undirected),
      precondition_violation);
}

TEST_CASE("from_graph on directed kinds recovers the picture") {
  const VertexUniverse u(2);
  const EdgeList one{u, true, {{0, 1}}};
  const MultiFunction f = from_graph(one, GraphKind::simple_digraph);
  // The edge (0, 1) is the picture entry "0 lies in F(1)".
  CHECK(f(1) == set_of(u, {0}));
  CHECK(f(0).empty());
  CHECK(invert(f)(0) == set_of(u, {1}));

  CHECK_THROWS_AS(from_graph(EdgeList{u, true, {{1, 1}}}, GraphKind::orgraph),
                  precondition_violation);
  CHECK_THROWS_AS(
      from_graph(EdgeList{u, true, {{0, 1}, {1, 0}}}, GraphKind::orgraph),
      precondition_violation);
  CHECK_THROWS_AS(from_graph(one, GraphKind::simple), precondition_violation);
}

TEST_CASE("to_graph examples") {
  const EdgeList p3_edges = to_graph(p3(), false);
  CHECK(p3_edges.edges ==
        std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});

  CHECK(to_graph(MultiFunction{VertexUniverse(3)}, true).edges.empty());

  MultiFunction arrow{VertexUniverse(2)};
  arrow.add(0, 1);
  CHECK_THROWS_AS(to_graph(arrow, false), precondition_violation);
}

TEST_CASE("round trips") {
  SUBCASE("digraph round trip over every multifunction on up to 4 vertices") {
    for (std::uint32_t size = 1; size <= 4; ++size) {
      const std::uint64_t rows = std::uint64_t{1} << size;
      std::uint64_t total = 1;
      for (std::uint32_t i = 0; i < size; ++i) total *= rows;
      for (std::uint64_t code = 0; code < total; ++code) {
        MultiFunction f{VertexUniverse(size)};
        std::uint64_t rest = code;
        for (Vertex v = 0; v < size; ++v) {
          f.set_row(v, set_from_mask(f.universe(), rest % rows));
          rest /= rows;
        }
        CHECK(from_graph(to_graph(f, true), GraphKind::digraph) == f);
      }
    }
  }
  SUBCASE("simple graph round trip over every graph on 5 vertices") {
    for (std::uint64_t mask = 0; mask < (1u << pair_count(5)); ++mask) {
      const MultiFunction f = simple_graph_from_mask(5, mask);
      const EdgeList g = to_graph(f, false);
      CHECK(from_graph(g, GraphKind::simple) == f);
      CHECK(to_graph(from_graph(g, GraphKind::simple), false).edges == g.edges);
    }
  }
}

TEST_CASE("multiselection tables") {
  const VertexUniverse u(3);
  const MultiFunction maxpick = multiselection(Selection::max_picker(u));
  CHECK(maxpick(0).empty());
  CHECK(maxpick(1) == set_of(u, {0}));
  CHECK(maxpick(2) == set_of(u, {0, 1}));

  const MultiFunction minpick = multiselection(Selection::min_picker(u));
  CHECK(minpick(0) == set_of(u, {1, 2}));
  CHECK(minpick(1) == set_of(u, {2}));
  CHECK(minpick(2).empty());

  const VertexUniverse single(1);
  CHECK(multiselection(Selection::max_picker(single)) ==
        MultiFunction{single});

  CHECK_THROWS_AS(Selection::from_table(u, {0}), precondition_violation);
  CHECK_THROWS_AS(Selection::from_table(u, {0, 0, 0}),
                  precondition_violation);
  const Selection table = Selection::from_table(u, {1, 0, 1});
  CHECK(table.choose(0, 1) == 1);
  CHECK(table.choose(2, 0) == 0);
  CHECK(table.choose(1, 2) == 1);
}

TEST_CASE("multiselections are orgraph multifunctions covering every pair") {
  std::mt19937 rng(5501);
  for (std::uint32_t size = 2; size <= 6; ++size) {
    std::vector<Vertex> table;
    for (Vertex v = 1; v < size; ++v)
      for (Vertex u = 0; u < v; ++u)
        table.push_back(rng() % 2 ? u : v);
    const VertexUniverse universe(size);
    const MultiFunction sel =
        multiselection(Selection::from_table(universe, table));
    const PropertyReport rep = classify(sel);
    CHECK(rep.nontrivial);
    CHECK(rep.loopless);
    CHECK(rep.oriented);
    CHECK(rep.orgraph);
    // The union with the inverse covers exactly the off-diagonal pairs.
    CHECK(combine(sel, invert(sel), SetOp::union_op) ==
          complement(MultiFunction::identity(universe)));
  }
}

TEST_CASE("orienting an undirected multifunction and putting it back") {
  const VertexUniverse u(3);
  const Selection maxpick = Selection::max_picker(u);

  const MultiFunction oriented = orient(p3(), maxpick);
  CHECK(oriented(0).empty());
  CHECK(oriented(1) == set_of(u, {0}));
  CHECK(oriented(2) == set_of(u, {1}));

  CHECK(orient(MultiFunction{u}, maxpick) == MultiFunction{u});

  std::mt19937 rng(5502);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t size = 2 + trial % 5;
    MultiFunction f = random_multifunction(rng, size);
    f = combine(f, invert(f), SetOp::union_op);
    f = combine(f, MultiFunction::identity(f.universe()), SetOp::difference);
    const Selection pick = trial % 2
                               ? Selection::max_picker(f.universe())
                               : Selection::min_picker(f.universe());
    const MultiFunction half = orient(f, pick);
    CHECK(classify(half).orgraph);
    CHECK(combine(half, invert(half), SetOp::union_op) == f);
    CHECK(combine(half, invert(half), SetOp::intersection) ==
          MultiFunction{f.universe()});
  }
}

TEST_CASE("having a selection is strictness") {
  CHECK(has_selection(p3()));
  CHECK(!has_selection(MultiFunction{VertexUniverse(2)}));
  CHECK(has_selection(MultiFunction::identity(VertexUniverse(4))));
}
