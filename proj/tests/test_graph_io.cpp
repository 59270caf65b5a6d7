#include <doctest.h>

#include <sstream>

#include "mfn/graph_io.hpp"
#include "test_helpers.hpp"

using namespace mfn;
using namespace mfn::testing;

namespace {

ParsedGraph parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

}  // namespace

TEST_CASE("well-formed files") {
  const ParsedGraph g = parse_text(
      "# a path\n"
      "\n"
      "n 3 undirected\n"
      "0 1\n"
      "1 2\n");
  CHECK(g.edges.universe.size() == 3);
  CHECK(!g.edges.directed);
  CHECK(g.edges.edges ==
        std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});
  CHECK(g.to_multifunction() == p3());

  const ParsedGraph d = parse_text("n 2 directed\n0 1\n");
  CHECK(d.edges.directed);
  const MultiFunction f = d.to_multifunction();
  CHECK(f(1) == set_of(f.universe(), {0}));
  CHECK(f(0).empty());

  // Unordered edges normalize to the smaller endpoint first.
  const ParsedGraph swapped = parse_text("n 3 undirected\n2 0\n");
  CHECK(swapped.edges.edges ==
        std::vector<std::pair<Vertex, Vertex>>{{0, 2}});

  // Loops are legal in general undirected graphs.
  const ParsedGraph loops = parse_text("n 2 undirected\n0 0\n0 1\n");
  CHECK(loops.to_multifunction()(0) ==
        set_of(VertexUniverse(2), {0, 1}));

  // Edgeless graphs are fine.
  CHECK(parse_text("n 4 undirected\n").edges.edges.empty());
}

TEST_CASE("malformed files") {
  CHECK_THROWS_AS(parse_text(""), parse_error);
  CHECK_THROWS_AS(parse_text("3 undirected\n"), parse_error);
  CHECK_THROWS_AS(parse_text("n 0 undirected\n"), parse_error);
  CHECK_THROWS_AS(parse_text("n -2 undirected\n"), parse_error);
  CHECK_THROWS_AS(parse_text("n 3 sideways\n"), parse_error);
  CHECK_THROWS_AS(parse_text("n 3 undirected extra\n"), parse_error);
  CHECK_THROWS_AS(parse_text("n 3 undirected\n0\n"), parse_error);
  CHECK_THROWS_AS(parse_text("n 3 undirected\n0 1 2\n"), parse_error);
  CHECK_THROWS_AS(parse_text("n 3 undirected\n0 3\n"), parse_error);
  CHECK_THROWS_AS(parse_text("n 3 undirected\n0 a\n"), parse_error);

  // Duplicate undirected edges, in either orientation.
  CHECK_THROWS_AS(parse_text("n 3 undirected\n0 1\n0 1\n"), parse_error);
  CHECK_THROWS_AS(parse_text("n 3 undirected\n0 1\n1 0\n"), parse_error);
  // Exact duplicate directed edges.
  CHECK_THROWS_AS(parse_text("n 3 directed\n0 1\n0 1\n"), parse_error);
  // Opposite directed edges are two different edges.
  CHECK(parse_text("n 3 directed\n0 1\n1 0\n").edges.edges.size() == 2);

  try {
    parse_text("n 3 undirected\n0 1\n0 9\n");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
  }
}
