#include <catch2/catch_amalgamated.hpp>

#include "gcorner/multigraph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace gcorner;
using namespace gcorner::testing;

namespace {

std::vector<std::string> edge_names(const DirectedMultigraph& g, const std::vector<EdgeId>& es) {
  std::vector<std::string> out;
  for (EdgeId e : es) out.push_back(g.edge(e).name);
  return out;
}

}  // namespace

TEST_CASE("parse_graph reads the rose with two petals", "[multigraph]") {
  auto g = parse_graph("vertex v\nedge e v v\nedge f v v");
  REQUIRE(g.vertex_count() == 1);
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edge(0).name == "e");
  CHECK(g.edge(1).name == "f");
  CHECK(g.edge(0).src == 0);
  CHECK(g.edge(1).dst == 0);
}

TEST_CASE("parse_graph accepts a single isolated vertex", "[multigraph]") {
  auto g = parse_graph("vertex u");
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("parse_graph rejects undeclared endpoints", "[multigraph]") {
  try {
    parse_graph("edge e u v");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("'u'") != std::string::npos);
  }
}

TEST_CASE("parse_graph reports the offending line", "[multigraph]") {
  const char* text =
      "# comment\n"
      "\n"
      "vertex a\r\n"
      "  vertex b\n"
      "edge x a b 1,2\n"
      "edge x b a\n";
  try {
    parse_graph(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(std::string(e.what()).find("duplicate edge") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex a\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a b\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a\nedge e a\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("node a\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a,b\n"), ParseError);
  // Vertex and edge names live in separate namespaces.
  CHECK_NOTHROW(parse_graph("vertex a\nedge a a a\n"));
}

TEST_CASE("parse_graph keeps the optional label column", "[multigraph]") {
  auto g = parse_graph("vertex a\nvertex b\nedge x a b -2,1\nedge y b a\n");
  CHECK(g.edge(0).label == "-2,1");
  CHECK(g.edge(1).label.empty());
}

TEST_CASE("out_edges and in_edges follow insertion order", "[multigraph]") {
  auto c = cyc6();
  CHECK(edge_names(c, c.out_edges(c.vertex("v0"))) == std::vector<std::string>{"e1", "f2"});
  CHECK(edge_names(c, c.in_edges(c.vertex("v2"))) == std::vector<std::string>{"e2", "f2"});
  auto iso = parse_graph("vertex u");
  CHECK(iso.out_edges(0).empty());
  auto r = rose2();
  CHECK(edge_names(r, r.out_edges(0)) == std::vector<std::string>{"e", "f"});
  CHECK_THROWS_AS(r.out_edges(5), GraphError);
}

TEST_CASE("is_acyclic", "[multigraph]") {
  CHECK(is_acyclic(edge1()));
  CHECK_FALSE(is_acyclic(rose2()));
  CHECK_FALSE(is_acyclic(cyc6()));
  CHECK(is_acyclic(parse_graph("vertex a")));
}

TEST_CASE("hereditary_closure", "[multigraph]") {
  auto c = cyc6();
  CHECK(hereditary_closure(c, c.vertex_set({"v0"})) == c.all_vertices());
  auto p = pqr(1, 2, 3);
  CHECK(hereditary_closure(p, p.all_vertices()) == p.all_vertices());
  auto e = edge1();
  CHECK(hereditary_closure(e, e.vertex_set({"v"})) == e.vertex_set({"v"}));
  CHECK(hereditary_closure(e, e.vertex_set({"u"})) == e.all_vertices());
  CHECK_THROWS_AS(hereditary_closure(e, VertexSet{7}), GraphError);
}

TEST_CASE("saturate", "[multigraph]") {
  auto p = pqr(2, 2, 2);
  CHECK(saturate(p, p.all_vertices()) == p.all_vertices());
  auto e = edge1();
  CHECK(saturate(e, e.vertex_set({"v"})) == e.all_vertices());
  auto c = cyc6();
  CHECK(saturate(c, c.all_vertices()) == c.all_vertices());
  CHECK_THROWS_AS(saturate(e, e.vertex_set({"u"})), GraphError);
  // A sink outside H is never pulled in.
  auto two = parse_graph("vertex a\nvertex b\n");
  CHECK(saturate(two, two.vertex_set({"a"})) == two.vertex_set({"a"}));
}

TEST_CASE("paths and initial subpaths", "[multigraph]") {
  auto c = cyc6();
  Path p = make_path(c, "v0", {"e1", "e2"});
  CHECK(path_end(c, p) == c.vertex("v2"));
  CHECK(is_vertex_simple(c, p));
  CHECK(is_initial_subpath(make_path(c, "v0", {}), p));
  CHECK(is_initial_subpath(make_path(c, "v0", {"e1"}), p));
  CHECK_FALSE(is_initial_subpath(make_path(c, "v0", {"f2"}), p));
  CHECK_FALSE(is_initial_subpath(make_path(c, "v1", {}), p));
  CHECK_FALSE(is_vertex_simple(c, make_path(c, "v0", {"e1", "e2", "e0"})));
  CHECK_THROWS_AS(make_path(c, "v0", {"e2"}), GraphError);
}

TEST_CASE("DOT export sorts by name and keeps parallel edges", "[multigraph]") {
  auto g = parse_graph("vertex b\nvertex a\nedge z a b\nedge y a b\n");
  CHECK(to_dot(g) ==
        "digraph \"G\" {\n"
        "  \"a\";\n"
        "  \"b\";\n"
        "  \"a\" -> \"b\" [label=\"y\"];\n"
        "  \"a\" -> \"b\" [label=\"z\"];\n"
        "}\n");
}

TEST_CASE("multigraph properties on random graphs", "[multigraph][property]") {
  Rng rng(20240917);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(rng, 7, 12);
    auto xs = random_roots(rng, g);
    auto h = hereditary_closure(g, xs);

    CHECK(is_hereditary(g, h));
    CHECK(hereditary_closure(g, h) == h);
    for (VertexId x : xs) CHECK(h.count(x));

    // Minimality: every member is reachable from X (Floyd-Warshall oracle).
    auto d = all_pairs_distance(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      bool reach = std::any_of(xs.begin(), xs.end(),
                               [&](VertexId x) { return d[x][v] < g.vertex_count() + 1; });
      CHECK(reach == (h.count(v) > 0));
    }

    // Monotone in X.
    VertexSet bigger = xs;
    bigger.insert(uniform(rng, 0, g.vertex_count() - 1));
    auto hb = hereditary_closure(g, bigger);
    CHECK(std::includes(hb.begin(), hb.end(), h.begin(), h.end()));

    // Finite graphs are path-finite: no vertex-simple path visits |V| + 1 vertices.
    CHECK(longest_simple_path(g) < g.vertex_count());

    std::size_t outs = 0, ins = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      outs += g.out_edges(v).size();
      ins += g.in_edges(v).size();
    }
    CHECK(outs == g.edge_count());
    CHECK(ins == g.edge_count());

    CHECK(parse_graph(serialize(g)) == g);

    auto sat = saturate(g, h);
    CHECK(std::includes(sat.begin(), sat.end(), h.begin(), h.end()));
    CHECK(saturate(g, sat) == sat);
  }
}
