#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>
#include <tuple>

#include "gcorner/group_label.hpp"
#include "gcorner/iso.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace gcorner;
using namespace gcorner::testing;

namespace {

using EdgeTriple = std::tuple<std::string, std::string, std::string>;

std::set<EdgeTriple> triples(const DirectedMultigraph& g) {
  std::set<EdgeTriple> out;
  for (const Edge& e : g.edges()) out.insert({e.name, g.vertex_name(e.src), g.vertex_name(e.dst)});
  return out;
}

std::size_t weak_components(const DirectedMultigraph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) parent[find(e.src)] = find(e.dst);
  std::size_t n = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) n += find(v) == v;
  return n;
}

/// Replays a certificate: labels after the first step never hit the
/// identity, and the cycle closes on the state where it began.
bool certificate_holds(const DirectedMultigraph& g, const Labelling& c,
                       const KirchhoffCertificate& cert) {
  if (cert.cycle.empty()) return false;
  VertexId at = cert.start;
  GroupElement acc = c.group.identity();
  auto step = [&](EdgeId e) {
    if (g.edge(e).src != at) return false;
    at = g.edge(e).dst;
    acc = c.group.op(acc, c(e));
    return !c.group.is_identity(acc);
  };
  for (EdgeId e : cert.prefix)
    if (!step(e)) return false;
  auto loop_state = std::make_pair(at, acc);
  for (EdgeId e : cert.cycle)
    if (!step(e)) return false;
  return std::make_pair(at, acc) == loop_state;
}

}  // namespace

TEST_CASE("group specs and elements", "[group]") {
  auto z3 = parse_group_spec("z3");
  CHECK(z3.orders() == std::vector<std::int64_t>{3});
  CHECK(z3.order() == 3);
  CHECK(z3.encode(z3.parse_element("5")) == "2");
  CHECK(z3.encode(z3.inverse(z3.parse_element("1"))) == "2");

  auto mixed = parse_group_spec("z,z2");
  CHECK_FALSE(mixed.is_finite());
  auto x = mixed.parse_element("-2,3");
  CHECK(mixed.encode(x) == "-2,1");
  CHECK(mixed.encode_for_name(x) == "-2_1");
  CHECK(mixed.is_identity(mixed.op(x, mixed.inverse(x))));
  CHECK(mixed.infinite_norm(x) == 2);
  CHECK(mixed.to_string() == "z,z2");

  CHECK(parse_group_spec("z2,z3").elements().size() == 6);
  CHECK_THROWS_AS(parse_group_spec("q3"), GraphError);
  CHECK_THROWS_AS(parse_group_spec("z0"), GraphError);
  CHECK_THROWS_AS(parse_group_spec(""), GraphError);
  CHECK_THROWS_AS(mixed.parse_element("1"), GraphError);
  CHECK_THROWS_AS(z3.parse_element("x"), GraphError);
}

TEST_CASE("path_label", "[group]") {
  auto r = rose2_z3();
  auto c = labelling_from_graph(r, parse_group_spec("z3"));
  CHECK(c.group.encode(path_label(c, make_path(r, "v", {"e", "f"}))) == "0");
  CHECK(c.group.encode(path_label(c, make_path(r, "v", {"e", "e"}))) == "1");
  CHECK(c.group.is_identity(path_label(c, make_path(r, "v", {}))));

  auto cyc = cyc6();
  auto z = GroupSpec::integers();
  auto ones = constant_labelling(cyc, z, GroupElement{{1}});
  auto mu = make_path(cyc, "v0", {"e1", "e2", "e0", "f2", "f1"});
  CHECK(path_label(ones, mu) == GroupElement{{5}});

  Labelling short_c{z, {}};
  CHECK_THROWS_AS(path_label(short_c, mu), GraphError);
}

TEST_CASE("labels default to the identity and are validated", "[group]") {
  auto g = parse_graph("vertex a\nedge x a a 1\nedge y a a\n");
  auto c = labelling_from_graph(g, parse_group_spec("z5"));
  CHECK(c(1) == GroupElement{{0}});
  auto bad = parse_graph("vertex a\nedge x a a 1,2\n");
  CHECK_THROWS_AS(labelling_from_graph(bad, parse_group_spec("z5")), GraphError);
}

TEST_CASE("skew product of the two-petal rose over Z_3", "[skew]") {
  auto r = rose2_z3();
  auto s = skew_product(r, labelling_from_graph(r, parse_group_spec("z3")));
  CHECK(s.graph.vertex_names() == std::vector<std::string>{"v@0", "v@1", "v@2"});
  CHECK(triples(s.graph) == std::set<EdgeTriple>{
                                {"e@1", "v@0", "v@1"},
                                {"e@2", "v@1", "v@2"},
                                {"e@0", "v@2", "v@0"},
                                {"f@2", "v@0", "v@2"},
                                {"f@1", "v@2", "v@1"},
                                {"f@0", "v@1", "v@0"},
                            });
  CHECK(are_isomorphic(s.graph, cyc6()).isomorphic);
}

TEST_CASE("skew products by trivial data", "[skew]") {
  auto c = cyc6();
  auto z1 = skew_product(c, labelling_from_graph(c, parse_group_spec("z1")));
  CHECK(are_isomorphic(z1.graph, c).isomorphic);

  auto z2 = skew_product(c, labelling_from_graph(c, parse_group_spec("z2")));
  CHECK(z2.graph.vertex_count() == 6);
  CHECK(weak_components(z2.graph) == 2);

  CHECK_THROWS_AS(skew_product(c, labelling_from_graph(c, parse_group_spec("z"))), GraphError);
}

TEST_CASE("reachable_skew", "[skew]") {
  auto r = rose2_z3();
  auto s = reachable_skew(r, labelling_from_graph(r, parse_group_spec("z3")), 100);
  CHECK(s.graph.vertex_count() == 3);
  CHECK(s.graph.edge_count() == 6);

  auto g = parse_graph("vertex u\nvertex v\nedge a u v 1\nedge l v v 0\n");
  auto sz = reachable_skew(g, labelling_from_graph(g, GroupSpec::integers()), 100);
  auto names = sz.graph.vertex_names();
  CHECK(std::set<std::string>(names.begin(), names.end()) ==
        std::set<std::string>{"u@0", "v@0", "v@-1"});
  CHECK(triples(sz.graph) == std::set<EdgeTriple>{{"a@-1", "u@0", "v@-1"},
                                                  {"l@-1", "v@-1", "v@-1"},
                                                  {"l@0", "v@0", "v@0"}});

  auto loop = parse_graph("vertex v\nedge l v v 1\n");
  CHECK_THROWS_AS(reachable_skew(loop, labelling_from_graph(loop, GroupSpec::integers()), 50),
                  CapExceeded);
  CHECK_THROWS_AS(reachable_skew(cyc6(), labelling_from_graph(cyc6(), GroupSpec::integers()), 2),
                  GraphError);
}

TEST_CASE("kirchhoff_check fixed examples", "[kirchhoff]") {
  auto acyclic = parse_graph("vertex a\nvertex b\nedge x a b 5\nedge y a b -3\n");
  CHECK(kirchhoff_check(acyclic, labelling_from_graph(acyclic, GroupSpec::integers()), 1).verdict ==
        Verdict::pass);

  auto r = rose2_z3();
  auto c = labelling_from_graph(r, parse_group_spec("z3"));
  auto res = kirchhoff_check(r, c, 0);
  REQUIRE(res.verdict == Verdict::fail);
  REQUIRE(res.certificate);
  CHECK(certificate_holds(r, c, *res.certificate));
  CHECK(res.certificate->prefix == std::vector<EdgeId>{r.edge_id("e")});
  CHECK(res.certificate->cycle == std::vector<EdgeId>{r.edge_id("e"), r.edge_id("f")});

  auto loop = parse_graph("vertex v\nedge l v v 1\n");
  CHECK(kirchhoff_check(loop, labelling_from_graph(loop, parse_group_spec("z2")), 0).verdict ==
        Verdict::pass);
  CHECK(kirchhoff_check(loop, labelling_from_graph(loop, GroupSpec::integers()), 10).verdict ==
        Verdict::unknown);

  auto zero = parse_graph("vertex v\nedge l v v 0\n");
  CHECK(kirchhoff_check(zero, labelling_from_graph(zero, GroupSpec::integers()), 10).verdict ==
        Verdict::pass);

  auto updown = parse_graph("vertex v\nedge up v v 1\nedge down v v -1\n");
  auto cz = labelling_from_graph(updown, GroupSpec::integers());
  auto ud = kirchhoff_check(updown, cz, 10);
  REQUIRE(ud.verdict == Verdict::fail);
  CHECK(certificate_holds(updown, cz, *ud.certificate));
}

TEST_CASE("kirchhoff_check matches the layered-run oracle", "[kirchhoff][property]") {
  Rng rng(31337);
  const char* groups[] = {"z2", "z3", "z4", "z2,z2"};
  for (int trial = 0; trial < 400; ++trial) {
    auto base = random_graph(rng, 4, 7);
    auto spec = parse_group_spec(groups[trial % 4]);
    Labelling c{spec, {}};
    for (EdgeId e = 0; e < base.edge_count(); ++e) {
      GroupElement x = spec.identity();
      for (std::size_t i = 0; i < spec.rank(); ++i)
        x.coords[i] = static_cast<std::int64_t>(uniform(rng, 0, spec.orders()[i] - 1));
      c.labels.push_back(x);
    }
    auto res = kirchhoff_check(base, c, 0);
    REQUIRE(res.verdict != Verdict::unknown);
    CHECK((res.verdict == Verdict::pass) == voltage_condition_holds(base, c));
    if (res.verdict == Verdict::fail) CHECK(certificate_holds(base, c, *res.certificate));
    else CHECK_NOTHROW(fixed_point_graph(base, c, base.vertex_count() * spec.order()));
  }
}

TEST_CASE("loops-only diagnostic", "[kirchhoff]") {
  auto r = rose2_z3();
  auto c = labelling_from_graph(r, parse_group_spec("z3"));
  auto res = check_cycle_labels(r, c);
  CHECK_FALSE(res.all_trivial);
  CHECK(res.witness->edges == std::vector<EdgeId>{r.edge_id("e")});

  auto balanced = parse_graph("vertex a\nvertex b\nedge x a b 1\nedge y b a -1\nedge z a a 0\n");
  auto cb = labelling_from_graph(balanced, GroupSpec::integers());
  auto ok = check_cycle_labels(balanced, cb);
  CHECK(ok.all_trivial);
  CHECK(ok.complete);
}

TEST_CASE("fixed_point_graph examples", "[fixed-point]") {
  auto r = rose2_z3();
  auto fp = fixed_point_graph(r, labelling_from_graph(r, parse_group_spec("z3")), 100);
  CHECK(fp.corner.graph.vertex_count() == 2);
  CHECK(fp.corner.graph.edge_count() == 6);
  auto c = cyc6();
  auto reference = corner_graph(c, validate_subtree(c, {"e1", "f2"}, {"v0"}));
  CHECK(are_isomorphic(fp.corner.graph, reference.graph).isomorphic);
  CHECK(fixed_point_graph(r, labelling_from_graph(r, parse_group_spec("z3")), 100).corner.graph ==
        fp.corner.graph);

  auto trivial = fixed_point_graph(c, labelling_from_graph(c, parse_group_spec("z1")), 100);
  CHECK(are_isomorphic(trivial.corner.graph, c).isomorphic);

  auto e = edge1();
  auto gauge = fixed_point_graph(e, constant_labelling(e, GroupSpec::integers(), GroupElement{{1}}), 100);
  CHECK(gauge.corner.graph.vertex_names() == std::vector<std::string>{"v@0", "v@-1"});
  CHECK(gauge.corner.graph.edge_count() == 0);
  CHECK(gauge.tree.tree_edges().size() == 1);

  auto loop = parse_graph("vertex v\nedge l v v 1\n");
  CHECK_THROWS_AS(fixed_point_graph(loop, labelling_from_graph(loop, GroupSpec::integers()), 100),
                  CapExceeded);
}

TEST_CASE("skew product laws on random instances", "[skew][property]") {
  Rng rng(555);
  const char* groups[] = {"z2", "z3", "z4", "z2,z3"};
  for (int trial = 0; trial < 200; ++trial) {
    auto base = random_graph(rng, 5, 8);
    auto spec = parse_group_spec(groups[trial % 4]);
    Labelling c{spec, {}};
    for (EdgeId e = 0; e < base.edge_count(); ++e) {
      GroupElement x = spec.identity();
      for (std::size_t i = 0; i < spec.rank(); ++i)
        x.coords[i] = static_cast<std::int64_t>(uniform(rng, 0, spec.orders()[i] - 1));
      c.labels.push_back(x);
    }
    auto full = skew_product(base, c);
    CHECK(full.graph.vertex_count() == base.vertex_count() * spec.order());
    CHECK(full.graph.edge_count() == base.edge_count() * spec.order());
    for (EdgeId se = 0; se < full.graph.edge_count(); ++se) {
      EdgeId e = full.base_edge[se];
      const GroupElement& g = full.edge_group[se];
      VertexId src = full.graph.edge(se).src, dst = full.graph.edge(se).dst;
      CHECK(full.base_vertex[src] == base.edge(e).src);
      CHECK(full.vertex_group[src] == spec.op(c(e), g));
      CHECK(full.base_vertex[dst] == base.edge(e).dst);
      CHECK(full.vertex_group[dst] == g);
    }

    // The explorer reproduces the hereditary piece of the full product.
    auto part = reachable_skew(base, c, full.graph.vertex_count());
    auto h = hereditary_closure(full.graph, identity_layer(full));
    auto expected = hereditary_subgraph(full.graph, h);
    CHECK(is_hereditary(full.graph, full.graph.vertex_set(part.graph.vertex_names())));
    auto as_set = [](const DirectedMultigraph& g) {
      auto v = g.vertex_names();
      return std::set<std::string>(v.begin(), v.end());
    };
    CHECK(as_set(part.graph) == as_set(expected));
    CHECK(triples(part.graph) == triples(expected));

    // Trivial labelling: one copy of the base per group element.
    auto copies = skew_product(base, constant_labelling(base, spec, spec.identity()));
    CHECK(weak_components(copies.graph) == spec.order() * weak_components(base));
  }
}

TEST_CASE("Cayley graphs as skew products of a rose", "[skew][property]") {
  const std::vector<std::pair<const char*, std::vector<const char*>>> cases = {
      {"z5", {"1"}}, {"z6", {"2", "3"}}, {"z2,z3", {"1,0", "0,1"}}, {"z4", {"1", "1", "3"}}};
  for (const auto& [spec_text, gens] : cases) {
    auto spec = parse_group_spec(spec_text);
    auto rose_k = rose(static_cast<int>(gens.size()));
    Labelling c{spec, {}};
    for (const char* g : gens) c.labels.push_back(spec.parse_element(g));
    auto s = skew_product(rose_k, c);
    CHECK(s.graph.vertex_count() == spec.order());
    for (VertexId v = 0; v < s.graph.vertex_count(); ++v) {
      CHECK(s.graph.out_edges(v).size() == gens.size());
      CHECK(s.graph.in_edges(v).size() == gens.size());
    }
  }
}
