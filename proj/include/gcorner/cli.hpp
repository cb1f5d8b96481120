#pragma once

#include <cstdint>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcorner/corner.hpp"
#include "gcorner/error.hpp"
#include "gcorner/group_label.hpp"
#include "gcorner/invariants.hpp"
#include "gcorner/iso.hpp"
#include "gcorner/multigraph.hpp"
#include "gcorner/subtree.hpp"

namespace gcorner::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // iso: not isomorphic; check-kirchhoff: FAIL
  kInputError = 2,
  kUnknown = 3,   // check-kirchhoff: UNKNOWN; cap exceeded
};

inline constexpr std::size_t kDefaultCap = 10'000;
inline constexpr std::int64_t kDefaultBound = 64;

inline DirectedMultigraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot read '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw GraphError(path + ":" + e.what());
  }
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

namespace detail {

struct Options {
  std::string graph;
  std::string graph2;
  std::string roots;
  std::string tree_edges;
  std::string group;
  std::size_t cap = kDefaultCap;
  std::int64_t bound = kDefaultBound;
  bool dot = false;
  bool relabel = false;
  bool loops_only = false;
};

inline void emit_graph(const DirectedMultigraph& g, const Options& o, std::ostream& out) {
  const DirectedMultigraph shown = o.relabel ? relabel_compact(g) : g;
  out << (o.dot ? to_dot(shown) : serialize(shown));
}

inline VertexSet root_set(const DirectedMultigraph& g, const std::string& list) {
  auto names = split_list(list);
  if (names.empty()) throw GraphError("--roots must name at least one vertex");
  return g.vertex_set(names);
}

inline std::string edge_list(const DirectedMultigraph& g, const std::vector<EdgeId>& edges,
                             const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i) s += (i ? sep : "") + g.edge(edges[i]).name;
  return s;
}

inline int cmd_closure(const Options& o, std::ostream& out) {
  auto g = read_graph_file(o.graph);
  for (VertexId v : hereditary_closure(g, root_set(g, o.roots))) out << g.vertex_name(v) << '\n';
  return kOk;
}

inline int cmd_tree(const Options& o, std::ostream& out) {
  auto g = read_graph_file(o.graph);
  auto t = build_spanning_subtree(g, root_set(g, o.roots));
  for (EdgeId e : t.tree_edges()) out << g.edge(e).name << '\n';
  return kOk;
}

inline int cmd_corner(const Options& o, bool tree_given, std::ostream& out) {
  auto g = read_graph_file(o.graph);
  VertexSet roots = root_set(g, o.roots);
  DirectedSubtree t = tree_given
                          ? validate_subtree(g, split_list(o.tree_edges), g.names_of(roots))
                          : build_spanning_subtree(g, roots);
  emit_graph(corner_graph(g, t).graph, o, out);
  return kOk;
}

inline int cmd_skew(const Options& o, std::ostream& out) {
  auto g = read_graph_file(o.graph);
  auto c = labelling_from_graph(g, parse_group_spec(o.group));
  SkewGraph s = c.group.is_finite() ? skew_product(g, c) : reachable_skew(g, c, o.cap);
  emit_graph(s.graph, o, out);
  return kOk;
}

inline int cmd_fixed_point(const Options& o, std::ostream& out) {
  auto g = read_graph_file(o.graph);
  auto c = labelling_from_graph(g, parse_group_spec(o.group));
  emit_graph(fixed_point_graph(g, c, o.cap).corner.graph, o, out);
  return kOk;
}

inline int cmd_kth(const Options& o, std::ostream& out) {
  out << to_string(k_theory(read_graph_file(o.graph)));
  return kOk;
}

inline int cmd_fd_dims(const Options& o, bool roots_given, std::ostream& out) {
  auto g = read_graph_file(o.graph);
  if (!is_acyclic(g)) throw GraphError("fd-dims needs an acyclic graph");
  DimVector dims =
      roots_given ? corner_dimension_vector(g, root_set(g, o.roots)) : fd_dimension_vector(g);
  out << to_string(dims) << '\n';
  return kOk;
}

inline int cmd_iso(const Options& o, std::ostream& out) {
  auto a = read_graph_file(o.graph);
  auto b = read_graph_file(o.graph2);
  IsoResult r = are_isomorphic(a, b);
  if (!r.isomorphic) {
    out << "not isomorphic\n";
    return kNegative;
  }
  out << "isomorphic\n";
  for (VertexId v = 0; v < a.vertex_count(); ++v)
    out << a.vertex_name(v) << " -> " << b.vertex_name(r.witness[v]) << '\n';
  return kOk;
}

inline int cmd_kirchhoff(const Options& o, std::ostream& out) {
  auto g = read_graph_file(o.graph);
  auto c = labelling_from_graph(g, parse_group_spec(o.group));
  if (o.loops_only) {
    LoopLabelResult r = check_cycle_labels(g, c);
    if (!r.all_trivial) {
      out << "FAIL\ncycle " << edge_list(g, r.witness->edges, " ") << "\nlabel "
          << c.group.encode(path_label(c, *r.witness)) << '\n';
      return kNegative;
    }
    out << (r.complete ? "PASS\n" : "UNKNOWN\n");
    return r.complete ? kOk : kUnknown;
  }
  KirchhoffResult r = kirchhoff_check(g, c, o.bound);
  out << to_string(r.verdict) << '\n';
  if (r.certificate) {
    out << "start " << g.vertex_name(r.certificate->start) << '\n'
        << "prefix " << edge_list(g, r.certificate->prefix, " ") << '\n'
        << "cycle " << edge_list(g, r.certificate->cycle, " ") << '\n';
  }
  switch (r.verdict) {
    case Verdict::pass: return kOk;
    case Verdict::fail: return kNegative;
    case Verdict::unknown: return kUnknown;
  }
  return kUnknown;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Corners of graph algebras: hereditary closures, directed subtrees, T-corners, "
               "skew products and fixed-point graphs",
               "gcorner"};
  app.footer(std::string(kGraphGrammar));
  app.require_subcommand(1);

  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("GRAPH", o.graph, "graph file")->required();
  };
  auto roots_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--roots", o.roots, "comma-separated root vertices");
    if (required) opt->required();
    return opt;
  };
  auto group_opt = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "group: z | z<n> | comma-joined product, e.g. z,z2")
        ->required();
  };
  auto output_flags = [&](CLI::App* sub) {
    sub->add_flag("--dot", o.dot, "emit Graphviz DOT instead of the graph format");
    sub->add_flag("--relabel", o.relabel, "rename vertices v0.. and edges e0..");
  };

  auto* closure = app.add_subcommand("closure", "print the hereditary closure H_E(X)");
  graph_arg(closure);
  roots_opt(closure, true);

  auto* tree = app.add_subcommand("tree", "print the BFS spanning subtree's edges");
  graph_arg(tree);
  roots_opt(tree, true);

  auto* corner = app.add_subcommand("corner", "build the T-corner graph E(T)");
  graph_arg(corner);
  roots_opt(corner, true);
  auto* tree_edges_opt =
      corner->add_option("--tree-edges", o.tree_edges, "comma-separated subtree edges");
  output_flags(corner);

  auto* skew = app.add_subcommand("skew", "skew product E x_c G (reachable part for infinite G)");
  graph_arg(skew);
  group_opt(skew);
  skew->add_option("--cap", o.cap, "vertex cap for infinite groups");
  output_flags(skew);

  auto* fixed = app.add_subcommand("fixed-point", "graph of the fixed-point algebra of a labelling");
  graph_arg(fixed);
  group_opt(fixed);
  fixed->add_option("--cap", o.cap, "vertex cap on the skew-product closure");
  output_flags(fixed);

  auto* kth = app.add_subcommand("kth", "K-theory of the graph algebra");
  graph_arg(kth);

  auto* fd = app.add_subcommand("fd-dims", "matrix-block sizes for an acyclic graph");
  graph_arg(fd);
  auto* fd_roots = roots_opt(fd, false);

  auto* iso = app.add_subcommand("iso", "decide multigraph isomorphism");
  iso->add_option("GRAPH1", o.graph, "first graph file")->required();
  iso->add_option("GRAPH2", o.graph2, "second graph file")->required();

  auto* kirch = app.add_subcommand("check-kirchhoff", "check the voltage condition on infinite paths");
  graph_arg(kirch);
  group_opt(kirch);
  kirch->add_option("--bound", o.bound, "coordinate bound for infinite factors");
  kirch->add_flag("--loops-only", o.loops_only, "only check labels of vertex-simple cycles");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (closure->parsed()) return detail::cmd_closure(o, out);
    if (tree->parsed()) return detail::cmd_tree(o, out);
    if (corner->parsed()) return detail::cmd_corner(o, tree_edges_opt->count() > 0, out);
    if (skew->parsed()) return detail::cmd_skew(o, out);
    if (fixed->parsed()) return detail::cmd_fixed_point(o, out);
    if (kth->parsed()) return detail::cmd_kth(o, out);
    if (fd->parsed()) return detail::cmd_fd_dims(o, fd_roots->count() > 0, out);
    if (iso->parsed()) return detail::cmd_iso(o, out);
    if (kirch->parsed()) return detail::cmd_kirchhoff(o, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUnknown;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace gcorner::cli
