#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gcorner/error.hpp"

namespace gcorner {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Vertex ids are assigned in insertion order, so iterating a VertexSet
/// visits vertices in file order.
using VertexSet = std::set<VertexId>;

struct Edge {
  std::string name;
  VertexId src;
  VertexId dst;
  /// Raw group-element text from the optional fourth column; empty if absent.
  std::string label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// True iff `name` is non-empty and drawn from [A-Za-z0-9_@.-].
inline bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
           (ch >= '0' && ch <= '9') || ch == '_' || ch == '@' || ch == '.' ||
           ch == '-';
  });
}

/// Finite directed multigraph with named vertices and edges. Edges run
/// src -> dst. Vertices and edges keep their insertion order.
class DirectedMultigraph {
 public:
  VertexId add_vertex(std::string name) {
    if (!is_valid_name(name)) throw GraphError("invalid vertex name '" + name + "'");
    if (vertex_index_.count(name)) throw GraphError("duplicate vertex '" + name + "'");
    VertexId id = vertex_names_.size();
    vertex_index_.emplace(name, id);
    vertex_names_.push_back(std::move(name));
    out_.emplace_back();
    in_.emplace_back();
    return id;
  }

  EdgeId add_edge(std::string name, VertexId src, VertexId dst, std::string label = {}) {
    if (!is_valid_name(name)) throw GraphError("invalid edge name '" + name + "'");
    if (edge_index_.count(name)) throw GraphError("duplicate edge '" + name + "'");
    if (src >= vertex_count() || dst >= vertex_count())
      throw GraphError("edge '" + name + "' has an endpoint that is not a vertex");
    EdgeId id = edges_.size();
    edge_index_.emplace(name, id);
    edges_.push_back(Edge{std::move(name), src, dst, std::move(label)});
    out_[src].push_back(id);
    in_[dst].push_back(id);
    return id;
  }

  EdgeId add_edge(std::string name, std::string_view src, std::string_view dst,
                  std::string label = {}) {
    return add_edge(std::move(name), vertex(src), vertex(dst), std::move(label));
  }

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<VertexId> find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<EdgeId> find_edge(std::string_view name) const {
    auto it = edge_index_.find(std::string(name));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId vertex(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw GraphError("unknown vertex '" + std::string(name) + "'");
  }
  EdgeId edge_id(std::string_view name) const {
    if (auto e = find_edge(name)) return *e;
    throw GraphError("unknown edge '" + std::string(name) + "'");
  }

  VertexSet vertex_set(const std::vector<std::string>& names) const {
    VertexSet out;
    for (const auto& n : names) out.insert(vertex(n));
    return out;
  }
  VertexSet all_vertices() const {
    VertexSet out;
    for (VertexId v = 0; v < vertex_count(); ++v) out.insert(out.end(), v);
    return out;
  }
  std::vector<std::string> names_of(const VertexSet& vs) const {
    std::vector<std::string> out;
    for (VertexId v : vs) out.push_back(vertex_name(v));
    return out;
  }

  /// s^{-1}(v), in insertion order.
  const std::vector<EdgeId>& out_edges(VertexId v) const {
    check_vertex(v);
    return out_[v];
  }
  /// r^{-1}(v), in insertion order.
  const std::vector<EdgeId>& in_edges(VertexId v) const {
    check_vertex(v);
    return in_[v];
  }

  bool is_sink(VertexId v) const { return out_edges(v).empty(); }

  friend bool operator==(const DirectedMultigraph& a, const DirectedMultigraph& b) {
    return a.vertex_names_ == b.vertex_names_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(VertexId v) const {
    if (v >= vertex_count()) throw GraphError("unknown vertex id " + std::to_string(v));
  }

  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

inline const std::vector<EdgeId>& out_edges(const DirectedMultigraph& g, VertexId v) {
  return g.out_edges(v);
}
inline const std::vector<EdgeId>& in_edges(const DirectedMultigraph& g, VertexId v) {
  return g.in_edges(v);
}

// ---------------------------------------------------------------------------
// Paths

/// A finite path: a start vertex and a sequence of composable edges. The
/// empty sequence is the length-0 path at `start`.
struct Path {
  VertexId start = 0;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Builds a path after checking that consecutive edges compose.
inline Path make_path(const DirectedMultigraph& g, VertexId start, std::vector<EdgeId> edges) {
  if (start >= g.vertex_count()) throw GraphError("path start is not a vertex");
  VertexId at = start;
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) throw GraphError("path uses an unknown edge");
    const Edge& ed = g.edge(e);
    if (ed.src != at)
      throw GraphError("edge '" + ed.name + "' does not continue the path at '" +
                       g.vertex_name(at) + "'");
    at = ed.dst;
  }
  return Path{start, std::move(edges)};
}

inline Path make_path(const DirectedMultigraph& g, std::string_view start,
                      const std::vector<std::string>& edge_names) {
  std::vector<EdgeId> ids;
  for (const auto& n : edge_names) ids.push_back(g.edge_id(n));
  return make_path(g, g.vertex(start), std::move(ids));
}

inline VertexId path_end(const DirectedMultigraph& g, const Path& p) {
  return p.edges.empty() ? p.start : g.edge(p.edges.back()).dst;
}

/// mu is an initial subpath of nu: same start and mu's edges are a prefix of nu's.
inline bool is_initial_subpath(const Path& mu, const Path& nu) {
  return mu.start == nu.start && mu.edges.size() <= nu.edges.size() &&
         std::equal(mu.edges.begin(), mu.edges.end(), nu.edges.begin());
}

/// No vertex repeats along the path's vertex sequence.
inline bool is_vertex_simple(const DirectedMultigraph& g, const Path& p) {
  std::set<VertexId> seen{p.start};
  for (EdgeId e : p.edges)
    if (!seen.insert(g.edge(e).dst).second) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Structure

/// Kahn's algorithm; the graph is acyclic iff every vertex gets popped.
inline bool is_acyclic(const DirectedMultigraph& g) {
  std::vector<std::size_t> indeg(g.vertex_count());
  for (const Edge& e : g.edges()) ++indeg[e.dst];
  std::deque<VertexId> ready;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t popped = 0;
  while (!ready.empty()) {
    VertexId v = ready.front();
    ready.pop_front();
    ++popped;
    for (EdgeId e : g.out_edges(v))
      if (--indeg[g.edge(e).dst] == 0) ready.push_back(g.edge(e).dst);
  }
  return popped == g.vertex_count();
}

/// Vertices in an order where every edge goes forward. Throws on a cycle.
inline std::vector<VertexId> topological_order(const DirectedMultigraph& g) {
  std::vector<std::size_t> indeg(g.vertex_count());
  for (const Edge& e : g.edges()) ++indeg[e.dst];
  std::deque<VertexId> ready;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::vector<VertexId> order;
  while (!ready.empty()) {
    VertexId v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (EdgeId e : g.out_edges(v))
      if (--indeg[g.edge(e).dst] == 0) ready.push_back(g.edge(e).dst);
  }
  if (order.size() != g.vertex_count()) throw GraphError("graph contains a directed cycle");
  return order;
}

inline void check_vertices(const DirectedMultigraph& g, const VertexSet& xs) {
  for (VertexId v : xs)
    if (v >= g.vertex_count()) throw GraphError("unknown vertex id " + std::to_string(v));
}

/// Every out-edge of a member ends in the set.
inline bool is_hereditary(const DirectedMultigraph& g, const VertexSet& xs) {
  check_vertices(g, xs);
  for (VertexId v : xs)
    for (EdgeId e : g.out_edges(v))
      if (!xs.count(g.edge(e).dst)) return false;
  return true;
}

/// H_E(X): everything forward-reachable from X, X included.
inline VertexSet hereditary_closure(const DirectedMultigraph& g, const VertexSet& xs) {
  check_vertices(g, xs);
  VertexSet closure = xs;
  std::deque<VertexId> frontier(xs.begin(), xs.end());
  while (!frontier.empty()) {
    VertexId v = frontier.front();
    frontier.pop_front();
    for (EdgeId e : g.out_edges(v))
      if (closure.insert(g.edge(e).dst).second) frontier.push_back(g.edge(e).dst);
  }
  return closure;
}

/// Smallest S containing the hereditary set H such that any vertex emitting
/// at least one edge, all of which end in S, lies in S.
inline VertexSet saturate(const DirectedMultigraph& g, const VertexSet& hereditary) {
  if (!is_hereditary(g, hereditary)) throw GraphError("saturate: vertex set is not hereditary");
  VertexSet sat = hereditary;
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (sat.count(v) || g.is_sink(v)) continue;
      const auto& outs = g.out_edges(v);
      if (std::all_of(outs.begin(), outs.end(),
                      [&](EdgeId e) { return sat.count(g.edge(e).dst) > 0; })) {
        sat.insert(v);
        grew = true;
      }
    }
  }
  return sat;
}

/// The graph (H, s^{-1}(H), s, r) for a hereditary H, names and labels kept.
inline DirectedMultigraph hereditary_subgraph(const DirectedMultigraph& g, const VertexSet& h) {
  if (!is_hereditary(g, h)) throw GraphError("hereditary_subgraph: vertex set is not hereditary");
  DirectedMultigraph out;
  for (VertexId v : h) out.add_vertex(g.vertex_name(v));
  for (const Edge& e : g.edges())
    if (h.count(e.src))
      out.add_edge(e.name, g.vertex_name(e.src), g.vertex_name(e.dst), e.label);
  return out;
}

// ---------------------------------------------------------------------------
// Text formats

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace detail

inline constexpr std::string_view kGraphGrammar =
    "Graph file format (UTF-8, line-oriented):\n"
    "  # ...                       comment line (ignored); blank lines ignored\n"
    "  vertex NAME                 declare a vertex\n"
    "  edge NAME SRC DST [LABEL]   declare an edge SRC -> DST with an optional\n"
    "                              group label (comma-joined integers)\n"
    "  NAME matches [A-Za-z0-9_@.-]+; endpoints must be declared before use.\n";

/// Parses the line-oriented graph format. Errors carry the line number.
inline DirectedMultigraph parse_graph(std::string_view text) {
  DirectedMultigraph g;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    try {
      if (toks[0] == "vertex") {
        if (toks.size() != 2) throw ParseError(lineno, "expected 'vertex NAME'");
        g.add_vertex(std::string(toks[1]));
      } else if (toks[0] == "edge") {
        if (toks.size() != 4 && toks.size() != 5)
          throw ParseError(lineno, "expected 'edge NAME SRC DST [LABEL]'");
        auto src = g.find_vertex(toks[2]);
        if (!src) throw ParseError(lineno, "endpoint '" + std::string(toks[2]) + "' undeclared");
        auto dst = g.find_vertex(toks[3]);
        if (!dst) throw ParseError(lineno, "endpoint '" + std::string(toks[3]) + "' undeclared");
        g.add_edge(std::string(toks[1]), *src, *dst,
                   toks.size() == 5 ? std::string(toks[4]) : std::string());
      } else {
        throw ParseError(lineno, "unknown declaration '" + std::string(toks[0]) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const GraphError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return g;
}

/// Emits the graph file format: vertices, then edges, each in insertion order.
inline std::string serialize(const DirectedMultigraph& g) {
  std::ostringstream os;
  for (const auto& name : g.vertex_names()) os << "vertex " << name << '\n';
  for (const Edge& e : g.edges()) {
    os << "edge " << e.name << ' ' << g.vertex_name(e.src) << ' ' << g.vertex_name(e.dst);
    if (!e.label.empty()) os << ' ' << e.label;
    os << '\n';
  }
  return os.str();
}

/// Graphviz digraph; nodes and edges sorted by name, one arrow per edge.
inline std::string to_dot(const DirectedMultigraph& g, std::string_view graph_name = "G") {
  std::vector<std::string> names = g.vertex_names();
  std::sort(names.begin(), names.end());
  std::vector<const Edge*> edges;
  for (const Edge& e : g.edges()) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(),
            [](const Edge* a, const Edge* b) { return a->name < b->name; });
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n";
  for (const auto& n : names) os << "  \"" << n << "\";\n";
  for (const Edge* e : edges)
    os << "  \"" << g.vertex_name(e->src) << "\" -> \"" << g.vertex_name(e->dst)
       << "\" [label=\"" << e->name << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace gcorner
