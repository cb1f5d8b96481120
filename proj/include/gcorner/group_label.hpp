#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcorner/corner.hpp"
#include "gcorner/error.hpp"
#include "gcorner/group.hpp"
#include "gcorner/multigraph.hpp"
#include "gcorner/subtree.hpp"

namespace gcorner {

/// c: E^1 -> G, indexed by host edge id.
struct Labelling {
  GroupSpec group;
  std::vector<GroupElement> labels;

  const GroupElement& operator()(EdgeId e) const {
    if (e >= labels.size()) throw GraphError("edge id " + std::to_string(e) + " is not labelled");
    return labels[e];
  }
};

/// Reads each edge's optional label column; unlabelled edges get the identity.
inline Labelling labelling_from_graph(const DirectedMultigraph& g, const GroupSpec& group) {
  Labelling c{group, {}};
  c.labels.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    try {
      c.labels.push_back(e.label.empty() ? group.identity() : group.parse_element(e.label));
    } catch (const GraphError& err) {
      throw GraphError("edge '" + e.name + "': " + err.what());
    }
  }
  return c;
}

/// Every edge gets the same label.
inline Labelling constant_labelling(const DirectedMultigraph& g, const GroupSpec& group,
                                    const GroupElement& value) {
  return Labelling{group, std::vector<GroupElement>(g.edge_count(), group.canonical(value))};
}

/// c(mu) = c(mu_1) c(mu_2) ... c(mu_|mu|); the identity for a length-0 path.
inline GroupElement path_label(const Labelling& c, const Path& mu) {
  GroupElement acc = c.group.identity();
  for (EdgeId e : mu.edges) acc = c.group.op(acc, c(e));
  return acc;
}

// ---------------------------------------------------------------------------
// Skew products

/// A (piece of a) skew product E x_c G, with each vertex and edge tied back
/// to its host item and group coordinate. Vertex (v, g) is named "v@g" and
/// edge (e, g) is named "e@g".
struct SkewGraph {
  DirectedMultigraph graph;
  GroupSpec group;
  std::vector<VertexId> base_vertex;
  std::vector<GroupElement> vertex_group;
  std::vector<EdgeId> base_edge;
  std::vector<GroupElement> edge_group;
};

namespace detail {

inline std::string skew_name(const std::string& base, const GroupSpec& group,
                             const GroupElement& g) {
  return base + "@" + group.encode_for_name(g);
}

inline void check_labelling(const DirectedMultigraph& e, const Labelling& c) {
  if (c.labels.size() != e.edge_count())
    throw GraphError("labelling covers " + std::to_string(c.labels.size()) + " edges, graph has " +
                     std::to_string(e.edge_count()));
}

}  // namespace detail

/// Full skew product for a finite group: s(e,g) = (s(e), c(e) g) and
/// r(e,g) = (r(e), g).
inline SkewGraph skew_product(const DirectedMultigraph& e, const Labelling& c) {
  detail::check_labelling(e, c);
  const GroupSpec& grp = c.group;
  if (!grp.is_finite())
    throw GraphError("skew_product needs a finite group; use reachable_skew for " + grp.to_string());
  auto elems = grp.elements();
  SkewGraph s{{}, grp, {}, {}, {}, {}};
  std::map<std::pair<VertexId, GroupElement>, VertexId> index;
  for (VertexId v = 0; v < e.vertex_count(); ++v)
    for (const auto& g : elems) {
      index[{v, g}] = s.graph.add_vertex(detail::skew_name(e.vertex_name(v), grp, g));
      s.base_vertex.push_back(v);
      s.vertex_group.push_back(g);
    }
  for (EdgeId id = 0; id < e.edge_count(); ++id) {
    const Edge& ed = e.edge(id);
    for (const auto& g : elems) {
      VertexId src = index.at({ed.src, grp.op(c(id), g)});
      VertexId dst = index.at({ed.dst, g});
      s.graph.add_edge(detail::skew_name(ed.name, grp, g), src, dst);
      s.base_edge.push_back(id);
      s.edge_group.push_back(g);
    }
  }
  return s;
}

/// The part of E x_c G induced on H(E^0 x {1}), explored breadth-first from
/// every (v, 1) in host vertex order.
///
/// Stepping forward along (e, g) from (v, t) requires t = c(e) g, so the edge
/// taken is (e, c(e)^{-1} t) and it lands on (r(e), c(e)^{-1} t).
/// Throws CapExceeded once the closure needs more than `cap` vertices.
inline SkewGraph reachable_skew(const DirectedMultigraph& e, const Labelling& c, std::size_t cap) {
  detail::check_labelling(e, c);
  if (cap < e.vertex_count())
    throw GraphError("cap " + std::to_string(cap) + " is smaller than the vertex count " +
                     std::to_string(e.vertex_count()));
  const GroupSpec& grp = c.group;
  SkewGraph s{{}, grp, {}, {}, {}, {}};
  std::map<std::pair<VertexId, GroupElement>, VertexId> index;
  auto intern = [&](VertexId v, const GroupElement& g) {
    auto [it, fresh] = index.try_emplace({v, g}, s.graph.vertex_count());
    if (fresh) {
      if (s.graph.vertex_count() >= cap) throw CapExceeded(cap);
      s.graph.add_vertex(detail::skew_name(e.vertex_name(v), grp, g));
      s.base_vertex.push_back(v);
      s.vertex_group.push_back(g);
    }
    return it->second;
  };
  for (VertexId v = 0; v < e.vertex_count(); ++v) intern(v, grp.identity());
  // Vertex ids are handed out in discovery order, so scanning ids is a BFS.
  for (VertexId cur = 0; cur < s.graph.vertex_count(); ++cur) {
    VertexId base = s.base_vertex[cur];
    GroupElement t = s.vertex_group[cur];
    for (EdgeId id : e.out_edges(base)) {
      GroupElement g = grp.op(grp.inverse(c(id)), t);
      VertexId dst = intern(e.edge(id).dst, g);
      s.graph.add_edge(detail::skew_name(e.edge(id).name, grp, g), cur, dst);
      s.base_edge.push_back(id);
      s.edge_group.push_back(g);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Kirchhoff voltage condition

enum class Verdict { pass, fail, unknown };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::unknown: return "UNKNOWN";
  }
  return "?";
}

/// An infinite run whose accumulated label never returns to the identity:
/// follow `prefix` from `start`, then repeat `cycle` forever.
struct KirchhoffCertificate {
  VertexId start;
  std::vector<EdgeId> prefix;
  std::vector<EdgeId> cycle;
};

struct KirchhoffResult {
  Verdict verdict;
  std::optional<KirchhoffCertificate> certificate;
};

/// Vertices from which an infinite path starts, i.e. that reach a cycle.
inline std::vector<bool> vertices_with_infinite_paths(const DirectedMultigraph& g) {
  // Peel vertices whose out-edges all lead to peeled vertices; what remains
  // (and only that) supports an infinite path.
  std::vector<std::size_t> live_out(g.vertex_count());
  std::vector<bool> infinite(g.vertex_count(), true);
  std::deque<VertexId> q;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    live_out[v] = g.out_edges(v).size();
    if (live_out[v] == 0) q.push_back(v);
  }
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    infinite[v] = false;
    for (EdgeId e : g.in_edges(v))
      if (--live_out[g.edge(e).src] == 0) q.push_back(g.edge(e).src);
  }
  return infinite;
}

/// Does every infinite path mu have a prefix mu_1..mu_i (i >= 1) with
/// c(mu_1..mu_i) = 1?
///
/// Runs the state graph on (vertex, accumulated label), starting from every
/// (v, 1) at step 0, with identity states at step >= 1 removed. A cycle in
/// what remains is an infinite run that never hits the identity, so FAIL.
/// For finite groups this is exact. With infinite factors, states whose
/// infinite coordinates exceed `bound` are not explored; if any were cut off
/// and no cycle was found, the answer is UNKNOWN.
inline KirchhoffResult kirchhoff_check(const DirectedMultigraph& e, const Labelling& c,
                                       std::int64_t bound) {
  detail::check_labelling(e, c);
  const GroupSpec& grp = c.group;
  auto infinite = vertices_with_infinite_paths(e);
  using State = std::pair<VertexId, GroupElement>;
  enum Color { white, gray, black };
  std::map<State, Color> color;
  bool truncated = false;

  struct Frame {
    State state;
    std::size_t next_edge;
    EdgeId via;  // edge that led here; unused for the start frame
  };

  for (VertexId v0 = 0; v0 < e.vertex_count(); ++v0) {
    if (!infinite[v0]) continue;
    std::vector<Frame> stack{{{v0, grp.identity()}, 0, 0}};
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto& outs = e.out_edges(top.state.first);
      if (top.next_edge == outs.size()) {
        if (stack.size() > 1) color[top.state] = black;
        stack.pop_back();
        continue;
      }
      EdgeId id = outs[top.next_edge++];
      VertexId w = e.edge(id).dst;
      GroupElement acc = grp.op(top.state.second, c(id));
      if (!infinite[w] || grp.is_identity(acc)) continue;
      if (grp.infinite_norm(acc) > bound) {
        truncated = true;
        continue;
      }
      State next{w, acc};
      Color& col = color[next];
      if (col == black) continue;
      if (col == gray) {
        KirchhoffCertificate cert{v0, {}, {}};
        std::size_t entry = 1;
        while (stack[entry].state != next) ++entry;
        for (std::size_t i = 1; i <= entry; ++i) cert.prefix.push_back(stack[i].via);
        for (std::size_t i = entry + 1; i < stack.size(); ++i) cert.cycle.push_back(stack[i].via);
        cert.cycle.push_back(id);
        return {Verdict::fail, std::move(cert)};
      }
      col = gray;
      stack.push_back({std::move(next), 0, id});
    }
  }
  return {truncated ? Verdict::unknown : Verdict::pass, std::nullopt};
}

/// Result of the loops-only diagnostic: the first vertex-simple cycle (in
/// enumeration order) whose label is not the identity, if any.
struct LoopLabelResult {
  bool all_trivial;
  bool complete;  // false if enumeration stopped at the cycle limit
  std::optional<Path> witness;
};

/// Checks c(lambda) = 1 over vertex-simple cycles lambda. Each cycle is
/// enumerated once, from its smallest vertex id.
inline LoopLabelResult check_cycle_labels(const DirectedMultigraph& e, const Labelling& c,
                                          std::size_t cycle_limit = 1'000'000) {
  detail::check_labelling(e, c);
  std::size_t seen = 0;
  for (VertexId s = 0; s < e.vertex_count(); ++s) {
    std::vector<bool> on_path(e.vertex_count(), false);
    std::vector<EdgeId> path;
    std::vector<std::size_t> cursor{0};
    on_path[s] = true;
    while (!cursor.empty()) {
      VertexId at = path.empty() ? s : e.edge(path.back()).dst;
      const auto& outs = e.out_edges(at);
      if (cursor.back() == outs.size()) {
        cursor.pop_back();
        if (!path.empty()) {
          on_path[e.edge(path.back()).dst] = false;
          path.pop_back();
        }
        continue;
      }
      EdgeId id = outs[cursor.back()++];
      VertexId w = e.edge(id).dst;
      if (w == s) {
        path.push_back(id);
        Path cyc{s, path};
        path.pop_back();
        if (!c.group.is_identity(path_label(c, cyc))) return {false, true, std::move(cyc)};
        if (++seen >= cycle_limit) return {true, false, std::nullopt};
        continue;
      }
      if (w < s || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(id);
      cursor.push_back(0);
    }
  }
  return {true, true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Fixed-point pipeline

struct FixedPointResult {
  SkewGraph skew;          // H(E^0 x {1}) inside E x_c G
  DirectedSubtree tree;    // BFS subtree of `skew.graph` rooted at E^0 x {1}
  CornerGraph corner;      // its T-corner; presents C*(E)^delta
};

/// Vertex ids of E^0 x {1} inside a skew graph.
inline VertexSet identity_layer(const SkewGraph& s) {
  VertexSet out;
  for (VertexId v = 0; v < s.graph.vertex_count(); ++v)
    if (s.group.is_identity(s.vertex_group[v])) out.insert(v);
  return out;
}

/// Skew product closure, then the BFS subtree rooted at E^0 x {1}, then its
/// T-corner. Throws CapExceeded when the closure is larger than `cap`.
inline FixedPointResult fixed_point_graph(const DirectedMultigraph& e, const Labelling& c,
                                          std::size_t cap) {
  if (e.vertex_count() == 0) throw GraphError("fixed_point_graph: graph has no vertices");
  FixedPointResult r;
  r.skew = reachable_skew(e, c, cap);
  r.tree = build_spanning_subtree(r.skew.graph, identity_layer(r.skew));
  r.corner = corner_graph(r.skew.graph, r.tree);
  return r;
}

}  // namespace gcorner
