#pragma once

#include <string>
#include <vector>

#include "gcorner/multigraph.hpp"
#include "gcorner/subtree.hpp"

namespace gcorner {

/// Where a corner edge e_u came from.
struct CornerEdgeOrigin {
  EdgeId host_edge;  // e
  VertexId target;   // u, a host vertex id

  friend bool operator==(const CornerEdgeOrigin&, const CornerEdgeOrigin&) = default;
};

/// The T-corner E(T). Vertex names are host vertex names; the edge e_u is
/// named "e@u".
struct CornerGraph {
  DirectedMultigraph graph;
  std::vector<VertexId> host_vertex;         // corner vertex id -> host vertex id
  std::vector<CornerEdgeOrigin> provenance;  // corner edge id -> (e, u)
};

/// v in T^0 stays in E(T)^0 unless it emits edges and every one is a tree edge.
inline bool survives_in_corner(const DirectedMultigraph& host, const DirectedSubtree& t,
                               VertexId v) {
  const auto& outs = host.out_edges(v);
  if (outs.empty()) return true;
  for (EdgeId e : outs)
    if (!t.is_tree_edge(e)) return true;
  return false;
}

/// E(T)^0 = T^0 minus {v : {} != s^{-1}(v) subset of T^1};
/// E(T)^1 = {e_u : e in s^{-1}(T^0) \ T^1, u in E(T)^0, r(e) >=_T u},
/// with s(e_u) = s(e) and r(e_u) = u.
inline CornerGraph corner_graph(const DirectedMultigraph& host, const DirectedSubtree& t) {
  CornerGraph out;
  std::vector<bool> keep(host.vertex_count(), false);
  for (VertexId v : t.vertices()) {
    if (!survives_in_corner(host, t, v)) continue;
    keep[v] = true;
    out.graph.add_vertex(host.vertex_name(v));
    out.host_vertex.push_back(v);
  }
  for (EdgeId e = 0; e < host.edge_count(); ++e) {
    const Edge& ed = host.edge(e);
    if (!t.contains(ed.src) || t.is_tree_edge(e)) continue;
    // r(e) is in T^0 because T^0 is hereditary.
    for (VertexId u : descendants(host, t, ed.dst)) {
      if (!keep[u]) continue;
      out.graph.add_edge(ed.name + "@" + host.vertex_name(u), host.vertex_name(ed.src),
                         host.vertex_name(u));
      out.provenance.push_back({e, u});
    }
  }
  return out;
}

/// Renames vertices to v0, v1, ... and edges to e0, e1, ... in order.
inline DirectedMultigraph relabel_compact(const DirectedMultigraph& g) {
  DirectedMultigraph out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.add_vertex("v" + std::to_string(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out.add_edge("e" + std::to_string(e), g.edge(e).src, g.edge(e).dst, g.edge(e).label);
  return out;
}

}  // namespace gcorner
