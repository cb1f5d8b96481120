#pragma once

#include <string>

#include "gcorner/multigraph.hpp"

namespace gcorner::testing {

/// One vertex v with loops e and f.
inline DirectedMultigraph rose2() {
  return parse_graph("vertex v\nedge e v v\nedge f v v\n");
}

/// ROSE2 labelled over Z_3 with c(e) = 2, c(f) = 1.
inline DirectedMultigraph rose2_z3() {
  return parse_graph("vertex v\nedge e v v 2\nedge f v v 1\n");
}

/// One vertex with k loops l0..l{k-1}.
inline DirectedMultigraph rose(int k) {
  DirectedMultigraph g;
  g.add_vertex("v");
  for (int i = 0; i < k; ++i) g.add_edge("l" + std::to_string(i), "v", "v");
  return g;
}

/// Three vertices on a triangle with edges both ways.
inline DirectedMultigraph cyc6() {
  return parse_graph(
      "vertex v0\nvertex v1\nvertex v2\n"
      "edge e1 v0 v1\nedge e2 v1 v2\nedge e0 v2 v0\n"
      "edge f2 v0 v2\nedge f1 v2 v1\nedge f0 v1 v0\n");
}

/// u -> v via the single edge e.
inline DirectedMultigraph edge1() { return parse_graph("vertex u\nvertex v\nedge e u v\n"); }

/// Loops at u, v, w; p edges u->v (e, e2, ...), q edges v->w (f, f2, ...),
/// r edges u->w (g, g2, ...).
inline DirectedMultigraph pqr(int p, int q, int r) {
  DirectedMultigraph g;
  g.add_vertex("u");
  g.add_vertex("v");
  g.add_vertex("w");
  g.add_edge("lu", "u", "u");
  g.add_edge("lv", "v", "v");
  g.add_edge("lw", "w", "w");
  auto bundle = [&](const std::string& base, int n, const char* s, const char* d) {
    for (int i = 1; i <= n; ++i) g.add_edge(i == 1 ? base : base + std::to_string(i), s, d);
  };
  bundle("e", p, "u", "v");
  bundle("f", q, "v", "w");
  bundle("g", r, "u", "w");
  return g;
}

}  // namespace gcorner::testing
