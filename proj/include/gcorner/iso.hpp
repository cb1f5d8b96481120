#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "gcorner/error.hpp"
#include "gcorner/multigraph.hpp"

namespace gcorner {

struct IsoResult {
  bool isomorphic = false;
  std::vector<VertexId> witness;  // witness[v1] = v2 when isomorphic
};

namespace detail {

using Multiplicity = std::vector<std::vector<std::size_t>>;

inline Multiplicity multiplicity(const DirectedMultigraph& g) {
  Multiplicity m(g.vertex_count(), std::vector<std::size_t>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) ++m[e.src][e.dst];
  return m;
}

// (out-degree, in-degree, loop count)
using Signature = std::tuple<std::size_t, std::size_t, std::size_t>;

inline std::vector<Signature> signatures(const DirectedMultigraph& g, const Multiplicity& m) {
  std::vector<Signature> s;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    s.emplace_back(g.out_edges(v).size(), g.in_edges(v).size(), m[v][v]);
  return s;
}

}  // namespace detail

/// True iff `perm` carries a's multiplicity matrix exactly onto b's.
inline bool is_witness(const DirectedMultigraph& a, const DirectedMultigraph& b,
                       const std::vector<VertexId>& perm) {
  if (a.vertex_count() != b.vertex_count() || perm.size() != a.vertex_count()) return false;
  std::vector<bool> hit(b.vertex_count(), false);
  for (VertexId w : perm) {
    if (w >= b.vertex_count() || hit[w]) return false;
    hit[w] = true;
  }
  auto ma = detail::multiplicity(a), mb = detail::multiplicity(b);
  for (VertexId i = 0; i < a.vertex_count(); ++i)
    for (VertexId j = 0; j < a.vertex_count(); ++j)
      if (ma[i][j] != mb[perm[i]][perm[j]]) return false;
  return true;
}

/// Multigraph isomorphism by backtracking over vertex bijections that
/// preserve edge multiplicities; edge names are ignored. Candidates are
/// pruned by (out-degree, in-degree, loops). Throws if either graph has more
/// than `max_vertices` vertices.
inline IsoResult are_isomorphic(const DirectedMultigraph& a, const DirectedMultigraph& b,
                                std::size_t max_vertices = 12) {
  if (a.vertex_count() > max_vertices || b.vertex_count() > max_vertices)
    throw GraphError("isomorphism search is limited to " + std::to_string(max_vertices) +
                     " vertices");
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return {};
  auto ma = detail::multiplicity(a), mb = detail::multiplicity(b);
  auto sa = detail::signatures(a, ma), sb = detail::signatures(b, mb);
  {
    auto xa = sa, xb = sb;
    std::sort(xa.begin(), xa.end());
    std::sort(xb.begin(), xb.end());
    if (xa != xb) return {};
  }

  std::vector<VertexId> perm(n, 0);
  std::vector<bool> used(n, false);
  // Depth-first over a's vertices in order; candidate images in b's order.
  std::vector<VertexId> next_candidate(n + 1, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == n) return {true, perm};
    bool placed = false;
    for (VertexId w = next_candidate[depth]; w < n; ++w) {
      if (used[w] || sa[depth] != sb[w]) continue;
      bool ok = true;
      for (VertexId p = 0; p < depth && ok; ++p)
        ok = ma[depth][p] == mb[w][perm[p]] && ma[p][depth] == mb[perm[p]][w];
      if (!ok) continue;
      perm[depth] = w;
      used[w] = true;
      next_candidate[depth] = w + 1;
      ++depth;
      next_candidate[depth] = 0;
      placed = true;
      break;
    }
    if (placed) continue;
    if (depth == 0) return {};
    --depth;
    used[perm[depth]] = false;
  }
}

}  // namespace gcorner
