#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "gcorner/error.hpp"
#include "gcorner/multigraph.hpp"
#include "gcorner/smith.hpp"

namespace gcorner {

/// A[v][w] = number of edges v -> w, rows and columns in vertex order.
inline IntegerMatrix vertex_matrix(const DirectedMultigraph& g) {
  IntegerMatrix a(g.vertex_count(), g.vertex_count());
  a.row_labels = g.vertex_names();
  a.col_labels = g.vertex_names();
  for (const Edge& e : g.edges()) a(e.src, e.dst) += 1;
  return a;
}

/// K_0 = Z^free_rank (+) Z/d_1 (+) ...,  K_1 = Z^k1_rank.
struct KTheoryResult {
  std::vector<BigInt> k0_invariant_factors;  // all > 1, each divides the next
  std::size_t k0_free_rank = 0;
  std::size_t k1_rank = 0;

  friend bool operator==(const KTheoryResult&, const KTheoryResult&) = default;
};

inline std::string to_string(const KTheoryResult& k) {
  std::ostringstream os;
  os << "K0 = Z^" << k.k0_free_rank;
  for (const auto& d : k.k0_invariant_factors) os << " (+) Z/" << d;
  os << "\nK1 = Z^" << k.k1_rank << "\n";
  return os.str();
}

/// The map Z^{regular} -> Z^{E^0} given by (A^t - I) restricted to the
/// columns of regular vertices (those emitting at least one edge). Entry
/// [w][v] = A[v][w] - [v == w].
inline IntegerMatrix k_theory_matrix(const DirectedMultigraph& g) {
  std::vector<VertexId> regular;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!g.is_sink(v)) regular.push_back(v);
  IntegerMatrix a = vertex_matrix(g);
  IntegerMatrix m(g.vertex_count(), regular.size());
  m.row_labels = g.vertex_names();
  for (std::size_t j = 0; j < regular.size(); ++j) {
    VertexId v = regular[j];
    m.col_labels.push_back(g.vertex_name(v));
    for (VertexId w = 0; w < g.vertex_count(); ++w) m(w, j) = a(v, w) - (v == w ? 1 : 0);
  }
  return m;
}

/// K_0 is the cokernel and K_1 the kernel of k_theory_matrix(g).
inline KTheoryResult k_theory(const DirectedMultigraph& g) {
  IntegerMatrix m = k_theory_matrix(g);
  SmithForm snf = smith_normal_form(m);
  KTheoryResult k;
  k.k0_free_rank = m.rows() - snf.rank;
  k.k1_rank = m.cols() - snf.rank;
  for (const auto& d : snf.factors)
    if (d > 1) k.k0_invariant_factors.push_back(d);
  return k;
}

/// Sorted multiset of matrix-block sizes.
using DimVector = std::vector<BigInt>;

inline std::string to_string(const DimVector& dims) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? " " : "") << dims[i];
  return os.str();
}

/// For a finite acyclic graph, one block per sink v of size p(v), the number
/// of paths (length 0 included) ending at v. p is computed by dynamic
/// programming in topological order.
inline DimVector fd_dimension_vector(const DirectedMultigraph& g) {
  std::vector<VertexId> order = topological_order(g);  // throws on a cycle
  std::vector<BigInt> paths_into(g.vertex_count(), 1);
  for (VertexId v : order)
    for (EdgeId e : g.out_edges(v)) paths_into[g.edge(e).dst] += paths_into[v];
  DimVector dims;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v)) dims.push_back(paths_into[v]);
  std::sort(dims.begin(), dims.end());
  return dims;
}

/// Block sizes of the compression of C*(E) by the projection onto X, for
/// acyclic E: m(v) = number of paths from X to the sink v, zero blocks
/// dropped. Counted by enumerating every path out of X one at a time; this
/// does not go through the corner construction.
inline DimVector corner_dimension_vector(const DirectedMultigraph& g, const VertexSet& xs) {
  check_vertices(g, xs);
  if (!is_acyclic(g)) throw GraphError("corner_dimension_vector: graph contains a directed cycle");
  std::vector<BigInt> ending_at(g.vertex_count(), 0);
  for (VertexId x : xs) {
    // Explicit DFS over paths: each stack entry is one path's endpoint.
    std::vector<VertexId> stack{x};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ending_at[v] += 1;
      for (EdgeId e : g.out_edges(v)) stack.push_back(g.edge(e).dst);
    }
  }
  DimVector dims;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.is_sink(v) && ending_at[v] > 0) dims.push_back(ending_at[v]);
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace gcorner
