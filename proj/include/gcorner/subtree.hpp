#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gcorner/error.hpp"
#include "gcorner/multigraph.hpp"

namespace gcorner {

enum class ViolationKind {
  unknown_name,
  in_degree,          // a vertex receives more than one tree edge
  cycle,              // the tree edges contain a directed cycle
  root_mismatch,      // receiving-no-tree-edge vertices differ from X
  endpoint_outside,   // a tree edge has an endpoint outside H_E(X)
  empty_roots,
};

struct SubtreeViolation {
  ViolationKind kind;
  std::string detail;
};

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::unknown_name: return "unknown-name";
    case ViolationKind::in_degree: return "in-degree";
    case ViolationKind::cycle: return "cycle";
    case ViolationKind::root_mismatch: return "root-mismatch";
    case ViolationKind::endpoint_outside: return "endpoint-outside";
    case ViolationKind::empty_roots: return "empty-roots";
  }
  return "?";
}

class InvalidSubtree : public GraphError {
 public:
  explicit InvalidSubtree(std::vector<SubtreeViolation> violations)
      : GraphError(describe(violations)), violations_(std::move(violations)) {}

  const std::vector<SubtreeViolation>& violations() const noexcept { return violations_; }

  bool has(ViolationKind k) const {
    return std::any_of(violations_.begin(), violations_.end(),
                       [k](const SubtreeViolation& v) { return v.kind == k; });
  }

 private:
  static std::string describe(const std::vector<SubtreeViolation>& vs) {
    std::ostringstream os;
    os << "invalid subtree:";
    for (const auto& v : vs) os << "\n  " << to_string(v.kind) << ": " << v.detail;
    return os.str();
  }

  std::vector<SubtreeViolation> violations_;
};

/// A directed subtree T of a host graph E with T^r = X and T^0 = H_E(X).
///
/// Only obtainable through validate_subtree or build_spanning_subtree, so a
/// value of this type always satisfies those invariants. It does not hold a
/// reference to the host; operations that need host data take it explicitly.
class DirectedSubtree {
 public:
  const std::vector<EdgeId>& tree_edges() const noexcept { return tree_edges_; }
  const VertexSet& vertices() const noexcept { return vertices_; }
  const VertexSet& roots() const noexcept { return roots_; }

  bool contains(VertexId v) const { return vertices_.count(v) > 0; }
  bool is_tree_edge(EdgeId e) const { return e < is_tree_edge_.size() && is_tree_edge_[e]; }

  /// The unique tree edge entering v, if v is not a root.
  std::optional<EdgeId> parent_edge(VertexId v) const {
    require(v);
    return parent_edge_[v];
  }
  /// Tree edges leaving v, in host insertion order.
  const std::vector<EdgeId>& child_edges(VertexId v) const {
    require(v);
    return child_edges_[v];
  }
  /// |tau(v)|.
  std::size_t depth(VertexId v) const {
    require(v);
    return depth_[v];
  }
  /// Vertices of T^0 emitting no tree edge (T^l).
  VertexSet leaves() const {
    VertexSet out;
    for (VertexId v : vertices_)
      if (child_edges_[v].empty()) out.insert(v);
    return out;
  }

  friend bool operator==(const DirectedSubtree& a, const DirectedSubtree& b) {
    return a.tree_edges_ == b.tree_edges_ && a.vertices_ == b.vertices_ && a.roots_ == b.roots_;
  }

 private:
  void require(VertexId v) const {
    if (!contains(v)) throw GraphError("vertex id " + std::to_string(v) + " is not in the subtree");
  }

  friend DirectedSubtree validate_subtree(const DirectedMultigraph&, const std::vector<EdgeId>&,
                                          const VertexSet&);

  std::vector<EdgeId> tree_edges_;
  VertexSet vertices_;
  VertexSet roots_;
  std::vector<bool> is_tree_edge_;
  std::vector<std::optional<EdgeId>> parent_edge_;
  std::vector<std::vector<EdgeId>> child_edges_;
  std::vector<std::size_t> depth_;
};

/// Checks (E, T^1, X) against the subtree conditions and returns the
/// validated subtree with T^0 := H_E(X). Throws InvalidSubtree listing every
/// violation found.
inline DirectedSubtree validate_subtree(const DirectedMultigraph& host,
                                        const std::vector<EdgeId>& tree_edges,
                                        const VertexSet& roots) {
  std::vector<SubtreeViolation> bad;
  for (VertexId v : roots)
    if (v >= host.vertex_count())
      bad.push_back({ViolationKind::unknown_name, "root id " + std::to_string(v)});
  for (EdgeId e : tree_edges)
    if (e >= host.edge_count())
      bad.push_back({ViolationKind::unknown_name, "edge id " + std::to_string(e)});
  if (roots.empty()) bad.push_back({ViolationKind::empty_roots, "root set is empty"});
  if (!bad.empty()) throw InvalidSubtree(std::move(bad));

  DirectedSubtree t;
  t.vertices_ = hereditary_closure(host, roots);
  t.is_tree_edge_.assign(host.edge_count(), false);
  t.parent_edge_.assign(host.vertex_count(), std::nullopt);
  t.child_edges_.assign(host.vertex_count(), {});
  t.depth_.assign(host.vertex_count(), 0);

  for (EdgeId e : tree_edges) {
    if (t.is_tree_edge_[e]) continue;  // repeated name in the input list
    t.is_tree_edge_[e] = true;
    const Edge& ed = host.edge(e);
    if (!t.vertices_.count(ed.src) || !t.vertices_.count(ed.dst)) {
      bad.push_back({ViolationKind::endpoint_outside,
                     "edge " + ed.name + " (" + host.vertex_name(ed.src) + " -> " +
                         host.vertex_name(ed.dst) + ") leaves H_E(X)"});
      continue;
    }
    if (t.parent_edge_[ed.dst]) {
      bad.push_back({ViolationKind::in_degree,
                     "vertex " + host.vertex_name(ed.dst) + " receives " +
                         host.edge(*t.parent_edge_[ed.dst]).name + " and " + ed.name});
      continue;
    }
    t.parent_edge_[ed.dst] = e;
  }
  for (EdgeId e = 0; e < host.edge_count(); ++e)
    if (t.is_tree_edge_[e]) t.tree_edges_.push_back(e);

  for (VertexId v : t.vertices_) {
    bool is_root = roots.count(v) > 0;
    if (is_root && t.parent_edge_[v])
      bad.push_back({ViolationKind::root_mismatch,
                     "root " + host.vertex_name(v) + " receives tree edge " +
                         host.edge(*t.parent_edge_[v]).name});
    if (!is_root && !t.parent_edge_[v])
      bad.push_back({ViolationKind::root_mismatch,
                     "non-root " + host.vertex_name(v) + " receives no tree edge"});
    if (!t.parent_edge_[v]) t.roots_.insert(v);
  }

  // In-degree <= 1, so a cycle shows up as a parent chain that revisits a vertex.
  std::vector<int> state(host.vertex_count(), 0);  // 0 new, 1 on chain, 2 done
  for (VertexId start : t.vertices_) {
    if (state[start]) continue;
    std::vector<VertexId> chain;
    VertexId v = start;
    while (state[v] != 2) {
      if (state[v] == 1) {
        // Walked back onto the current chain: report the cycle through v.
        std::string desc;
        VertexId w = v;
        do {
          EdgeId pe = *t.parent_edge_[w];
          desc = host.edge(pe).name + (desc.empty() ? "" : " ") + desc;
          w = host.edge(pe).src;
        } while (w != v);
        bad.push_back({ViolationKind::cycle, "tree edges " + desc + " form a cycle"});
        break;
      }
      state[v] = 1;
      chain.push_back(v);
      if (!t.parent_edge_[v]) break;
      v = host.edge(*t.parent_edge_[v]).src;
    }
    for (VertexId c : chain) state[c] = 2;
  }
  if (!bad.empty()) throw InvalidSubtree(std::move(bad));

  for (EdgeId e : t.tree_edges_) t.child_edges_[host.edge(e).src].push_back(e);
  // Depths by walking down from the roots.
  std::deque<VertexId> q(t.roots_.begin(), t.roots_.end());
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    for (EdgeId e : t.child_edges_[v]) {
      t.depth_[host.edge(e).dst] = t.depth_[v] + 1;
      q.push_back(host.edge(e).dst);
    }
  }
  return t;
}

inline DirectedSubtree validate_subtree(const DirectedMultigraph& host,
                                        const std::vector<std::string>& tree_edge_names,
                                        const std::vector<std::string>& root_names) {
  std::vector<SubtreeViolation> bad;
  std::vector<EdgeId> edges;
  VertexSet roots;
  for (const auto& n : tree_edge_names) {
    if (auto e = host.find_edge(n)) edges.push_back(*e);
    else bad.push_back({ViolationKind::unknown_name, "edge " + n});
  }
  for (const auto& n : root_names) {
    if (auto v = host.find_vertex(n)) roots.insert(*v);
    else bad.push_back({ViolationKind::unknown_name, "vertex " + n});
  }
  if (!bad.empty()) throw InvalidSubtree(std::move(bad));
  return validate_subtree(host, edges, roots);
}

/// tau(v): the unique tree path from a root to v. Roots map to length-0 paths.
inline Path tau(const DirectedMultigraph& host, const DirectedSubtree& t, VertexId v) {
  if (!t.contains(v)) throw GraphError("tau: vertex '" + host.vertex_name(v) + "' is not in T^0");
  std::vector<EdgeId> rev;
  VertexId at = v;
  while (auto pe = t.parent_edge(at)) {
    rev.push_back(*pe);
    at = host.edge(*pe).src;
  }
  return Path{at, std::vector<EdgeId>(rev.rbegin(), rev.rend())};
}

/// {u in T^0 : v >=_T u}, v included, ordered by tree depth then name.
inline std::vector<VertexId> descendants(const DirectedMultigraph& host, const DirectedSubtree& t,
                                         VertexId v) {
  if (!t.contains(v))
    throw GraphError("descendants: vertex '" + host.vertex_name(v) + "' is not in T^0");
  std::vector<VertexId> out{v};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (EdgeId e : t.child_edges(out[i])) out.push_back(host.edge(e).dst);
  std::sort(out.begin(), out.end(), [&](VertexId a, VertexId b) {
    if (t.depth(a) != t.depth(b)) return t.depth(a) < t.depth(b);
    return host.vertex_name(a) < host.vertex_name(b);
  });
  return out;
}

/// Multi-source BFS distance from X; nullopt for vertices outside H_E(X).
inline std::vector<std::optional<std::size_t>> bfs_distances(const DirectedMultigraph& g,
                                                               const VertexSet& xs) {
  check_vertices(g, xs);
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::deque<VertexId> q;
  for (VertexId x : xs) {
    dist[x] = 0;
    q.push_back(x);
  }
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.edge(e).dst;
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

/// Shortest-path forest from X over H_E(X). Each non-root v at distance n
/// gets the lexicographically smallest edge into v from a vertex at
/// distance n-1.
inline DirectedSubtree build_spanning_subtree(const DirectedMultigraph& g, const VertexSet& xs) {
  if (xs.empty()) throw GraphError("build_spanning_subtree: root set is empty");
  auto dist = bfs_distances(g, xs);
  std::vector<EdgeId> chosen;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!dist[v] || *dist[v] == 0) continue;
    std::optional<EdgeId> best;
    for (EdgeId e : g.in_edges(v)) {
      const auto& ds = dist[g.edge(e).src];
      if (!ds || *ds + 1 != *dist[v]) continue;
      if (!best || g.edge(e).name < g.edge(*best).name) best = e;
    }
    chosen.push_back(*best);
  }
  return validate_subtree(g, chosen, xs);
}

}  // namespace gcorner
