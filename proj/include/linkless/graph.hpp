#pragma once

// Small simple undirected graphs stored as one 32-bit neighbor mask per
// vertex. Values are immutable: every structural operation returns a new
// graph, so instances can be shared freely between threads.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace linkless {

inline constexpr int kMaxVertices = 32;

/// Bit i set <=> vertex i is a member.
using VertexSet = std::uint32_t;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr VertexSet all_vertices(int n) {
  return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

/// Visits every member of `s` in increasing order.
template <typename Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    fn(lowest(s));
    s &= s - 1;
  }
}

struct Edge {
  int u = 0;
  int v = 0;

  /// Normalizes the endpoints so that u < v.
  static constexpr Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> sequence;  // ascending

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices. Throws CapacityExceeded unless 0 <= n <= 32.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_adjacency(int n, std::span<const VertexSet> rows);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph complete_bipartite(int a, int b);

  int order() const { return n_; }
  int size() const;
  VertexSet vertices() const { return all_vertices(n_); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0; }
  int degree(int v) const { return popcount(neighbors(v)); }
  std::span<const VertexSet> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  /// Union of the neighborhoods of the members of `s`.
  VertexSet neighborhood(VertexSet s) const;

  /// Edges in lexicographic order of (u, v), u < v.
  std::vector<Edge> edges() const;
  /// Non-adjacent pairs in lexicographic order.
  std::vector<Edge> non_edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  /// Deletes v; vertices above v shift down by one.
  Graph without_vertex(int v) const;
  /// Subgraph induced by `keep`, relabeled to 0..|keep|-1 in increasing order.
  Graph induced(VertexSet keep) const;
  /// Relabels vertex i to perm[i].
  Graph permuted(std::span<const int> perm) const;

  /// Vertices reachable from `start` using only vertices in `allowed`.
  VertexSet reachable(VertexSet start, VertexSet allowed) const;
  bool is_connected() const;
  /// Vertex sets of the connected components, ordered by smallest member.
  std::vector<VertexSet> components() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

Graph complement(const Graph& g);

/// Identifies the endpoints of every edge in `edges` and simplifies the
/// result. The edge set must be a forest; the surviving vertices are numbered
/// by the smallest original vertex of each class, in increasing order.
/// Throws NotAnEdge or NotAForest.
Graph contract_edges(const Graph& g, std::span<const Edge> edges);

/// True iff g stays connected after deleting any fewer than k vertices.
/// Requires 0 <= k < n.
bool vertex_connectivity_at_least(const Graph& g, int k);

bool is_triangular_edge(const Graph& g, Edge e);
bool is_triangular(const Graph& g);
std::vector<Edge> non_triangular_edges(const Graph& g);
/// Number of triangles in g.
long triangle_count(const Graph& g);

/// Adds a vertex (numbered n) adjacent to every existing vertex.
Graph cone(const Graph& g);

/// Glues g2 onto g1 by identifying g2's `shared2[i]` with g1's `shared1[i]`.
/// Both lists must induce cliques of the same size. g1 keeps its labels; the
/// remaining vertices of g2 follow in increasing order.
Graph clique_sum(const Graph& g1, const Graph& g2, std::span<const int> shared1,
                 std::span<const int> shared2);

DegreeProfile degree_profile(const Graph& g);

/// Human readable edge list, e.g. "n=4 [0-1 0-2 1-2]".
std::string to_string(const Graph& g);

}  // namespace linkless
