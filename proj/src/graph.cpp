#include "linkless/graph.hpp"

#include <algorithm>
#include <numeric>

#include "linkless/errors.hpp"

namespace linkless {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(g.order()));
  }
}

// Union-find over at most 32 elements, no rank needed at this size.
struct Partition {
  std::array<int, kMaxVertices> parent{};
  explicit Partition(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  }
};

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityExceeded("graph order " + std::to_string(n) + " exceeds " +
                           std::to_string(kMaxVertices));
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    check_vertex(g, e.u);
    check_vertex(g, e.v);
    if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    g.adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    g.adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  return g;
}

Graph Graph::from_adjacency(int n, std::span<const VertexSet> rows) {
  Graph g(n);
  if (rows.size() != static_cast<std::size_t>(n)) throw InvalidArgument("row count mismatch");
  const VertexSet valid = all_vertices(n);
  for (int i = 0; i < n; ++i) {
    const VertexSet r = rows[static_cast<std::size_t>(i)];
    if ((r & ~valid) != 0 || (r & bit(i)) != 0) throw InvalidArgument("invalid adjacency row");
    g.adj_[static_cast<std::size_t>(i)] = r;
  }
  for (int i = 0; i < n; ++i) {
    for_each_vertex(g.adj_[static_cast<std::size_t>(i)], [&](int j) {
      if (!g.adjacent(j, i)) throw InvalidArgument("adjacency is not symmetric");
    });
  }
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.adj_[static_cast<std::size_t>(i)] = all_vertices(n) & ~bit(i);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw TooSmall("a cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back(Edge::of(i, (i + 1) % n));
  return from_edges(n, es);
}

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return from_edges(n, es);
}

Graph Graph::complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) es.push_back({i, a + j});
  }
  return from_edges(a + b, es);
}

int Graph::size() const {
  int total = 0;
  for (int i = 0; i < n_; ++i) total += popcount(adj_[static_cast<std::size_t>(i)]);
  return total / 2;
}

VertexSet Graph::neighborhood(VertexSet s) const {
  VertexSet out = 0;
  for_each_vertex(s, [&](int v) { out |= adj_[static_cast<std::size_t>(v)]; });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(adj_[static_cast<std::size_t>(u)] & ~all_vertices(u + 1),
                    [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    const VertexSet missing = ~adj_[static_cast<std::size_t>(u)] & all_vertices(n_) & ~all_vertices(u + 1);
    for_each_vertex(missing, [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.adj_[static_cast<std::size_t>(u)] |= bit(v);
  g.adj_[static_cast<std::size_t>(v)] |= bit(u);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (!adjacent(u, v)) throw NotAnEdge(std::to_string(u) + "-" + std::to_string(v));
  Graph g = *this;
  g.adj_[static_cast<std::size_t>(u)] &= ~bit(v);
  g.adj_[static_cast<std::size_t>(v)] &= ~bit(u);
  return g;
}

Graph Graph::without_vertex(int v) const {
  check_vertex(*this, v);
  return induced(vertices() & ~bit(v));
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<int, kMaxVertices> index{};
  int next = 0;
  for_each_vertex(keep, [&](int v) { index[static_cast<std::size_t>(v)] = next++; });
  Graph g(next);
  for_each_vertex(keep, [&](int v) {
    VertexSet row = 0;
    for_each_vertex(adj_[static_cast<std::size_t>(v)] & keep,
                    [&](int w) { row |= bit(index[static_cast<std::size_t>(w)]); });
    g.adj_[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])] = row;
  });
  return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw InvalidArgument("permutation size mismatch");
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n_ || (seen & bit(p)) != 0) throw InvalidArgument("not a permutation");
    seen |= bit(p);
  }
  Graph g(n_);
  for (int i = 0; i < n_; ++i) {
    VertexSet row = 0;
    for_each_vertex(adj_[static_cast<std::size_t>(i)],
                    [&](int j) { row |= bit(perm[static_cast<std::size_t>(j)]); });
    g.adj_[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = row;
  }
  return g;
}

VertexSet Graph::reachable(VertexSet start, VertexSet allowed) const {
  VertexSet reach = start & allowed;
  VertexSet frontier = reach;
  while (frontier != 0) {
    const VertexSet next = neighborhood(frontier) & allowed & ~reach;
    reach |= next;
    frontier = next;
  }
  return reach;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  return reachable(bit(0), vertices()) == vertices();
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet left = vertices();
  while (left != 0) {
    const VertexSet comp = reachable(bit(lowest(left)), left);
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) {
    rows[static_cast<std::size_t>(i)] = ~g.neighbors(i) & g.vertices() & ~bit(i);
  }
  return Graph::from_adjacency(g.order(), rows);
}

Graph contract_edges(const Graph& g, std::span<const Edge> edges) {
  Partition classes(g.order());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
      throw NotAnEdge(std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    const int a = classes.find(e.u);
    const int b = classes.find(e.v);
    if (a == b) throw NotAForest("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " closes a cycle");
    classes.parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  // Roots are the minimum of their class because unions always keep the smaller root.
  std::array<int, kMaxVertices> index{};
  int next = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (classes.find(v) == v) index[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(next), 0);
  for (int v = 0; v < g.order(); ++v) {
    const int cv = index[static_cast<std::size_t>(classes.find(v))];
    for_each_vertex(g.neighbors(v), [&](int w) {
      const int cw = index[static_cast<std::size_t>(classes.find(w))];
      if (cv != cw) rows[static_cast<std::size_t>(cv)] |= bit(cw);
    });
  }
  return Graph::from_adjacency(next, rows);
}

bool vertex_connectivity_at_least(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k >= std::max(n, 1)) {
    throw InvalidArgument("connectivity threshold must satisfy 0 <= k < n");
  }
  if (k == 0) return true;
  // Enumerate every separator candidate of size < k in increasing order of size.
  std::vector<int> chosen;
  auto connected_without = [&](VertexSet removed) {
    const VertexSet left = g.vertices() & ~removed;
    if (left == 0) return true;
    return g.reachable(bit(lowest(left)), left) == left;
  };
  bool ok = true;
  auto recurse = [&](auto&& self, int start, int depth, VertexSet removed) -> void {
    if (!ok) return;
    if (!connected_without(removed)) {
      ok = false;
      return;
    }
    if (depth + 1 >= k) return;
    for (int v = start; v < n && ok; ++v) self(self, v + 1, depth + 1, removed | bit(v));
  };
  recurse(recurse, 0, 0, 0);
  return ok;
}

bool is_triangular_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
    throw NotAnEdge(std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  return (g.neighbors(e.u) & g.neighbors(e.v)) != 0;
}

bool is_triangular(const Graph& g) { return non_triangular_edges(g).empty(); }

std::vector<Edge> non_triangular_edges(const Graph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if ((g.neighbors(e.u) & g.neighbors(e.v)) == 0) out.push_back(e);
  }
  return out;
}

long triangle_count(const Graph& g) {
  long total = 0;
  for (const Edge& e : g.edges()) {
    total += popcount(g.neighbors(e.u) & g.neighbors(e.v) & ~all_vertices(e.v + 1));
  }
  return total;
}

Graph cone(const Graph& g) {
  if (g.order() >= kMaxVertices) throw CapacityExceeded("cone would exceed 32 vertices");
  const int n = g.order();
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  for (auto& r : rows) r |= bit(n);
  rows.push_back(all_vertices(n));
  return Graph::from_adjacency(n + 1, rows);
}

Graph clique_sum(const Graph& g1, const Graph& g2, std::span<const int> shared1,
                 std::span<const int> shared2) {
  if (shared1.size() != shared2.size()) throw InvalidArgument("shared vertex lists differ in length");
  auto as_clique = [](const Graph& g, std::span<const int> vs, const char* which) {
    VertexSet s = 0;
    for (int v : vs) {
      check_vertex(g, v);
      if ((s & bit(v)) != 0) throw InvalidArgument("repeated shared vertex");
      s |= bit(v);
    }
    for (int v : vs) {
      if ((g.neighbors(v) & s) != (s & ~bit(v))) {
        throw NotAClique(std::string("shared vertices of ") + which + " do not induce a clique");
      }
    }
    return s;
  };
  as_clique(g1, shared1, "first summand");
  const VertexSet s2 = as_clique(g2, shared2, "second summand");
  const int p = static_cast<int>(shared1.size());
  const int n = g1.order() + g2.order() - p;
  if (n > kMaxVertices) throw CapacityExceeded("clique sum would exceed 32 vertices");

  std::array<int, kMaxVertices> map2{};
  for (std::size_t i = 0; i < shared2.size(); ++i) {
    map2[static_cast<std::size_t>(shared2[i])] = shared1[i];
  }
  int next = g1.order();
  for (int v = 0; v < g2.order(); ++v) {
    if ((s2 & bit(v)) == 0) map2[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Edge> es = g1.edges();
  for (const Edge& e : g2.edges()) {
    es.push_back(Edge::of(map2[static_cast<std::size_t>(e.u)], map2[static_cast<std::size_t>(e.v)]));
  }
  return Graph::from_edges(n, es);
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  for (int v = 0; v < g.order(); ++v) p.sequence.push_back(g.degree(v));
  std::sort(p.sequence.begin(), p.sequence.end());
  if (!p.sequence.empty()) {
    p.min_degree = p.sequence.front();
    p.max_degree = p.sequence.back();
  }
  return p;
}

std::string to_string(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + " [";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out + "]";
}

}  // namespace linkless
