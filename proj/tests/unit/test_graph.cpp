#include "doctest.h"

#include "linkless/errors.hpp"
#include "linkless/graph.hpp"
#include "linkless/isomorphism.hpp"
#include "linkless/planarity.hpp"
#include "support.hpp"

using namespace linkless;
using namespace testing;

TEST_CASE("graph construction validates its input") {
  CHECK_THROWS_AS(Graph(33), CapacityExceeded);
  CHECK_THROWS_AS(Graph(-1), CapacityExceeded);
  const std::array<VertexSet, 2> loop{bit(0), 0};
  CHECK_THROWS(Graph::from_adjacency(2, loop));
  const std::array<VertexSet, 2> asym{bit(1), 0};
  CHECK_THROWS(Graph::from_adjacency(2, asym));
  const Graph k5 = Graph::complete(5);
  CHECK(k5.size() == 10);
  CHECK(k5.edges().size() == 10);
  CHECK(k5.non_edges().empty());
  CHECK(Graph::cycle(5).size() == 5);
  CHECK(Graph::path(4).size() == 3);
  CHECK(Graph::complete_bipartite(3, 3).size() == 9);
}

TEST_CASE("edges come out in lexicographic order") {
  const Graph g = graph(4, {{2, 3}, {0, 2}, {1, 0}});
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {2, 3}};
  CHECK(g.edges() == expected);
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(6)) == Graph(6));
  CHECK(is_isomorphic(complement(Graph::cycle(5)), Graph::cycle(5)));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 14;
    const Graph g = random_graph(rng, n, 0.4);
    const Graph c = complement(g);
    CHECK(complement(c) == g);
    CHECK(g.size() + c.size() == n * (n - 1) / 2);
    for (const Edge& e : g.edges()) CHECK_FALSE(c.adjacent(e.u, e.v));
  }
}

TEST_CASE("contract_edges") {
  const Graph c4 = Graph::cycle(4);
  const std::vector<Edge> one{{0, 1}};
  CHECK(contract_edges(c4, one) == Graph::complete(3));
  CHECK(contract_edges(Graph::complete(7), one) == Graph::complete(6));

  const std::vector<Edge> missing{{0, 2}};
  CHECK_THROWS_AS(contract_edges(c4, missing), NotAnEdge);
  const std::vector<Edge> cycle{{0, 1}, {1, 2}, {0, 2}};
  CHECK_THROWS_AS(contract_edges(Graph::complete(4), cycle), NotAForest);
}

TEST_CASE("contracting the Petersen spokes matches a hand-built quotient") {
  const Graph p = petersen();
  std::vector<Edge> spokes;
  for (int i = 0; i < 5; ++i) spokes.push_back(Edge{i, i + 5});
  // Quotient computed directly: class of v is v mod 5.
  std::array<std::array<bool, 5>, 5> adj{};
  for (const Edge& e : p.edges()) {
    const int a = e.u % 5;
    const int b = e.v % 5;
    if (a != b) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
  }
  std::vector<Edge> q;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) q.push_back(Edge{a, b});
  const Graph oracle = Graph::from_edges(5, q);
  const Graph contracted = contract_edges(p, spokes);
  CHECK(contracted.order() == 5);
  CHECK(contracted == oracle);
  CHECK(contracted == Graph::complete(5));
}

TEST_CASE("contraction of random forests") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 9, 0.5);
    // Greedy forest from a shuffled edge list.
    std::vector<Edge> edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<int> comp(9);
    std::iota(comp.begin(), comp.end(), 0);
    std::vector<Edge> forest;
    for (const Edge& e : edges) {
      if (forest.size() == 4) break;
      const int a = comp[static_cast<std::size_t>(e.u)];
      const int b = comp[static_cast<std::size_t>(e.v)];
      if (a == b) continue;
      for (int& c : comp) if (c == b) c = a;
      forest.push_back(e);
    }
    const Graph h = contract_edges(g, forest);
    CHECK(h.order() == 9 - static_cast<int>(forest.size()));
    for (int v = 0; v < h.order(); ++v) CHECK_FALSE(h.adjacent(v, v));
  }
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity_at_least(Graph::complete(4), 3));
  CHECK_FALSE(vertex_connectivity_at_least(Graph::path(3), 2));
  CHECK(vertex_connectivity_at_least(Graph::cycle(6), 2));
  CHECK_FALSE(vertex_connectivity_at_least(Graph::cycle(6), 3));
  CHECK(vertex_connectivity_at_least(petersen(), 3));
  CHECK(vertex_connectivity_at_least(Graph(3), 0));
  CHECK_FALSE(vertex_connectivity_at_least(Graph(3), 1));
}

TEST_CASE("triangular edges") {
  CHECK(is_triangular_edge(Graph::complete(3), Edge{0, 1}));
  CHECK_FALSE(is_triangular_edge(Graph::cycle(4), Edge{0, 1}));
  CHECK_THROWS_AS(is_triangular_edge(Graph::cycle(4), Edge{0, 2}), NotAnEdge);
  CHECK(is_triangular(Graph::complete(5)));
  CHECK_FALSE(is_triangular(Graph::cycle(4)));
  CHECK(non_triangular_edges(Graph::cycle(4)).size() == 4);
  CHECK(triangle_count(Graph::complete(6)) == 20);
  CHECK(triangle_count(petersen()) == 0);
}

TEST_CASE("cone") {
  CHECK(cone(Graph::complete(5)) == Graph::complete(6));
  const Graph w4 = cone(Graph::cycle(4));
  CHECK(w4.order() == 5);
  CHECK(w4.size() == 8);
  CHECK(is_planar(w4));
  CHECK_THROWS_AS(cone(Graph(32)), CapacityExceeded);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 6;
    const Graph g = random_graph(rng, n, 0.5);
    const Graph c = cone(g);
    CHECK(degree_profile(c).max_degree == n);
    CHECK(c.induced(all_vertices(n)) == g);
    for (int k = 0; k + 1 < n; ++k) {
      if (vertex_connectivity_at_least(g, k)) CHECK(vertex_connectivity_at_least(c, k + 1));
    }
  }
}

TEST_CASE("clique sums") {
  const std::array<int, 2> e01{0, 1};
  const Graph k4_minus = clique_sum(Graph::complete(3), Graph::complete(3), e01, e01);
  CHECK(k4_minus.order() == 4);
  CHECK(is_isomorphic(k4_minus, Graph::complete(4).without_edge(2, 3)));

  const std::array<int, 1> v0{0};
  const Graph glued = clique_sum(Graph::complete(4), Graph::complete(4), v0, v0);
  CHECK(glued.order() == 7);
  CHECK(vertex_connectivity_at_least(glued, 1));
  CHECK_FALSE(vertex_connectivity_at_least(glued, 2));

  const std::array<int, 2> non_edge{0, 2};
  CHECK_THROWS_AS(clique_sum(Graph::cycle(4), Graph::complete(3), non_edge, e01), NotAClique);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph a = cone(random_graph(rng, 5, 0.6));
    const Graph b = cone(random_graph(rng, 4, 0.6));
    const std::array<int, 1> apex_a{5};
    const std::array<int, 1> apex_b{4};
    const Graph s = clique_sum(a, b, apex_a, apex_b);
    CHECK(s.order() == 10);
    CHECK(s.induced(all_vertices(6)) == a);
    CHECK(is_isomorphic(s.induced(bit(5) | 0x3c0u), b));
  }
}

TEST_CASE("degree profile") {
  const DegreeProfile k6 = degree_profile(Graph::complete(6));
  CHECK(k6.min_degree == 5);
  CHECK(k6.max_degree == 5);
  CHECK(k6.sequence == std::vector<int>(6, 5));
  const DegreeProfile star = degree_profile(Graph::complete_bipartite(1, 4));
  CHECK(star.min_degree == 1);
  CHECK(star.max_degree == 4);
  CHECK(star.sequence == std::vector<int>{1, 1, 1, 1, 4});
}

TEST_CASE("induced subgraphs, deletion and relabeling") {
  const Graph p = petersen();
  CHECK(p.without_vertex(0).order() == 9);
  CHECK(p.without_vertex(0).size() == 12);
  CHECK(p.induced(0x1fu) == Graph::cycle(5));
  std::mt19937_64 rng(2);
  const std::vector<int> perm = random_permutation(rng, 10);
  const Graph q = p.permuted(perm);
  for (const Edge& e : p.edges()) CHECK(q.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]));
  CHECK(p.components().size() == 1);
  CHECK(Graph(3).components().size() == 3);
}
