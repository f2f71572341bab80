#include "doctest.h"

#include <algorithm>
#include <set>

#include "linkless/errors.hpp"
#include "linkless/isomorphism.hpp"
#include "linkless/minors.hpp"
#include "linkless/planarity.hpp"
#include "support.hpp"

using namespace linkless;
using namespace testing;

namespace {

int girth(const Graph& g) {
  int best = 1 << 20;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int v = queue[h];
      for_each_vertex(g.neighbors(v), [&](int w) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(v)] != w) {
          best = std::min(best, dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1);
        }
      });
    }
  }
  return best;
}

std::size_t family_index(const Graph& g) {
  const auto& fam = petersen_family().members;
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (is_isomorphic(fam[i], g)) return i;
  return fam.size();
}

Graph cube() {
  Graph g = k44();
  for (int i = 0; i < 4; ++i) g = g.without_edge(i, 4 + i);
  return g;
}

}  // namespace

TEST_CASE("delta-wye and wye-delta moves") {
  const Graph star = triangle_y_move(Graph::complete(4), 0, 1, 2);
  CHECK(star.order() == 5);
  CHECK(star.size() == 6);
  CHECK(star.degree(4) == 3);
  CHECK_FALSE(star.adjacent(0, 1));

  CHECK(y_triangle_move(Graph::complete_bipartite(1, 3), 0) == Graph::complete(3));
  CHECK_THROWS_AS(triangle_y_move(Graph::cycle(4), 0, 1, 2), NotATriangle);
  CHECK_THROWS_AS(y_triangle_move(Graph::complete(5), 0), NotDegreeThree);

  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(rng, 7, 0.5);
    for (const auto& t : triangles(g)) {
      const Graph y = triangle_y_move(g, t[0], t[1], t[2]);
      CHECK(y.size() == g.size());
      CHECK(y_triangle_move(y, g.order()) == g);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("Petersen family") {
  const PetersenFamily fam = generate_petersen_family();
  REQUIRE(fam.members.size() == 7);
  CHECK(fam.names.size() == 7);
  std::multiset<int> orders;
  for (const Graph& g : fam.members) {
    orders.insert(g.order());
    CHECK(g.size() == 15);
    CHECK(g.is_connected());
  }
  CHECK(orders == std::multiset<int>{6, 7, 7, 8, 8, 9, 10});
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) CHECK_FALSE(is_isomorphic(fam.members[i], fam.members[j]));

  CHECK(family_index(Graph::complete(6)) < 7);
  const std::size_t p = family_index(petersen());
  REQUIRE(p < 7);
  const Graph& pet = fam.members[p];
  CHECK(degree_profile(pet).min_degree == 3);
  CHECK(degree_profile(pet).max_degree == 3);
  CHECK(girth(pet) == 5);
  CHECK(fam.names[p] == "Petersen");

  const Graph k331 = cone(Graph::complete_bipartite(3, 3));
  CHECK(family_index(k331) < 7);
  CHECK(family_index(k44().without_edge(0, 4)) < 7);

  // Closure: every legal move lands back in the family.
  for (const Graph& g : fam.members) {
    for (const auto& t : triangles(g)) CHECK(family_index(triangle_y_move(g, t[0], t[1], t[2])) < 7);
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 3) continue;
      const VertexSet nb = g.neighbors(v);
      bool independent = true;
      for_each_vertex(nb, [&](int w) { independent = independent && (g.neighbors(w) & nb) == 0; });
      if (independent) CHECK(family_index(y_triangle_move(g, v)) < 7);
    }
  }
}

TEST_CASE("isomorphism") {
  const Graph two_triangles = graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(is_isomorphic(Graph::cycle(6), two_triangles));
  CHECK(is_isomorphic(petersen(), kneser_5_2()));
  const auto map = find_isomorphism(petersen(), kneser_5_2());
  REQUIRE(map);
  for (const Edge& e : petersen().edges())
    CHECK(kneser_5_2().adjacent((*map)[static_cast<std::size_t>(e.u)], (*map)[static_cast<std::size_t>(e.v)]));

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 13;
    const Graph g = random_graph(rng, n, 0.45);
    const Graph h = g.permuted(random_permutation(rng, n));
    CHECK(is_isomorphic(g, h));
    CHECK(invariant_hash(g) == invariant_hash(h));
    if (g.size() > 0 && g.size() < n * (n - 1) / 2) {
      const Edge e = h.edges().front();
      const Edge f = g.non_edges().front();
      CHECK_FALSE(is_isomorphic(g, h.without_edge(e.u, e.v)));
      CHECK_FALSE(is_isomorphic(g.with_edge(f.u, f.v), h));
    }
  }

  IsoClassSet set;
  for (const Graph& g : load(data_dir() / "all_graphs_n6.g6")) {
    CHECK(set.insert(g).second);
    CHECK_FALSE(set.insert(g.permuted(random_permutation(rng, 6))).second);
  }
  CHECK(set.size() == 156);
}

TEST_CASE("K6 minor by contraction enumeration") {
  CHECK(has_k6_minor(Graph::complete(6)));
  CHECK(has_k6_minor(Graph::complete(7)));
  CHECK_FALSE(has_k6_minor(Graph::complete(5)));
  CHECK_FALSE(has_k6_minor(petersen()));
  CHECK_FALSE(has_k6_minor(k6_minus()));
  CHECK_THROWS_AS(has_k6_minor(Graph(7)), NotConnected);
  for (const Graph& g : petersen_family().members) {
    CHECK(has_k6_minor(g) == (g.order() == 6));
    CHECK(has_k6_minor(g) == has_minor(g, Graph::complete(6)));
  }

  // Order 11 with more than 34 edges.
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Edge> all = Graph::complete(11).edges();
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(35);
    const Graph g = Graph::from_edges(11, all);
    if (!g.is_connected()) continue;
    CHECK(has_k6_minor(g));
  }
}

TEST_CASE("general minor test") {
  CHECK(has_minor(petersen(), Graph(1)));
  CHECK_FALSE(has_minor(Graph::complete(5), Graph::complete(6)));
  CHECK(has_minor(petersen(), Graph::complete(5)));
  CHECK(has_minor(petersen(), Graph::complete_bipartite(3, 3)));
  CHECK_FALSE(has_minor(Graph::cycle(8), Graph::complete(4)));
  CHECK(has_minor(graph(7, {{0, 1}, {1, 2}, {0, 2}, {4, 5}}), graph(5, {{0, 1}, {2, 3}})));
  const auto model = find_minor(petersen(), Graph::complete(5));
  REQUIRE(model);
  CHECK(is_valid_model(petersen(), Graph::complete(5), *model));
}

TEST_CASE("engines agree on every 2-connected graph of order 8") {
  const Graph k6 = Graph::complete(6);
  std::size_t count = 0;
  std::size_t with_minor = 0;
  for (const Graph& g : load(generated_dir() / "biconnected_n8.g6")) {
    const bool a = has_k6_minor(g);
    CHECK(a == has_minor(g, k6));
    with_minor += a;
    ++count;
  }
  CHECK(count == 7123);
  CHECK(with_minor > 0);
}

TEST_CASE("engines agree on the order 9 search space and all small graphs") {
  const Graph k6 = Graph::complete(6);
  std::size_t count = 0;
  for (const Graph& g : load(generated_dir() / "search_n9.g6")) {
    CHECK(has_k6_minor(g) == has_minor(g, k6));
    ++count;
  }
  CHECK(count == 77223);
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : load(data_dir() / ("all_graphs_n" + std::to_string(n) + ".g6"))) {
      if (g.is_connected()) CHECK(has_k6_minor(g) == has_minor(g, k6));
    }
  }
}

TEST_CASE("minor monotonicity on random triples") {
  std::mt19937_64 rng(4);
  int chains = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(rng, 8, 0.5);
    const Graph h = random_graph(rng, 6, 0.5);
    const Graph k = random_graph(rng, 4, 0.6);
    if (has_minor(g, h) && has_minor(h, k)) {
      ++chains;
      CHECK(has_minor(g, k));
    }
  }
  CHECK(chains > 20);
}

TEST_CASE("IL by Petersen family minors") {
  CHECK(is_il_minor(Graph::complete(6)));
  CHECK(is_il_minor(petersen()));
  const Graph k44e = k44().without_edge(0, 4);
  CHECK(family_index(k44e) < 7);
  CHECK(is_il_minor(k44e));
  // K4,4 minus a perfect matching is the cube: planar, so not IL.
  CHECK(is_planar(cube()));
  CHECK_FALSE(is_il_minor(cube()));
  CHECK(family_index(cube()) == 7);
  // Disconnected: a family member plus an isolated vertex.
  const Graph padded = Graph::from_edges(11, petersen().edges());
  CHECK(is_il_minor(padded));

  int planar_checked = 0;
  for (const char* file : {"triangulations_n9.g6", "triangulations_n10.g6"}) {
    for (const Graph& t : load(data_dir() / file)) {
      if (planar_checked == 100) break;
      CHECK_FALSE(is_il_minor(t));
      ++planar_checked;
    }
  }
  CHECK(planar_checked == 100);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_graph(rng, 8, 0.4);
    if (!is_il_minor(g)) continue;
    for (const Edge& f : g.non_edges()) CHECK(is_il_minor(g.with_edge(f.u, f.v)));
  }
}
