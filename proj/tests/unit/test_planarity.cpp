#include "doctest.h"

#include "linkless/errors.hpp"
#include "linkless/isomorphism.hpp"
#include "linkless/linking.hpp"
#include "linkless/minors.hpp"
#include "linkless/planarity.hpp"
#include "support.hpp"

using namespace linkless;
using namespace testing;

TEST_CASE("Kuratowski graphs") {
  CHECK(is_planar(Graph::complete(4)));
  CHECK_FALSE(is_planar(Graph::complete(5)));
  CHECK_FALSE(is_planar(Graph::complete_bipartite(3, 3)));
  CHECK(is_planar(Graph::complete(5).without_edge(0, 1)));
  CHECK(is_planar(Graph::complete_bipartite(3, 3).without_edge(0, 3)));
  CHECK_FALSE(is_planar(petersen()));
  CHECK(has_minor(petersen(), Graph::complete_bipartite(3, 3)));
  CHECK(is_planar(icosahedron()));
  CHECK(is_planar(Graph(0)));
  CHECK(is_planar(Graph(1)));
}

TEST_CASE("maximal planarity") {
  CHECK(is_maximal_planar(Graph::complete(3)));
  CHECK(is_maximal_planar(Graph::complete(4)));
  CHECK_FALSE(is_maximal_planar(Graph::cycle(5)));
  CHECK(is_maximal_planar(octahedron()));
  CHECK(is_maximal_planar(icosahedron()));
  CHECK_FALSE(is_maximal_planar(Graph::complete(5)));
  CHECK_THROWS_AS(is_maximal_planar(Graph(2)), TooSmall);

  for (int n = 5; n <= 10; ++n) {
    const auto tris = load(data_dir() / ("triangulations_n" + std::to_string(n) + ".g6"));
    for (const Graph& t : tris) {
      CHECK(t.order() == n);
      CHECK(t.size() == 3 * n - 6);
      CHECK(is_maximal_planar(t));
      if (n == 10) continue;
      // Edge-maximality: every missing edge breaks planarity.
      for (const Edge& f : t.non_edges()) CHECK_FALSE(is_planar(t.with_edge(f.u, f.v)));
      for (const Edge& e : t.edges()) {
        CHECK(is_planar(t.without_edge(e.u, e.v)));
        CHECK_FALSE(is_maximal_planar(t.without_edge(e.u, e.v)));
      }
    }
  }
}

TEST_CASE("planarity agrees with an Euler bound and subgraph closure") {
  std::mt19937_64 rng(12);
  int planar = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 5 + trial % 5;
    const Graph g = random_graph(rng, n, 0.45);
    if (!is_planar(g)) continue;
    ++planar;
    CHECK(g.size() <= 3 * n - 6);
    for (const Edge& e : g.edges()) CHECK(is_planar(g.without_edge(e.u, e.v)));
  }
  CHECK(planar > 50);
}

TEST_CASE("apex and 2-apex") {
  const ApexReport k5 = apex_report(Graph::complete(5));
  CHECK(k5.is_apex);
  CHECK(k5.witness == 0);
  CHECK_FALSE(apex_report(Graph::complete(7)).is_apex);
  CHECK_FALSE(apex_report(Graph::complete(6)).is_apex);
  const ApexReport planar = apex_report(octahedron());
  CHECK(planar.is_apex);

  CHECK(two_apex_witness(Graph::complete(6)) == std::pair<int, int>{0, 1});
  CHECK_FALSE(two_apex_witness(Graph::complete(7)).has_value());

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_graph(rng, 8, 0.55);
    const ApexReport r = apex_report(g);
    std::optional<int> first;
    for (int v = 0; v < g.order() && !first; ++v)
      if (is_planar(g.without_vertex(v))) first = v;
    CHECK(r.is_apex == (is_planar(g) || first.has_value()));
    if (first) CHECK(r.witness == first);
    if (r.is_apex) CHECK(two_apex_witness(g).has_value());
  }
}

TEST_CASE("apex classification of maxnIL graphs") {
  const Graph k6m = k6_minus();
  CHECK(classify_maxnil_apex(k6m, true));
  bool maximal_after_deletion = false;
  for (int v = 0; v < 6; ++v)
    if (k6m.degree(v) == 5 && is_maximal_planar(k6m.without_vertex(v))) maximal_after_deletion = true;
  CHECK(maximal_after_deletion);

  CHECK(classify_maxnil_apex(cone(icosahedron()), true));
  CHECK(classify_maxnil_apex(cone(octahedron()), true));
  CHECK(classify_maxnil_apex(Graph::complete(5), true));
  CHECK(classify_maxnil_apex(Graph::complete(3), true));

  for (const Graph& t : load(data_dir() / "triangulations_n9.g6")) CHECK(classify_maxnil_apex(cone(t), true));
}
