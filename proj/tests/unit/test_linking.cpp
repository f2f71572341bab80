#include "doctest.h"

#include <map>
#include <set>

#include "linkless/errors.hpp"
#include "linkless/gf2.hpp"
#include "linkless/linking.hpp"
#include "linkless/minors.hpp"
#include "linkless/planarity.hpp"
#include "support.hpp"

using namespace linkless;
using namespace testing;

namespace {

Cycle cycle_of(std::vector<int> walk) {
  Cycle c;
  for (int v : walk) c.vertices |= bit(v);
  c.walk = std::move(walk);
  return c;
}

// Crossing parity straight from chord geometry, without the diagram.
int lk2_by_hand(const Cycle& a, const Cycle& b) {
  int parity = 0;
  for (const Edge& e : a.edges()) {
    for (const Edge& f : b.edges()) {
      const bool cross = (e.u < f.u && f.u < e.v && e.v < f.v) || (f.u < e.u && e.u < f.v && f.v < e.v);
      if (cross && e.u < f.u) parity ^= 1;
    }
  }
  return parity;
}

// Cycles as (vertex set, edge set) found by brute force over closed walks.
std::set<std::pair<VertexSet, std::vector<Edge>>> cycles_by_brute_force(const Graph& g) {
  std::set<std::pair<VertexSet, std::vector<Edge>>> out;
  const int n = g.order();
  std::vector<int> path;
  std::function<void(int, VertexSet)> extend = [&](int v, VertexSet used) {
    for_each_vertex(g.neighbors(v), [&](int w) {
      if (w == path.front() && path.size() >= 3) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < path.size(); ++i) es.push_back(Edge::of(path[i], path[(i + 1) % path.size()]));
        std::sort(es.begin(), es.end());
        out.emplace(used, es);
      } else if ((used & bit(w)) == 0 && w > path.front()) {
        path.push_back(w);
        extend(w, used | bit(w));
        path.pop_back();
      }
    });
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    extend(s, bit(s));
  }
  return out;
}

std::size_t disjoint_pairs_by_brute_force(const Graph& g) {
  const auto cycles = cycles_by_brute_force(g);
  const std::vector<std::pair<VertexSet, std::vector<Edge>>> list(cycles.begin(), cycles.end());
  std::size_t count = 0;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j)
      if ((list[i].first & list[j].first) == 0) ++count;
  return count;
}

// Dense Gaussian elimination on bool rows.
struct NaiveResult {
  std::size_t rank = 0;
  bool consistent = true;
};

NaiveResult naive_solve(std::vector<std::vector<int>> rows, std::size_t columns) {
  NaiveResult r;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < columns && lead < rows.size(); ++c) {
    std::size_t p = lead;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[lead]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != lead && rows[i][c] == 1)
        for (std::size_t k = 0; k <= columns; ++k) rows[i][k] ^= rows[lead][k];
    ++lead;
  }
  r.rank = lead;
  for (const auto& row : rows) {
    bool zero = true;
    for (std::size_t k = 0; k < columns; ++k) zero = zero && row[k] == 0;
    if (zero && row[columns] == 1) r.consistent = false;
  }
  return r;
}

}  // namespace

TEST_CASE("book diagram crossings") {
  CHECK(chords_cross(Edge{0, 2}, Edge{1, 3}));
  CHECK_FALSE(chords_cross(Edge{0, 1}, Edge{2, 3}));
  CHECK_FALSE(chords_cross(Edge{0, 3}, Edge{1, 2}));
  CHECK_FALSE(chords_cross(Edge{0, 2}, Edge{0, 3}));

  CHECK(build_diagram(Graph::cycle(4)).crossings.empty());
  const BookDiagram k4 = build_diagram(Graph::complete(4));
  REQUIRE(k4.crossings.size() == 1);
  CHECK(k4.chords[static_cast<std::size_t>(k4.crossings[0].over)] == Edge{0, 2});
  CHECK(k4.chords[static_cast<std::size_t>(k4.crossings[0].under)] == Edge{1, 3});
  CHECK(build_diagram(Graph::complete(6)).crossings.size() == 15);
  // C(n,4) crossings in the complete diagram.
  CHECK(build_diagram(Graph::complete(9)).crossings.size() == 126);
}

TEST_CASE("cycle enumeration matches brute force") {
  CHECK(enumerate_cycles(Graph::complete(6)).size() == 197);
  CHECK(enumerate_cycles(petersen()).size() == cycles_by_brute_force(petersen()).size());
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 7, 0.5);
    const auto cycles = enumerate_cycles(g);
    CHECK(cycles.size() == cycles_by_brute_force(g).size());
    for (const Cycle& c : cycles) {
      CHECK(c.walk.front() == std::countr_zero(c.vertices));
      CHECK(c.walk[1] < c.walk.back());
      CHECK(c.edges().size() == c.walk.size());
      for (const Edge& e : c.edges()) CHECK(g.adjacent(e.u, e.v));
    }
  }
}

TEST_CASE("disjoint cycle pairs") {
  CHECK(enumerate_disjoint_cycle_pairs(Graph::complete(6)).size() == 10);
  CHECK(enumerate_disjoint_cycle_pairs(Graph::complete(7)).size() == 175);
  const Graph two_triangles = graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(enumerate_disjoint_cycle_pairs(two_triangles).size() == 1);
  CHECK(enumerate_disjoint_cycle_pairs(Graph::complete(5)).empty());

  const std::size_t k44_pairs = enumerate_disjoint_cycle_pairs(k44()).size();
  CHECK(k44_pairs == disjoint_pairs_by_brute_force(k44()));
  CHECK(k44_pairs == 18);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(rng, 8, 0.45);
    const auto pairs = enumerate_disjoint_cycle_pairs(g);
    CHECK(pairs.size() == disjoint_pairs_by_brute_force(g));
    std::set<std::pair<VertexSet, VertexSet>> seen;
    for (const CyclePair& p : pairs) {
      CHECK(p.first.walk[0] < p.second.walk[0]);
      CHECK((p.first.vertices & p.second.vertices) == 0);
      CHECK(p.lk2 == lk2_by_hand(p.first, p.second));
    }
  }
}

TEST_CASE("mod-2 linking numbers") {
  const Graph k6 = Graph::complete(6);
  const BookDiagram d = build_diagram(k6);
  const Cycle a = cycle_of({0, 2, 4});
  const Cycle b = cycle_of({1, 3, 5});
  CHECK(lk2(d, a, b) == 1);
  CHECK(lk2(d, cycle_of({0, 1, 2}), cycle_of({3, 4, 5})) == 0);
  CHECK_THROWS_AS(lk2(d, cycle_of({0, 1, 2}), cycle_of({2, 3, 4})), NotDisjoint);

  int linked = 0;
  for (const CyclePair& p : enumerate_disjoint_cycle_pairs(k6)) linked += p.lk2;
  CHECK(linked % 2 == 1);

  std::mt19937_64 rng(1000);
  const Graph k9 = Graph::complete(9);
  const BookDiagram d9 = build_diagram(k9);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::vector<int> p = random_permutation(rng, 9);
    const std::size_t split = 3 + static_cast<std::size_t>(trial % 4);
    const Cycle c1 = cycle_of({p.begin(), p.begin() + static_cast<long>(split)});
    const Cycle c2 = cycle_of({p.begin() + static_cast<long>(split), p.end()});
    CHECK(lk2(d9, c1, c2) == lk2(d9, c2, c1));
    CHECK(lk2(d9, c1, c2) == lk2_by_hand(c1, c2));
  }
}

TEST_CASE("GF(2) solver against dense elimination") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t cols = 1 + static_cast<std::size_t>(trial % 130);
    const std::size_t nrows = 1 + static_cast<std::size_t>(rng() % 160);
    Gf2System sys(cols);
    std::vector<std::vector<int>> dense;
    std::bernoulli_distribution coin(trial % 3 == 0 ? 0.05 : 0.4);
    for (std::size_t r = 0; r < nrows; ++r) {
      std::vector<std::uint64_t> row(sys.words(), 0);
      std::vector<int> d(cols + 1, 0);
      for (std::size_t c = 0; c < cols; ++c)
        if (coin(rng)) {
          row[c / 64] |= std::uint64_t{1} << (c % 64);
          d[c] = 1;
        }
      const bool rhs = coin(rng);
      d[cols] = rhs;
      sys.insert(row, rhs);
      dense.push_back(d);
    }
    const NaiveResult oracle = naive_solve(dense, cols);
    CHECK(sys.consistent() == oracle.consistent);
    if (oracle.consistent) CHECK(sys.rank() == oracle.rank);
  }

  Gf2System s(3);
  const std::uint64_t a[] = {0b011};
  const std::uint64_t b[] = {0b110};
  const std::uint64_t c[] = {0b101};
  CHECK(s.insert(a, true) == Gf2System::Outcome::Independent);
  CHECK(s.insert(b, true) == Gf2System::Outcome::Independent);
  CHECK(s.insert(c, false) == Gf2System::Outcome::Dependent);
  CHECK(s.insert(c, true) == Gf2System::Outcome::Inconsistent);
  CHECK_FALSE(s.consistent());
}

TEST_CASE("nIL and maxnIL verdicts") {
  CHECK_FALSE(is_nil_linking(Graph::complete(6)));
  CHECK(is_nil_linking(Graph::complete(5)));
  CHECK(is_nil_linking(k6_minus()));
  CHECK_FALSE(is_nil_linking(petersen()));
  CHECK_FALSE(is_nil_linking(Graph::complete(6), EquationSet::AllCyclePairs));
  CHECK_FALSE(is_nil_linking(petersen(), EquationSet::AllCyclePairs));

  CHECK(is_maxnil(k6_minus()));
  CHECK(is_maxnil(Graph::complete(5)));
  CHECK(is_maxnil(cone(octahedron())));
  CHECK_FALSE(is_maxnil(Graph::cycle(6)));
  CHECK_FALSE(is_maxnil(Graph::complete(6)));
  CHECK(nil_extensions(k6_minus()).empty());
  CHECK_FALSE(nil_extensions(Graph::cycle(6)).empty());
  CHECK_THROWS_AS(nil_extensions(Graph::complete(6)), InvalidArgument);
  for (const Edge& e : nil_extensions(Graph::cycle(6))) CHECK(is_nil_linking(Graph::cycle(6).with_edge(e.u, e.v)));
}

TEST_CASE("linking agrees with forbidden minors on every graph up to order 7") {
  std::size_t checked = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : load(data_dir() / ("all_graphs_n" + std::to_string(n) + ".g6"))) {
      const bool nil = is_nil_linking(g);
      CHECK(nil == !is_il_minor(g));
      if (n <= 6) CHECK(nil == is_nil_linking(g, EquationSet::AllCyclePairs));
      ++checked;
    }
  }
  CHECK(checked == 1 + 2 + 4 + 11 + 34 + 156 + 1044);
}

TEST_CASE("equation sets span the same space") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 7 + trial % 2, 0.55);
    const LinkingStats all = linking_stats(g, EquationSet::AllCyclePairs);
    const LinkingStats basis = linking_stats(g, EquationSet::CycleSpaceBasis);
    CHECK(all.consistent == basis.consistent);
    CHECK(all.columns == basis.columns);
    if (all.consistent) CHECK(all.rank == basis.rank);
    CHECK(all.distinct <= all.equations);
    CHECK(all.rank <= all.distinct);
  }
}

TEST_CASE("linking properties on random graphs") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = random_graph(rng, 8 + trial % 3, 0.45);
    const bool nil = is_nil_linking(g);
    CHECK(nil == is_nil_linking(g));
    if (is_planar(g)) CHECK(nil);
    if (nil) {
      for (const Edge& e : g.edges()) CHECK(is_nil_linking(g.without_edge(e.u, e.v)));
    } else {
      for (const Edge& f : g.non_edges()) CHECK_FALSE(is_nil_linking(g.with_edge(f.u, f.v)));
    }
    const Graph h = g.permuted(random_permutation(rng, g.order()));
    CHECK(is_nil_linking(h) == nil);
  }
}
