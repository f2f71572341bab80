#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "linkless/g6.hpp"
#include "linkless/graph.hpp"

namespace testing {

using linkless::Edge;
using linkless::Graph;

inline std::filesystem::path data_dir() { return LINKLESS_TEST_DATA; }
inline std::filesystem::path generated_dir() { return LINKLESS_GENERATED; }

inline std::vector<Graph> load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing test file " + path.string());
  linkless::G6Reader reader(in);
  std::vector<Graph> out;
  while (auto rec = reader.next()) out.push_back(rec->graph.value());
  return out;
}

inline Graph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back(Edge::of(u, v));
  return Graph::from_edges(n, list);
}

/// Outer 5-cycle 0..4, spokes i - i+5, inner pentagram.
inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back(Edge::of(i, (i + 1) % 5));
    e.push_back(Edge::of(i, i + 5));
    e.push_back(Edge::of(5 + i, 5 + (i + 2) % 5));
  }
  return Graph::from_edges(10, e);
}

/// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
inline Graph kneser_5_2() {
  std::vector<std::pair<int, int>> sets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) sets.emplace_back(a, b);
  std::vector<Edge> e;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = sets[static_cast<std::size_t>(i)];
      auto [c, d] = sets[static_cast<std::size_t>(j)];
      if (a != c && a != d && b != c && b != d) e.push_back(Edge{i, j});
    }
  return Graph::from_edges(10, e);
}

inline Graph k6_minus() { return Graph::complete(6).without_edge(0, 1); }

inline Graph octahedron() { return linkless::complement(graph(6, {{0, 1}, {2, 3}, {4, 5}})); }

/// Poles 0 and 11, upper ring 1..5, lower ring 6..10.
inline Graph icosahedron() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    const int up = 1 + i;
    const int up_next = 1 + (i + 1) % 5;
    const int lo = 6 + i;
    const int lo_next = 6 + (i + 1) % 5;
    e.push_back(Edge{0, up});
    e.push_back(Edge::of(up, up_next));
    e.push_back(Edge::of(lo, lo_next));
    e.push_back(Edge::of(lo, 11));
    e.push_back(Edge::of(up, lo));
    e.push_back(Edge::of(up, lo_next));
  }
  return Graph::from_edges(12, e);
}

/// K4,4 with parts {0..3} and {4..7}.
inline Graph k44() { return Graph::complete_bipartite(4, 4); }

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back(Edge{u, v});
  return Graph::from_edges(n, e);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testing
