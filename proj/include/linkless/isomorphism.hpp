#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "linkless/graph.hpp"

namespace linkless {

/// Stable vertex colors from iterated degree/neighborhood refinement. Color
/// names are canonical: isomorphic graphs get identical color multisets and
/// identical traces.
struct Refinement {
  std::vector<int> color;    // per vertex
  std::uint64_t trace = 0;   // hash of every round's sorted signature list
  int classes = 0;
};

Refinement refine(const Graph& g);

/// Graph invariant usable as a hash-bucket key for isomorphism classes.
std::uint64_t invariant_hash(const Graph& g);

/// A bijection `map` with g1 edge (u,v) <=> g2 edge (map[u], map[v]), if any.
std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2);

bool is_isomorphic(const Graph& g1, const Graph& g2);

/// Keeps one representative per isomorphism class, in insertion order.
class IsoClassSet {
 public:
  /// Returns the index of the class g belongs to and whether it was new.
  std::pair<std::size_t, bool> insert(const Graph& g);
  std::optional<std::size_t> find(const Graph& g) const;

  const std::vector<Graph>& representatives() const { return reps_; }
  std::size_t size() const { return reps_.size(); }

 private:
  std::vector<Graph> reps_;
  std::unordered_multimap<std::uint64_t, std::size_t> buckets_;
};

}  // namespace linkless
