#include "linkless/isomorphism.hpp"

#include <algorithm>
#include <array>

namespace linkless {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void mix(std::uint64_t& h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
}

}  // namespace

Refinement refine(const Graph& g) {
  const int n = g.order();
  Refinement r;
  r.color.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) r.color[static_cast<std::size_t>(v)] = g.degree(v);
  r.trace = kFnvOffset;
  mix(r.trace, static_cast<std::uint64_t>(n));

  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  int classes = -1;
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.clear();
      s.push_back(r.color[static_cast<std::size_t>(v)]);
      for_each_vertex(g.neighbors(v), [&](int w) { s.push_back(r.color[static_cast<std::size_t>(w)]); });
      std::sort(s.begin() + 1, s.end());
    }
    std::vector<std::vector<int>> distinct(sig.begin(), sig.end());
    std::sort(distinct.begin(), distinct.end());
    // Multiplicities are folded into the trace via the sorted full list.
    for (const auto& s : distinct) {
      mix(r.trace, s.size());
      for (int c : s) mix(r.trace, static_cast<std::uint64_t>(c));
    }
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      const auto it = std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]);
      r.color[static_cast<std::size_t>(v)] = static_cast<int>(it - distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  r.classes = classes;
  return r;
}

std::uint64_t invariant_hash(const Graph& g) {
  std::uint64_t h = refine(g).trace;
  mix(h, static_cast<std::uint64_t>(g.size()));
  mix(h, static_cast<std::uint64_t>(triangle_count(g)));
  return h;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2) {
  const int n = g1.order();
  if (n != g2.order() || g1.size() != g2.size()) return std::nullopt;
  const Refinement r1 = refine(g1);
  const Refinement r2 = refine(g2);
  if (r1.trace != r2.trace || r1.classes != r2.classes) return std::nullopt;
  if (n == 0) return std::vector<int>{};

  std::vector<int> class_size(static_cast<std::size_t>(r1.classes), 0);
  for (int c : r1.color) ++class_size[static_cast<std::size_t>(c)];
  std::vector<VertexSet> by_color2(static_cast<std::size_t>(r2.classes), 0);
  for (int v = 0; v < n; ++v) by_color2[static_cast<std::size_t>(r2.color[static_cast<std::size_t>(v)])] |= bit(v);

  // Static order: prefer vertices with many already-ordered neighbors, then
  // small color classes.
  std::vector<int> order;
  VertexSet placed = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    std::array<int, 3> best_key{};
    for (int v = 0; v < n; ++v) {
      if ((placed & bit(v)) != 0) continue;
      const std::array<int, 3> key{popcount(g1.neighbors(v) & placed),
                                   -class_size[static_cast<std::size_t>(r1.color[static_cast<std::size_t>(v)])],
                                   -v};
      if (best < 0 || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  VertexSet mapped1 = 0;
  VertexSet used2 = 0;
  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int v = order[static_cast<std::size_t>(depth)];
    VertexSet image = 0;
    for_each_vertex(g1.neighbors(v) & mapped1, [&](int u) { image |= bit(map[static_cast<std::size_t>(u)]); });
    VertexSet cands = by_color2[static_cast<std::size_t>(r1.color[static_cast<std::size_t>(v)])] & ~used2;
    while (cands != 0) {
      const int w = lowest(cands);
      cands &= cands - 1;
      if ((g2.neighbors(w) & used2) != image) continue;
      map[static_cast<std::size_t>(v)] = w;
      mapped1 |= bit(v);
      used2 |= bit(w);
      if (self(self, depth + 1)) return true;
      mapped1 &= ~bit(v);
      used2 &= ~bit(w);
    }
    map[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

bool is_isomorphic(const Graph& g1, const Graph& g2) { return find_isomorphism(g1, g2).has_value(); }

std::pair<std::size_t, bool> IsoClassSet::insert(const Graph& g) {
  if (auto found = find(g)) return {*found, false};
  reps_.push_back(g);
  buckets_.emplace(invariant_hash(g), reps_.size() - 1);
  return {reps_.size() - 1, true};
}

std::optional<std::size_t> IsoClassSet::find(const Graph& g) const {
  const std::uint64_t key = invariant_hash(g);
  const auto [lo, hi] = buckets_.equal_range(key);
  for (auto it = lo; it != hi; ++it) {
    if (is_isomorphic(reps_[it->second], g)) return it->second;
  }
  return std::nullopt;
}

}  // namespace linkless
