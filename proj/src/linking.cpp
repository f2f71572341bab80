#include "linkless/linking.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <unordered_set>

#include "linkless/deadline.hpp"
#include "linkless/errors.hpp"
#include "linkless/gf2.hpp"

namespace linkless {

namespace {

constexpr VertexSet above(int v) { return v >= 31 ? 0 : ~all_vertices(v + 1); }

// Generic DFS over the simple cycles of g[allowed]. Each cycle is reported
// once, as a walk from its minimum vertex with walk[1] < walk.back().
template <typename Fn>
void each_cycle(const Graph& g, VertexSet allowed, Fn&& emit) {
  std::array<int, kMaxVertices> walk{};
  for_each_vertex(allowed, [&](int s) {
    walk[0] = s;
    const VertexSet scope = allowed & above(s);
    auto dfs = [&](auto&& self, int last, int len, VertexSet in_path) -> void {
      VertexSet cands = g.neighbors(last) & scope & ~in_path;
      while (cands != 0) {
        const int w = lowest(cands);
        cands &= cands - 1;
        walk[static_cast<std::size_t>(len)] = w;
        if (len >= 2 && g.adjacent(w, s) && walk[1] < w) {
          emit(std::span<const int>(walk.data(), static_cast<std::size_t>(len + 1)), in_path | bit(w));
        }
        self(self, w, len + 1, in_path | bit(w));
      }
    };
    dfs(dfs, s, 1, bit(s));
  });
}

// Induced (chordless) cycles of g[allowed], same reporting convention.
template <typename Fn>
void each_induced_cycle(const Graph& g, VertexSet allowed, Fn&& emit) {
  std::array<int, kMaxVertices> walk{};
  for_each_vertex(allowed, [&](int s) {
    walk[0] = s;
    const VertexSet scope = allowed & above(s);
    // `blocked` = path vertices plus neighbors of interior path vertices.
    auto dfs = [&](auto&& self, int last, int len, VertexSet path, VertexSet blocked) -> void {
      VertexSet cands = g.neighbors(last) & scope & ~blocked;
      while (cands != 0) {
        const int w = lowest(cands);
        cands &= cands - 1;
        walk[static_cast<std::size_t>(len)] = w;
        if (len >= 2 && g.adjacent(w, s)) {
          if (walk[1] < w) {
            emit(std::span<const int>(walk.data(), static_cast<std::size_t>(len + 1)), path | bit(w));
          }
          continue;
        }
        const VertexSet grow = last == s ? 0 : g.neighbors(last);
        self(self, w, len + 1, path | bit(w), blocked | bit(w) | grow);
      }
    };
    dfs(dfs, s, 1, bit(s), bit(s));
  });
}

// Induced paths from u to v (u, v non-adjacent), reported as walks u..v.
template <typename Fn>
void each_induced_path(const Graph& g, int u, int v, Fn&& emit) {
  std::array<int, kMaxVertices> walk{};
  walk[0] = u;
  auto dfs = [&](auto&& self, int last, int len, VertexSet path, VertexSet blocked) -> void {
    if ((blocked & bit(v)) != 0) return;
    const VertexSet cands = g.neighbors(last) & ~blocked;
    if ((cands & bit(v)) != 0) {
      walk[static_cast<std::size_t>(len)] = v;
      emit(std::span<const int>(walk.data(), static_cast<std::size_t>(len + 1)), path | bit(v));
      return;
    }
    for_each_vertex(cands, [&](int w) {
      walk[static_cast<std::size_t>(len)] = w;
      self(self, w, len + 1, path | bit(w), blocked | bit(w) | g.neighbors(last));
    });
  };
  dfs(dfs, u, 1, bit(u), bit(u));
}

constexpr int kMaxLinkEdges = 128;

struct EdgeSet {
  std::array<std::uint64_t, 2> w{};

  void set(int e) { w[static_cast<std::size_t>(e >> 6)] |= std::uint64_t{1} << (e & 63); }
  bool test(int e) const { return ((w[static_cast<std::size_t>(e >> 6)] >> (e & 63)) & 1u) != 0; }
  EdgeSet operator^(const EdgeSet& o) const { return {{w[0] ^ o.w[0], w[1] ^ o.w[1]}}; }
  EdgeSet operator&(const EdgeSet& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }

  template <typename Fn>
  void each(Fn&& fn) const {
    for (int k = 0; k < 2; ++k) {
      std::uint64_t x = w[static_cast<std::size_t>(k)];
      while (x != 0) {
        fn(k * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
  friend bool operator<(const EdgeSet& a, const EdgeSet& b) { return a.w < b.w; }
};

struct PairKey {
  std::array<std::uint64_t, 4> w{};
  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t x : k.w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Mutable solver state; cheap enough to copy once per candidate edge.
struct SystemState {
  Gf2System gf2;
  std::vector<std::int32_t> column;  // (edge, edge) -> variable, -1 if unassigned
  std::int32_t next_column = 0;
  std::unordered_set<PairKey, PairKeyHash> seen;
  LinkingStats stats;

  SystemState(std::size_t capacity, std::size_t edge_slots)
      : gf2(capacity), column(edge_slots * edge_slots, -1) {}
};

class LinkingEngine {
 public:
  LinkingEngine(const Graph& g, bool reserve_extra_edge) : g_(g) {
    for (auto& row : id_) row.fill(-1);
    const std::vector<Edge> es = g.edges();
    m_ = static_cast<int>(es.size());
    if (m_ + (reserve_extra_edge ? 1 : 0) > kMaxLinkEdges) {
      throw CapacityExceeded("linking engine supports at most 128 edges");
    }
    edges_ = es;
    for (int i = 0; i < m_; ++i) {
      id_[static_cast<std::size_t>(es[static_cast<std::size_t>(i)].u)][static_cast<std::size_t>(es[static_cast<std::size_t>(i)].v)] = static_cast<std::int16_t>(i);
      id_[static_cast<std::size_t>(es[static_cast<std::size_t>(i)].v)][static_cast<std::size_t>(es[static_cast<std::size_t>(i)].u)] = static_cast<std::int16_t>(i);
    }
    over_.assign(static_cast<std::size_t>(m_ + 1), EdgeSet{});
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) {
        const Edge e = es[static_cast<std::size_t>(i)];
        const Edge f = es[static_cast<std::size_t>(j)];
        if (chords_cross(e, f) && e.u < f.u) over_[static_cast<std::size_t>(i)].set(j);
      }
    }
    // Pairs of edges without a common endpoint.
    long disjoint = static_cast<long>(m_) * (m_ - 1) / 2;
    for (int v = 0; v < g.order(); ++v) disjoint -= static_cast<long>(g.degree(v)) * (g.degree(v) - 1) / 2;
    capacity_ = static_cast<std::size_t>(disjoint) + (reserve_extra_edge ? static_cast<std::size_t>(m_) : 0);
    slots_ = static_cast<std::size_t>(m_ + 1);
  }

  SystemState fresh_state() const { return SystemState(capacity_, slots_); }

  /// Registers uv as edge number m for incremental checks, replacing any
  /// previously registered extra edge.
  void set_extra_edge(int u, int v) {
    clear_extra_edge();
    extra_ = Edge::of(u, v);
    id_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = static_cast<std::int16_t>(m_);
    id_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = static_cast<std::int16_t>(m_);
    for (int i = 0; i < m_; ++i) {
      const Edge e = edges_[static_cast<std::size_t>(i)];
      if (!chords_cross(e, *extra_)) continue;
      if (e.u < extra_->u) {
        over_[static_cast<std::size_t>(i)].set(m_);
      } else {
        over_[static_cast<std::size_t>(m_)].set(i);
      }
    }
  }

  EdgeSet walk_edges(std::span<const int> walk) const {
    EdgeSet s;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const int a = walk[i];
      const int b = walk[(i + 1) % walk.size()];
      s.set(id_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    }
    return s;
  }

  // Returns false once the system became inconsistent.
  bool add(SystemState& st, const EdgeSet& a, const EdgeSet& b, const Deadline* deadline) const {
    poll(deadline);
    ++st.stats.equations;
    PairKey key;
    const bool swap = b < a;
    const EdgeSet& lo = swap ? b : a;
    const EdgeSet& hi = swap ? a : b;
    key.w = {lo.w[0], lo.w[1], hi.w[0], hi.w[1]};
    if (!st.seen.insert(key).second) return st.gf2.consistent();
    ++st.stats.distinct;

    row_.assign(st.gf2.words(), 0);
    int rhs = 0;
    a.each([&](int e) {
      rhs += (over_[static_cast<std::size_t>(e)] & b).count();
      b.each([&](int f) {
        const int lo_e = std::min(e, f);
        const int hi_e = std::max(e, f);
        std::int32_t& c = st.column[static_cast<std::size_t>(lo_e) * slots_ + static_cast<std::size_t>(hi_e)];
        if (c < 0) c = st.next_column++;
        row_[static_cast<std::size_t>(c) >> 6] |= std::uint64_t{1} << (c & 63);
      });
    });
    st.gf2.insert(row_, (rhs & 1) != 0);
    return st.gf2.consistent();
  }

  // Calls fn(cycle edge set) for each fundamental cycle of g[allowed].
  template <typename Fn>
  bool each_fundamental_cycle(VertexSet allowed, Fn&& fn) const {
    std::array<EdgeSet, kMaxVertices> to_root{};
    std::array<int, kMaxVertices> parent{};
    VertexSet seen = 0;
    std::array<int, kMaxVertices> queue{};
    while ((allowed & ~seen) != 0) {
      const int root = lowest(allowed & ~seen);
      int head = 0;
      int tail = 0;
      queue[static_cast<std::size_t>(tail++)] = root;
      seen |= bit(root);
      parent[static_cast<std::size_t>(root)] = -1;
      to_root[static_cast<std::size_t>(root)] = EdgeSet{};
      while (head < tail) {
        const int x = queue[static_cast<std::size_t>(head++)];
        for_each_vertex(g_.neighbors(x) & allowed & ~seen, [&](int y) {
          seen |= bit(y);
          parent[static_cast<std::size_t>(y)] = x;
          to_root[static_cast<std::size_t>(y)] = to_root[static_cast<std::size_t>(x)];
          to_root[static_cast<std::size_t>(y)].set(id_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
          queue[static_cast<std::size_t>(tail++)] = y;
        });
      }
    }
    bool keep_going = true;
    for_each_vertex(allowed, [&](int x) {
      for_each_vertex(g_.neighbors(x) & allowed & above(x), [&](int y) {
        if (!keep_going) return;
        if (parent[static_cast<std::size_t>(y)] == x || parent[static_cast<std::size_t>(x)] == y) return;
        EdgeSet c = to_root[static_cast<std::size_t>(x)] ^ to_root[static_cast<std::size_t>(y)];
        c.set(id_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
        keep_going = fn(c);
      });
    });
    return keep_going;
  }

  bool add_basis_equations(SystemState& st, bool early_exit, const Deadline* deadline) const {
    bool ok = true;
    bool stop = false;
    each_induced_cycle(g_, g_.vertices(), [&](std::span<const int> walk, VertexSet verts) {
      if (stop) return;
      const EdgeSet a = walk_edges(walk);
      each_fundamental_cycle(g_.vertices() & ~verts, [&](const EdgeSet& b) {
        ok = add(st, a, b, deadline) && ok;
        stop = early_exit && !ok;
        return !stop;
      });
    });
    return ok;
  }

  bool add_all_pair_equations(SystemState& st, bool early_exit, const Deadline* deadline) const {
    bool ok = true;
    bool stop = false;
    each_cycle(g_, g_.vertices(), [&](std::span<const int> walk1, VertexSet verts1) {
      if (stop) return;
      const EdgeSet a = walk_edges(walk1);
      const VertexSet rest = g_.vertices() & ~verts1 & above(walk1[0]);
      each_cycle(g_, rest, [&](std::span<const int> walk2, VertexSet) {
        if (stop) return;
        ok = add(st, a, walk_edges(walk2), deadline) && ok;
        stop = early_exit && !ok;
      });
    });
    return ok;
  }

  // Equations of g + uv that are not already implied by those of g: induced
  // cycles through uv against a cycle basis of the rest. Requires set_extra_edge.
  bool add_extra_edge_equations(SystemState& st, const Deadline* deadline) const {
    bool ok = true;
    each_induced_path(g_, extra_->u, extra_->v, [&](std::span<const int> walk, VertexSet verts) {
      if (!ok) return;
      EdgeSet a;
      for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        a.set(id_[static_cast<std::size_t>(walk[i])][static_cast<std::size_t>(walk[i + 1])]);
      }
      a.set(m_);
      each_fundamental_cycle(g_.vertices() & ~verts, [&](const EdgeSet& b) {
        ok = add(st, a, b, deadline);
        return ok;
      });
    });
    return ok;
  }

 private:
  void clear_extra_edge() {
    if (!extra_) return;
    id_[static_cast<std::size_t>(extra_->u)][static_cast<std::size_t>(extra_->v)] = -1;
    id_[static_cast<std::size_t>(extra_->v)][static_cast<std::size_t>(extra_->u)] = -1;
    for (int i = 0; i <= m_; ++i) {
      over_[static_cast<std::size_t>(i)].w[static_cast<std::size_t>(m_ >> 6)] &= ~(std::uint64_t{1} << (m_ & 63));
    }
    over_[static_cast<std::size_t>(m_)] = EdgeSet{};
    extra_.reset();
  }

  const Graph& g_;
  int m_ = 0;
  std::vector<Edge> edges_;
  std::array<std::array<std::int16_t, kMaxVertices>, kMaxVertices> id_{};
  std::vector<EdgeSet> over_;
  std::optional<Edge> extra_;
  std::size_t capacity_ = 0;
  std::size_t slots_ = 0;
  mutable std::vector<std::uint64_t> row_;
};

}  // namespace

bool chords_cross(Edge e, Edge f) {
  const Edge a = Edge::of(e.u, e.v);
  const Edge b = Edge::of(f.u, f.v);
  return (a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v);
}

BookDiagram build_diagram(const Graph& g) {
  BookDiagram d;
  d.order = g.order();
  d.chords = g.edges();
  for (std::size_t i = 0; i < d.chords.size(); ++i) {
    for (std::size_t j = i + 1; j < d.chords.size(); ++j) {
      if (!chords_cross(d.chords[i], d.chords[j])) continue;
      // Chords are sorted, so chords[i] has the smaller first endpoint.
      d.crossings.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return d;
}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < walk.size(); ++i) out.push_back(Edge::of(walk[i], walk[(i + 1) % walk.size()]));
  return out;
}

std::vector<Cycle> enumerate_cycles(const Graph& g) {
  std::vector<Cycle> out;
  each_cycle(g, g.vertices(), [&](std::span<const int> walk, VertexSet verts) {
    out.push_back({std::vector<int>(walk.begin(), walk.end()), verts});
  });
  return out;
}

void for_each_disjoint_cycle_pair(const Graph& g, const std::function<void(const CyclePair&)>& visit) {
  const BookDiagram diagram = build_diagram(g);
  CyclePair pair;
  each_cycle(g, g.vertices(), [&](std::span<const int> walk1, VertexSet verts1) {
    pair.first.walk.assign(walk1.begin(), walk1.end());
    pair.first.vertices = verts1;
    const VertexSet rest = g.vertices() & ~verts1 & above(walk1[0]);
    each_cycle(g, rest, [&](std::span<const int> walk2, VertexSet verts2) {
      pair.second.walk.assign(walk2.begin(), walk2.end());
      pair.second.vertices = verts2;
      pair.lk2 = lk2(diagram, pair.first, pair.second);
      visit(pair);
    });
  });
}

std::vector<CyclePair> enumerate_disjoint_cycle_pairs(const Graph& g) {
  std::vector<CyclePair> out;
  for_each_disjoint_cycle_pair(g, [&](const CyclePair& p) { out.push_back(p); });
  return out;
}

int lk2(const BookDiagram& diagram, const Cycle& c1, const Cycle& c2) {
  (void)diagram;  // crossings and over/under follow from the chord endpoints alone
  if ((c1.vertices & c2.vertices) != 0) throw NotDisjoint("cycles share a vertex");
  int count = 0;
  for (const Edge& e : c1.edges()) {
    for (const Edge& f : c2.edges()) {
      if (chords_cross(e, f) && e.u < f.u) ++count;
    }
  }
  return count & 1;
}

LinkingStats linking_stats(const Graph& g, EquationSet set) {
  const LinkingEngine engine(g, false);
  SystemState st = engine.fresh_state();
  if (set == EquationSet::CycleSpaceBasis) {
    engine.add_basis_equations(st, false, nullptr);
  } else {
    engine.add_all_pair_equations(st, false, nullptr);
  }
  st.stats.rank = st.gf2.rank();
  st.stats.columns = static_cast<std::size_t>(st.next_column);
  st.stats.consistent = st.gf2.consistent();
  return st.stats;
}

bool is_nil_linking(const Graph& g, EquationSet set, const Deadline* deadline) {
  const LinkingEngine engine(g, false);
  SystemState st = engine.fresh_state();
  return set == EquationSet::CycleSpaceBasis ? engine.add_basis_equations(st, true, deadline)
                                             : engine.add_all_pair_equations(st, true, deadline);
}

namespace {

// Shared driver for is_maxnil / nil_extensions; stops after `limit` hits.
std::optional<std::vector<Edge>> scan_extensions(const Graph& g, std::size_t limit, const Deadline* deadline) {
  LinkingEngine engine(g, true);
  SystemState base = engine.fresh_state();
  if (!engine.add_basis_equations(base, true, deadline)) return std::nullopt;
  base.seen.clear();
  std::vector<Edge> found;
  for (const Edge& e : g.non_edges()) {
    engine.set_extra_edge(e.u, e.v);
    SystemState trial = base;
    if (engine.add_extra_edge_equations(trial, deadline)) {
      found.push_back(e);
      if (found.size() >= limit) break;
    }
  }
  return found;
}

}  // namespace

bool is_maxnil(const Graph& g, const Deadline* deadline) {
  const auto ext = scan_extensions(g, 1, deadline);
  return ext.has_value() && ext->empty();
}

std::vector<Edge> nil_extensions(const Graph& g, const Deadline* deadline) {
  auto ext = scan_extensions(g, static_cast<std::size_t>(-1), deadline);
  if (!ext) throw InvalidArgument("graph is intrinsically linked");
  return *ext;
}

}  // namespace linkless
