#include "linkless/minors.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

#include "linkless/deadline.hpp"
#include "linkless/errors.hpp"
#include "linkless/isomorphism.hpp"

namespace linkless {

namespace {

// Vertices of `scope` in BFS order from each component's smallest vertex, so
// that every prefix tends to stay connected.
std::vector<int> bfs_order(const Graph& g, VertexSet scope) {
  std::vector<int> order;
  VertexSet seen = 0;
  while ((scope & ~seen) != 0) {
    const int root = lowest(scope & ~seen);
    std::deque<int> queue{root};
    seen |= bit(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for_each_vertex(g.neighbors(v) & scope & ~seen, [&](int w) {
        seen |= bit(w);
        queue.push_back(w);
      });
    }
  }
  return order;
}

// Injective map of h's vertices onto the k-vertex quotient q that sends
// edges to edges. h vertices go in decreasing degree order, candidates too.
class QuotientMatcher {
 public:
  explicit QuotientMatcher(const Graph& h) : h_(h), k_(h.order()), edges_(h.size()) {
    order_.resize(static_cast<std::size_t>(k_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    for (int v : order_) sorted_degrees_.push_back(h.degree(v));
  }

  bool match(std::span<const VertexSet> q, std::vector<int>& assignment) const {
    std::array<int, kMaxVertices> qdeg{};
    int qedges = 0;
    for (int i = 0; i < k_; ++i) {
      qdeg[static_cast<std::size_t>(i)] = popcount(q[static_cast<std::size_t>(i)]);
      qedges += qdeg[static_cast<std::size_t>(i)];
    }
    if (qedges / 2 < edges_) return false;
    std::array<int, kMaxVertices> sorted = qdeg;
    std::sort(sorted.begin(), sorted.begin() + k_, std::greater<>());
    for (int i = 0; i < k_; ++i) {
      if (sorted[static_cast<std::size_t>(i)] < sorted_degrees_[static_cast<std::size_t>(i)]) return false;
    }
    std::vector<int> cand_order(static_cast<std::size_t>(k_));
    std::iota(cand_order.begin(), cand_order.end(), 0);
    std::stable_sort(cand_order.begin(), cand_order.end(), [&](int a, int b) {
      return qdeg[static_cast<std::size_t>(a)] > qdeg[static_cast<std::size_t>(b)];
    });

    assignment.assign(static_cast<std::size_t>(k_), -1);
    VertexSet used = 0;
    VertexSet mapped = 0;
    auto search = [&](auto&& self, int depth) -> bool {
      if (depth == k_) return true;
      const int v = order_[static_cast<std::size_t>(depth)];
      VertexSet need = 0;  // images of already-mapped h-neighbors
      for_each_vertex(h_.neighbors(v) & mapped,
                      [&](int u) { need |= bit(assignment[static_cast<std::size_t>(u)]); });
      for (int w : cand_order) {
        if ((used & bit(w)) != 0) continue;
        if (qdeg[static_cast<std::size_t>(w)] < h_.degree(v)) continue;
        if ((q[static_cast<std::size_t>(w)] & need) != need) continue;
        assignment[static_cast<std::size_t>(v)] = w;
        used |= bit(w);
        mapped |= bit(v);
        if (self(self, depth + 1)) return true;
        used &= ~bit(w);
        mapped &= ~bit(v);
      }
      assignment[static_cast<std::size_t>(v)] = -1;
      return false;
    };
    return search(search, 0);
  }

 private:
  const Graph& h_;
  int k_;
  int edges_;
  std::vector<int> order_;
  std::vector<int> sorted_degrees_;
};

// Enumerates partitions of (a subset of) `scope` into exactly k connected
// parts and tests each quotient against h.
class BranchSetSearch {
 public:
  BranchSetSearch(const Graph& g, const Graph& h, VertexSet scope, bool allow_deletion,
                  const Deadline* deadline)
      : g_(g),
        k_(h.order()),
        allow_deletion_(allow_deletion),
        order_(bfs_order(g, scope)),
        matcher_(h),
        deadline_(deadline) {}

  std::optional<BranchDecomposition> run() {
    unassigned_ = 0;
    for (int v : order_) unassigned_ |= bit(v);
    parts_.fill(0);
    open_ = 0;
    if (assign(0)) {
      BranchDecomposition model;
      for (int hv = 0; hv < k_; ++hv) {
        model.parts.push_back(parts_[static_cast<std::size_t>(assignment_[static_cast<std::size_t>(hv)])]);
      }
      return model;
    }
    return std::nullopt;
  }

 private:
  bool parts_can_connect() const {
    for (int p = 0; p < open_; ++p) {
      const VertexSet part = parts_[static_cast<std::size_t>(p)];
      const VertexSet reach = g_.reachable(bit(lowest(part)), part | unassigned_);
      if ((reach & part) != part) return false;
    }
    return true;
  }

  bool leaf() {
    std::array<VertexSet, kMaxVertices> q{};
    for (int i = 0; i < k_; ++i) {
      const VertexSet nb = g_.neighborhood(parts_[static_cast<std::size_t>(i)]);
      for (int j = 0; j < k_; ++j) {
        if (i != j && (nb & parts_[static_cast<std::size_t>(j)]) != 0) q[static_cast<std::size_t>(i)] |= bit(j);
      }
    }
    return matcher_.match(std::span<const VertexSet>(q.data(), static_cast<std::size_t>(k_)), assignment_);
  }

  bool try_state(std::size_t idx) {
    if (open_ + static_cast<int>(order_.size() - idx) < k_) return false;
    if (!parts_can_connect()) return false;
    return assign(idx);
  }

  bool assign(std::size_t idx) {
    poll(deadline_);
    if (idx == order_.size()) return open_ == k_ && leaf();
    const int v = order_[idx];
    unassigned_ &= ~bit(v);
    for (int p = 0; p < open_; ++p) {
      parts_[static_cast<std::size_t>(p)] |= bit(v);
      if (try_state(idx + 1)) return true;
      parts_[static_cast<std::size_t>(p)] &= ~bit(v);
    }
    if (open_ < k_) {
      parts_[static_cast<std::size_t>(open_++)] = bit(v);
      if (try_state(idx + 1)) return true;
      parts_[static_cast<std::size_t>(--open_)] = 0;
    }
    if (allow_deletion_ && try_state(idx + 1)) return true;
    unassigned_ |= bit(v);
    return false;
  }

  const Graph& g_;
  int k_;
  bool allow_deletion_;
  std::vector<int> order_;
  QuotientMatcher matcher_;
  const Deadline* deadline_;
  std::array<VertexSet, kMaxVertices> parts_{};
  int open_ = 0;
  VertexSet unassigned_ = 0;
  std::vector<int> assignment_;
};

int edges_within(const Graph& g, VertexSet s) {
  int total = 0;
  for_each_vertex(s, [&](int v) { total += popcount(g.neighbors(v) & s); });
  return total / 2;
}

}  // namespace

bool is_valid_model(const Graph& g, const Graph& h, const BranchDecomposition& model) {
  if (model.parts.size() != static_cast<std::size_t>(h.order())) return false;
  VertexSet used = 0;
  for (VertexSet part : model.parts) {
    if (part == 0 || (part & ~g.vertices()) != 0 || (part & used) != 0) return false;
    if (g.reachable(bit(lowest(part)), part) != part) return false;
    used |= part;
  }
  for (const Edge& e : h.edges()) {
    const VertexSet a = model.parts[static_cast<std::size_t>(e.u)];
    const VertexSet b = model.parts[static_cast<std::size_t>(e.v)];
    if ((g.neighborhood(a) & b) == 0) return false;
  }
  return true;
}

std::optional<BranchDecomposition> find_minor(const Graph& g, const Graph& h, const Deadline* deadline) {
  const int k = h.order();
  if (k == 0) return BranchDecomposition{};
  if (k > g.order() || h.size() > g.size()) return std::nullopt;

  if (h.is_connected()) {
    // Any model inside a connected component can be grown to cover it, so
    // only covering partitions of each component need to be tried.
    for (VertexSet comp : g.components()) {
      if (popcount(comp) < k || edges_within(g, comp) < h.size()) continue;
      BranchSetSearch search(g, h, comp, /*allow_deletion=*/false, deadline);
      if (auto model = search.run()) return model;
    }
    return std::nullopt;
  }
  BranchSetSearch search(g, h, g.vertices(), /*allow_deletion=*/true, deadline);
  return search.run();
}

bool has_minor(const Graph& g, const Graph& h, const Deadline* deadline) {
  return find_minor(g, h, deadline).has_value();
}

bool has_k6_minor(const Graph& g, const Deadline* deadline) {
  const int n = g.order();
  if (!g.is_connected()) throw NotConnected("K6-minor search needs a connected graph");
  if (n < 6 || g.size() < 15) return false;

  const std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int need = n - 6;

  // Contraction state. Classes are named by their smallest vertex; `cadj`
  // is the simple quotient graph over class names and `quotient_edges` its
  // size. `apart[c]` holds vertices that class c must never absorb: an
  // earlier edge to them was skipped while they were separate, so absorbing
  // them would revisit a partition already reached by a smaller forest.
  struct State {
    std::array<std::uint8_t, kMaxVertices> label;
    std::array<VertexSet, kMaxVertices> members;
    std::array<VertexSet, kMaxVertices> cadj;
    std::array<VertexSet, kMaxVertices> apart;
    int quotient_edges;
  };
  std::vector<State> stack(static_cast<std::size_t>(need + 1));
  State& root = stack[0];
  for (int v = 0; v < n; ++v) {
    root.label[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
    root.members[static_cast<std::size_t>(v)] = bit(v);
    root.cadj[static_cast<std::size_t>(v)] = g.neighbors(v);
    root.apart[static_cast<std::size_t>(v)] = 0;
  }
  root.quotient_edges = m;

  auto search = [&](auto&& self, int start, int depth) -> bool {
    State& cur = stack[static_cast<std::size_t>(depth)];
    if (depth == need) {
      poll(deadline);
      return cur.quotient_edges == 15;  // six classes, simple quotient
    }
    // Each further contraction deletes at least the contracted edge.
    if (cur.quotient_edges - (need - depth) < 15) return false;
    const auto saved_apart = cur.apart;
    bool found = false;
    for (int i = start; i <= m - (need - depth) && !found; ++i) {
      const Edge e = edges[static_cast<std::size_t>(i)];
      const int a = cur.label[static_cast<std::size_t>(e.u)];
      const int b = cur.label[static_cast<std::size_t>(e.v)];
      if (a == b) continue;  // would close a cycle
      const std::size_t keep = static_cast<std::size_t>(std::min(a, b));
      const std::size_t gone = static_cast<std::size_t>(std::max(a, b));
      if ((cur.apart[keep] & cur.members[gone]) == 0) {
        State& nxt = stack[static_cast<std::size_t>(depth + 1)];
        nxt = cur;
        const VertexSet common = cur.cadj[keep] & cur.cadj[gone];
        nxt.quotient_edges = cur.quotient_edges - 1 - popcount(common);
        for_each_vertex(cur.members[gone],
                        [&](int w) { nxt.label[static_cast<std::size_t>(w)] = static_cast<std::uint8_t>(keep); });
        nxt.members[keep] |= cur.members[gone];
        nxt.members[gone] = 0;
        nxt.apart[keep] |= cur.apart[gone];
        nxt.cadj[keep] = (cur.cadj[keep] | cur.cadj[gone]) & ~bit(static_cast<int>(keep)) & ~bit(static_cast<int>(gone));
        nxt.cadj[gone] = 0;
        for_each_vertex(cur.cadj[gone], [&](int c) {
          if (static_cast<std::size_t>(c) == keep) return;
          nxt.cadj[static_cast<std::size_t>(c)] =
              (nxt.cadj[static_cast<std::size_t>(c)] & ~bit(static_cast<int>(gone))) | bit(static_cast<int>(keep));
        });
        found = self(self, i + 1, depth + 1);
      }
      // Edge i is skipped from here on.
      cur.apart[static_cast<std::size_t>(a)] |= bit(e.v);
      cur.apart[static_cast<std::size_t>(b)] |= bit(e.u);
    }
    cur.apart = saved_apart;
    return found;
  };
  return search(search, 0, 0);
}

bool has_k6_minor_in_some_component(const Graph& g, const Deadline* deadline) {
  for (VertexSet comp : g.components()) {
    if (popcount(comp) < 6) continue;
    if (has_k6_minor(g.induced(comp), deadline)) return true;
  }
  return false;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (const Edge& e : g.edges()) {
    for_each_vertex(g.neighbors(e.u) & g.neighbors(e.v) & ~all_vertices(e.v + 1),
                    [&](int c) { out.push_back({e.u, e.v, c}); });
  }
  return out;
}

Graph triangle_y_move(const Graph& g, int a, int b, int c) {
  const std::array<int, 3> t{a, b, c};
  for (int v : t) {
    if (v < 0 || v >= g.order()) throw NotATriangle("vertex out of range");
  }
  if (a == b || b == c || a == c || !g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(a, c)) {
    throw NotATriangle(std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
  }
  if (g.order() >= kMaxVertices) throw CapacityExceeded("delta-wye would exceed 32 vertices");
  const int y = g.order();
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    const bool in_triangle = (e == Edge::of(a, b)) || (e == Edge::of(b, c)) || (e == Edge::of(a, c));
    if (!in_triangle) es.push_back(e);
  }
  for (int v : t) es.push_back({v, y});
  return Graph::from_edges(y + 1, es);
}

Graph y_triangle_move(const Graph& g, int v) {
  if (v < 0 || v >= g.order() || g.degree(v) != 3) {
    throw NotDegreeThree("vertex " + std::to_string(v));
  }
  std::array<int, 3> nb{};
  int i = 0;
  for_each_vertex(g.neighbors(v), [&](int w) { nb[static_cast<std::size_t>(i++)] = w; });
  Graph out = g;
  out = out.with_edge(nb[0], nb[1]).with_edge(nb[1], nb[2]).with_edge(nb[0], nb[2]);
  return out.without_vertex(v);
}

namespace {

std::string family_member_name(const Graph& g) {
  const DegreeProfile p = degree_profile(g);
  switch (g.order()) {
    case 6: return "K6";
    case 7: return p.max_degree == 6 ? "K3,3,1" : "G7";
    case 8: {
      // K4,4 minus an edge is the bipartite member.
      const auto tri = triangles(g);
      return tri.empty() ? "K4,4-e" : "G8";
    }
    case 9: return "G9";
    case 10: return "Petersen";
    default: return "member-" + std::to_string(g.order());
  }
}

}  // namespace

PetersenFamily generate_petersen_family() {
  IsoClassSet seen;
  std::deque<Graph> queue;
  const Graph k6 = Graph::complete(6);
  seen.insert(k6);
  queue.push_back(k6);
  while (!queue.empty()) {
    const Graph g = queue.front();
    queue.pop_front();
    std::vector<Graph> next;
    for (const auto& t : triangles(g)) next.push_back(triangle_y_move(g, t[0], t[1], t[2]));
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 3) continue;
      const VertexSet nb = g.neighbors(v);
      bool independent = true;
      for_each_vertex(nb, [&](int w) { independent = independent && (g.neighbors(w) & nb) == 0; });
      if (independent) next.push_back(y_triangle_move(g, v));
    }
    for (const Graph& h : next) {
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  std::vector<Graph> members = seen.representatives();
  std::stable_sort(members.begin(), members.end(),
                   [](const Graph& a, const Graph& b) { return a.order() < b.order(); });
  PetersenFamily family;
  for (const Graph& g : members) {
    family.members.push_back(g);
    family.names.push_back(family_member_name(g));
  }
  return family;
}

const PetersenFamily& petersen_family() {
  static const PetersenFamily family = generate_petersen_family();
  return family;
}

std::optional<std::size_t> petersen_minor(const Graph& g, const Deadline* deadline) {
  if (g.order() < 6 || g.size() < 15) return std::nullopt;
  const auto& family = petersen_family();
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (has_minor(g, family.members[i], deadline)) return i;
  }
  return std::nullopt;
}

bool is_il_minor(const Graph& g, const Deadline* deadline) {
  return petersen_minor(g, deadline).has_value();
}

}  // namespace linkless
