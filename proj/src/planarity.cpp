#include "linkless/planarity.hpp"

#include "linkless/errors.hpp"
#include "linkless/minors.hpp"

namespace linkless {

bool is_planar(const Graph& g, const Deadline* deadline) {
  const int n = g.order();
  if (n <= 4) return true;
  if (g.size() > 3 * n - 6) return false;
  static const Graph k5 = Graph::complete(5);
  static const Graph k33 = Graph::complete_bipartite(3, 3);
  return !has_minor(g, k5, deadline) && !has_minor(g, k33, deadline);
}

bool is_maximal_planar(const Graph& g, const Deadline* deadline) {
  if (g.order() < 3) throw TooSmall("maximal planarity needs at least 3 vertices");
  return g.size() == 3 * g.order() - 6 && is_planar(g, deadline);
}

ApexReport apex_report(const Graph& g, const Deadline* deadline) {
  ApexReport report;
  for (int v = 0; v < g.order(); ++v) {
    if (is_planar(g.without_vertex(v), deadline)) {
      report.is_apex = true;
      report.witness = v;
      break;
    }
  }
  return report;
}

std::optional<std::pair<int, int>> two_apex_witness(const Graph& g, const Deadline* deadline) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (is_planar(g.induced(g.vertices() & ~bit(u) & ~bit(v)), deadline)) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

bool classify_maxnil_apex(const Graph& g, bool verify) {
  const int n = g.order();
  const bool has_dominating = degree_profile(g).max_degree == n - 1 && n >= 1;
  if (!verify) return has_dominating;

  const bool apex = apex_report(g).is_apex;
  bool cone_over_triangulation = false;
  for (int v = 0; v < n && !cone_over_triangulation; ++v) {
    if (g.degree(v) != n - 1) continue;
    const Graph base = g.without_vertex(v);
    // Below three vertices only the complete graph is edge-maximal.
    const int k = base.order();
    cone_over_triangulation = k >= 3 ? is_maximal_planar(base) : base.size() == k * (k - 1) / 2;
  }
  if (apex != has_dominating || cone_over_triangulation != has_dominating) {
    throw PropositionViolation("apex=" + std::to_string(apex) + " dominating=" + std::to_string(has_dominating) +
                               " cone-over-triangulation=" + std::to_string(cone_over_triangulation) +
                               " for " + to_string(g));
  }
  return has_dominating;
}

}  // namespace linkless
