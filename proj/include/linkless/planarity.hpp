#pragma once

#include <optional>
#include <utility>

#include "linkless/graph.hpp"

namespace linkless {

class Deadline;

/// Planarity by Wagner's theorem: no K5 and no K3,3 minor.
bool is_planar(const Graph& g, const Deadline* deadline = nullptr);

/// Planar with exactly 3n-6 edges. Throws TooSmall for n < 3.
bool is_maximal_planar(const Graph& g, const Deadline* deadline = nullptr);

struct ApexReport {
  bool is_apex = false;
  std::optional<int> witness;  // first vertex (by index) whose deletion leaves g planar
};

ApexReport apex_report(const Graph& g, const Deadline* deadline = nullptr);

/// First pair {u < v} whose deletion leaves g planar, if any.
std::optional<std::pair<int, int>> two_apex_witness(const Graph& g, const Deadline* deadline = nullptr);

/// Apex test for a graph already known to be maxnIL: true iff some vertex has
/// degree n-1. With `verify` set, also evaluates "g is apex" and "g is a cone
/// over a maximal planar graph" and throws PropositionViolation unless all
/// three agree.
bool classify_maxnil_apex(const Graph& g, bool verify = false);

}  // namespace linkless
