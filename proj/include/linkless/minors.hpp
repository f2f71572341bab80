#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkless/graph.hpp"

namespace linkless {

class Deadline;

/// Branch sets of a minor model of H in G: parts[i] is the connected vertex
/// set of G standing in for vertex i of H.
struct BranchDecomposition {
  std::vector<VertexSet> parts;
};

/// True iff `model` is a valid model of h in g.
bool is_valid_model(const Graph& g, const Graph& h, const BranchDecomposition& model);

/// Exact minor test by branch-set search. Returns a model when h is a minor of g.
std::optional<BranchDecomposition> find_minor(const Graph& g, const Graph& h,
                                              const Deadline* deadline = nullptr);
bool has_minor(const Graph& g, const Graph& h, const Deadline* deadline = nullptr);

/// K6-minor test by contraction enumeration: some forest of n-6 edges contracts
/// g onto K6. g must be connected (NotConnected otherwise).
bool has_k6_minor(const Graph& g, const Deadline* deadline = nullptr);

/// has_k6_minor applied to every component with at least 6 vertices.
bool has_k6_minor_in_some_component(const Graph& g, const Deadline* deadline = nullptr);

/// Delta-to-wye: removes the triangle's edges and joins a new vertex (numbered n)
/// to its corners. Throws NotATriangle.
Graph triangle_y_move(const Graph& g, int a, int b, int c);

/// Wye-to-delta: deletes the degree-3 vertex v (higher vertices shift down) and
/// joins its neighbors pairwise. Throws NotDegreeThree.
Graph y_triangle_move(const Graph& g, int v);

/// All triangles {a<b<c} of g.
std::vector<std::array<int, 3>> triangles(const Graph& g);

struct PetersenFamily {
  std::vector<Graph> members;  // BFS discovery order from K6
  std::vector<std::string> names;
};

/// Closure of {K6} under delta-wye and wye-delta moves, up to isomorphism.
/// Wye-delta is applied only where it creates no parallel edge, so every
/// member has 15 edges.
PetersenFamily generate_petersen_family();

/// Shared, lazily computed copy of the family.
const PetersenFamily& petersen_family();

/// Index into petersen_family() of the first member (in increasing order) that
/// is a minor of g.
std::optional<std::size_t> petersen_minor(const Graph& g, const Deadline* deadline = nullptr);

/// Intrinsic linking decided by the Petersen-family minor characterization.
bool is_il_minor(const Graph& g, const Deadline* deadline = nullptr);

}  // namespace linkless
