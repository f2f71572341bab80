#pragma once

// Linkless-embeddability by mod-2 linking numbers.
//
// A fixed book diagram (vertices on a circle in index order, edges drawn as
// chords) serves as the reference embedding. Every other embedding differs by
// crossing changes, and a full twist between disjoint edges e, f flips the
// mod-2 linking number of each link whose components separate e from f. So g
// is linklessly embeddable iff the GF(2) system
//
//   sum_{e in C1, f in C2} x_{ef} = lk2(C1, C2)   for disjoint cycles C1, C2
//
// has a solution.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "linkless/graph.hpp"

namespace linkless {

class Deadline;

struct Crossing {
  int over = 0;   // index into BookDiagram::chords
  int under = 0;
};

/// Reference embedding of g. Chords are g.edges(); two chords cross iff their
/// endpoints interleave on the circle, and the chord with the smaller first
/// endpoint passes over.
struct BookDiagram {
  int order = 0;
  std::vector<Edge> chords;
  std::vector<Crossing> crossings;
};

/// True iff the chords interleave (a<c<b<d or c<a<d<b after sorting endpoints).
bool chords_cross(Edge e, Edge f);

BookDiagram build_diagram(const Graph& g);

/// A simple cycle as a closed walk starting at its smallest vertex, oriented so
/// that walk[1] < walk.back().
struct Cycle {
  std::vector<int> walk;
  VertexSet vertices = 0;

  std::vector<Edge> edges() const;
};

struct CyclePair {
  Cycle first;   // first.walk[0] < second.walk[0]
  Cycle second;
  int lk2 = 0;
};

/// Every simple cycle of g exactly once.
std::vector<Cycle> enumerate_cycles(const Graph& g);

/// Every unordered pair of vertex-disjoint simple cycles, exactly once, with
/// its mod-2 linking number in build_diagram(g). Pairs are streamed; nothing
/// beyond the current pair is materialized.
void for_each_disjoint_cycle_pair(const Graph& g, const std::function<void(const CyclePair&)>& visit);
std::vector<CyclePair> enumerate_disjoint_cycle_pairs(const Graph& g);

/// Parity of the crossings where an edge of c1 passes over an edge of c2.
/// Throws NotDisjoint when the cycles share a vertex.
int lk2(const BookDiagram& diagram, const Cycle& c1, const Cycle& c2);

/// Which equations feed the solver. Both choices span the same row space.
enum class EquationSet {
  /// One equation per unordered pair of disjoint cycles.
  AllCyclePairs,
  /// Induced cycles C paired with a fundamental cycle basis of g - V(C).
  CycleSpaceBasis,
};

struct LinkingStats {
  std::size_t equations = 0;   // generated
  std::size_t distinct = 0;    // after deduplication
  std::size_t rank = 0;
  std::size_t columns = 0;     // disjoint edge pairs that received a variable
  bool consistent = true;
};

/// Builds and solves the full system without early exit.
LinkingStats linking_stats(const Graph& g, EquationSet set = EquationSet::CycleSpaceBasis);

/// True iff g is linklessly embeddable. Stops at the first inconsistent row.
bool is_nil_linking(const Graph& g, EquationSet set = EquationSet::CycleSpaceBasis,
                    const Deadline* deadline = nullptr);

/// nIL, and adding any missing edge makes it intrinsically linked.
bool is_maxnil(const Graph& g, const Deadline* deadline = nullptr);

/// For an nIL graph g: non-edges uv such that g + uv is still nIL.
/// Empty when g is maxnIL. Throws InvalidArgument if g itself is IL.
std::vector<Edge> nil_extensions(const Graph& g, const Deadline* deadline = nullptr);

}  // namespace linkless
