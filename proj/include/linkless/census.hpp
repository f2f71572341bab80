#pragma once

// Enumeration of maxnIL graphs of a given order: structural sieves, the
// K6-minor and linking filters over an externally generated graph6 stream,
// and the two constructive streams (cones over triangulations, degree-3
// vertices attached to triangles of smaller maxnIL graphs).

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "linkless/g6.hpp"
#include "linkless/graph.hpp"

namespace linkless {

struct SieveSpec {
  int n = 0;
  int min_edges = 0;
  int max_edges = 0;
  int min_degree = 0;
  int max_degree = 0;
  int min_connectivity = 0;
  bool require_k6_minor_free = true;

  /// Order, size, degree and connectivity bounds. The K6 condition is not
  /// checked here.
  bool admits(const Graph& g) const;
  /// True iff every graph admitted by `inner` is admitted by this sieve.
  bool covers(const SieveSpec& inner) const;
};

enum class SearchPhase {
  Full,
  /// Order 11 only: the apex graphs are known, so max degree drops to n-2 and
  /// degree-3 vertices are handled by extension.
  NonApex,
};

/// Per-order search bounds for 3 <= n <= 13. Throws UnsupportedOrder.
SieveSpec default_sieve(int n, SearchPhase phase = SearchPhase::Full);

void to_json(nlohmann::json& j, const SieveSpec& s);
void from_json(const nlohmann::json& j, SieveSpec& s);

/// What an external generator promises about a graph6 file.
struct SourceManifest {
  SieveSpec bounds;  // require_k6_minor_free is ignored
  std::optional<std::uint64_t> count;
  std::string generator;
};

void to_json(nlohmann::json& j, const SourceManifest& m);
void from_json(const nlohmann::json& j, SourceManifest& m);

/// Throws IncompleteSource unless the manifest's bounds cover `sieve`.
void check_coverage(const SourceManifest& manifest, const SieveSpec& sieve);

enum class Predicate { K6MinorFree, Nil, Maxnil, NonApex };

const char* to_string(Predicate p);
/// Accepts "k6-minor-free", "nil", "maxnil", "non-apex".
std::optional<Predicate> parse_predicate(std::string_view text);

/// Records surviving each stage; later stages never exceed earlier ones.
struct FilterCounts {
  std::uint64_t read = 0;
  std::uint64_t malformed = 0;
  std::uint64_t decoded = 0;
  std::uint64_t sieve = 0;
  std::uint64_t k6_minor_free = 0;
  std::uint64_t passed = 0;
  std::uint64_t timed_out = 0;

  FilterCounts& operator+=(const FilterCounts& o);
};

void to_json(nlohmann::json& j, const FilterCounts& c);
void from_json(const nlohmann::json& j, FilterCounts& c);

struct FilterOptions {
  std::optional<SieveSpec> sieve;
  Predicate predicate = Predicate::Maxnil;
  int jobs = 1;
  std::optional<double> timeout_seconds;  // per graph
  std::size_t batch = 4096;
};

struct FilterSinks {
  std::function<void(const G6Record&)> passed;
  std::function<void(const G6Record&)> timed_out;
  std::function<void(const G6Record&)> malformed;
};

/// Runs the filter chain sieve -> K6-minor-free -> predicate over a graph6
/// stream. Records reach the sinks in input order whatever the job count.
FilterCounts run_filter(std::istream& in, const FilterOptions& options, const FilterSinks& sinks);

/// Cones over maximal planar graphs. Throws NotMaximalPlanar (naming the
/// index) and InvalidArgument if two inputs give isomorphic cones.
std::vector<Graph> apex_maxnil_from_triangulations(std::span<const Graph> triangulations);

struct Degree3Extensions {
  std::size_t raw = 0;               // one per (graph, triangle)
  std::size_t distinct_per_source = 0;  // up to isomorphism within each source graph
  std::vector<Graph> graphs;         // up to isomorphism over all sources
};

/// New vertex joined to the corners of each triangle of each input graph.
Degree3Extensions degree3_extensions(std::span<const Graph> graphs);

struct CensusRow {
  int n = 0;
  std::size_t total = 0;
  std::size_t apex = 0;
  std::map<int, std::size_t> edge_histogram;
  double runtime_seconds = 0;
  std::string input_digest;
};

void to_json(nlohmann::json& j, const CensusRow& r);
void from_json(const nlohmann::json& j, CensusRow& r);

struct CensusInputs {
  /// Main-stream survivors (sieve, K6-minor-free, maxnIL) and the sieve used.
  std::vector<Graph> searched;
  std::optional<SieveSpec> sieve;
  /// Maximal planar graphs of order n-1.
  std::vector<Graph> triangulations;
  /// All maxnIL graphs of order n-1.
  std::vector<Graph> previous_maxnil;
};

struct CensusResult {
  CensusRow row;
  std::vector<Graph> survivors;  // sorted by (edge count, graph6 bytes)
  std::size_t from_search = 0;
  std::size_t from_apex = 0;
  std::size_t from_degree3 = 0;
  Degree3Extensions extensions;   // candidates before the maxnIL filter
  std::size_t extensions_maxnil = 0;
};

/// Merges the three streams up to isomorphism and classifies each survivor.
/// Every constructed graph that the sieve admits must also have come out of
/// the search; otherwise the source was incomplete (IncompleteSource).
/// Throws PropositionViolation if the apex criteria disagree on a survivor.
CensusResult assemble_census(int n, const CensusInputs& inputs);

/// Filters `source` with default_sieve(n, phase) and the maxnIL predicate,
/// then assembles. The manifest must cover the sieve and, if it declares a
/// count, match the number of records read.
CensusResult census(int n, std::istream& source, const SourceManifest& manifest, CensusInputs extra,
                    SearchPhase phase = SearchPhase::Full, int jobs = 1);

struct ComplementVerdict {
  bool il_by_linking = false;
  bool il_by_minor = false;
  bool k6_minor = false;  // in some component
};

/// Both IL deciders and the K6 test on complement(g), for each g.
std::vector<ComplementVerdict> complement_verdicts(std::span<const Graph> graphs, int jobs = 1);

/// (edge count, graph6 bytes) order used for every survivor file.
bool census_order(const Graph& a, const Graph& b);

}  // namespace linkless
