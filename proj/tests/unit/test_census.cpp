#include "doctest.h"

#include <sstream>

#include "linkless/census.hpp"
#include "linkless/errors.hpp"
#include "linkless/isomorphism.hpp"
#include "linkless/linking.hpp"
#include "linkless/minors.hpp"
#include "linkless/pipeline.hpp"
#include "linkless/planarity.hpp"
#include "support.hpp"

using namespace linkless;
using namespace testing;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Graph> triangulations(int n) {
  return load(data_dir() / ("triangulations_n" + std::to_string(n) + ".g6"));
}

CensusResult run_census(int n, const std::vector<Graph>& previous) {
  const auto source = generated_dir() / ("search_n" + std::to_string(n) + ".g6");
  std::ifstream in(source);
  REQUIRE(in);
  CensusInputs extra;
  if (n >= 6) extra.triangulations = triangulations(n - 1);
  extra.previous_maxnil = previous;
  return census(n, in, load_source_manifest(source.string() + ".manifest.json"), extra);
}

}  // namespace

TEST_CASE("default sieves") {
  const SieveSpec s9 = default_sieve(9);
  CHECK(s9.min_edges == 18);
  CHECK(s9.max_edges == 26);
  CHECK(s9.min_degree == 3);
  CHECK(s9.max_degree == 8);
  CHECK(s9.min_connectivity == 2);

  const SieveSpec s11 = default_sieve(11, SearchPhase::NonApex);
  CHECK(s11.min_edges == 22);
  CHECK(s11.max_edges == 34);
  CHECK(s11.min_degree == 4);
  CHECK(s11.max_degree == 9);
  CHECK(default_sieve(11).covers(s11));
  CHECK_FALSE(s11.covers(default_sieve(11)));

  CHECK_THROWS_AS(default_sieve(2), UnsupportedOrder);
  CHECK_THROWS_AS(default_sieve(14), UnsupportedOrder);
  CHECK_THROWS_AS(default_sieve(10, SearchPhase::NonApex), UnsupportedOrder);

  CHECK(s9.admits(cone(triangulations(8).front())));
  CHECK_FALSE(s9.admits(Graph::complete(9)));
  CHECK_FALSE(s9.admits(Graph::cycle(9)));
  CHECK_FALSE(default_sieve(7).admits(Graph::complete(6)));

  // The maxnIL graphs already known at each order pass their sieve.
  CHECK(default_sieve(6).admits(k6_minus()));
  CHECK(default_sieve(5).admits(Graph::complete(5)));
  CHECK(default_sieve(3).admits(Graph::complete(3)));
}

TEST_CASE("source coverage") {
  SourceManifest m;
  m.bounds = default_sieve(8);
  CHECK_NOTHROW(check_coverage(m, default_sieve(8)));
  m.bounds.max_edges -= 1;
  CHECK_THROWS_AS(check_coverage(m, default_sieve(8)), IncompleteSource);

  const auto source = generated_dir() / "search_n7.g6";
  SourceManifest declared = load_source_manifest(source.string() + ".manifest.json");
  declared.count = *declared.count + 1;
  std::ifstream in(source);
  CHECK_THROWS_AS(census(7, in, declared, CensusInputs{}), IncompleteSource);
  CHECK_THROWS_AS(load_source_manifest(generated_dir() / "missing.manifest.json"), IncompleteSource);

  SourceManifest narrow = load_source_manifest(source.string() + ".manifest.json");
  narrow.bounds.min_degree = 4;
  std::ifstream again(source);
  CHECK_THROWS_AS(census(7, again, narrow, CensusInputs{}), IncompleteSource);
}

TEST_CASE("a search that misses a cone is rejected") {
  CensusInputs inputs;
  inputs.sieve = default_sieve(7);
  inputs.triangulations = triangulations(6);
  inputs.previous_maxnil = {k6_minus()};
  CHECK_THROWS_AS(assemble_census(7, inputs), IncompleteSource);
}

TEST_CASE("cones over triangulations") {
  const auto cones = apex_maxnil_from_triangulations(std::vector<Graph>{octahedron()});
  REQUIRE(cones.size() == 1);
  CHECK(cones[0].order() == 7);
  CHECK(cones[0].size() == 18);
  CHECK(is_maxnil(cones[0]));

  const auto t9 = triangulations(9);
  const auto many = apex_maxnil_from_triangulations(t9);
  CHECK(many.size() == 50);
  for (const Graph& g : many) {
    CHECK(g.order() == 10);
    CHECK(g.size() == 30);
    CHECK(classify_maxnil_apex(g, true));
  }

  CHECK_THROWS_AS(apex_maxnil_from_triangulations(std::vector<Graph>{Graph::cycle(5)}), NotMaximalPlanar);
  const std::vector<int> reversed{5, 4, 3, 2, 1, 0};
  const std::vector<Graph> twice{octahedron(), octahedron().permuted(reversed)};
  CHECK_THROWS_AS(apex_maxnil_from_triangulations(twice), InvalidArgument);
}

TEST_CASE("degree-3 extensions") {
  const auto from_k5 = degree3_extensions(std::vector<Graph>{Graph::complete(5)});
  CHECK(from_k5.raw == 10);
  CHECK(from_k5.distinct_per_source == 1);
  REQUIRE(from_k5.graphs.size() == 1);
  CHECK(from_k5.graphs[0].size() == 13);
  CHECK_FALSE(is_maxnil(from_k5.graphs[0]));

  const auto from_k6m = degree3_extensions(std::vector<Graph>{k6_minus()});
  CHECK(from_k6m.raw == triangle_count(k6_minus()));
  for (const Graph& g : from_k6m.graphs) {
    CHECK(g.order() == 7);
    CHECK(g.size() == 17);
    CHECK(degree_profile(g).min_degree == 3);
  }
}

TEST_CASE("filter runs are deterministic across job counts") {
  const std::string text = slurp(generated_dir() / "search_n8.g6");
  std::vector<std::string> outputs;
  std::vector<FilterCounts> counts;
  for (int jobs : {1, 3}) {
    std::istringstream in(text);
    FilterOptions opt;
    opt.sieve = default_sieve(8);
    opt.jobs = jobs;
    opt.batch = 97;
    std::string out;
    FilterSinks sinks;
    sinks.passed = [&](const G6Record& r) { out += r.text + "\n"; };
    counts.push_back(run_filter(in, opt, sinks));
    outputs.push_back(out);
  }
  CHECK(outputs[0] == outputs[1]);
  const FilterCounts& c = counts[0];
  CHECK(c.read == 2060);
  CHECK(c.read >= c.decoded);
  CHECK(c.decoded >= c.sieve);
  CHECK(c.sieve >= c.k6_minor_free);
  CHECK(c.k6_minor_free >= c.passed);
  CHECK(c.passed == 6);
  CHECK(c.timed_out == 0);
  CHECK(nlohmann::json(c).get<FilterCounts>().passed == c.passed);
}

TEST_CASE("malformed records and time limits are counted, not dropped") {
  std::istringstream in("E~~w\nE~~\nE~zw\n");
  FilterOptions opt;
  opt.predicate = Predicate::Nil;
  std::vector<std::string> passed;
  std::vector<std::size_t> bad;
  FilterSinks sinks;
  sinks.passed = [&](const G6Record& r) { passed.push_back(r.text); };
  sinks.malformed = [&](const G6Record& r) { bad.push_back(r.line_number); };
  const FilterCounts c = run_filter(in, opt, sinks);
  CHECK(c.read == 3);
  CHECK(c.malformed == 1);
  CHECK(bad == std::vector<std::size_t>{2});
  CHECK(passed == std::vector<std::string>{"E~zw"});

  // Under a zero budget every record is still accounted for exactly once.
  std::ifstream slow(generated_dir() / "sample_n11_m30.g6");
  FilterOptions tight;
  tight.sieve = default_sieve(11);
  tight.timeout_seconds = 0.0;
  std::size_t timed_out = 0;
  std::size_t accepted = 0;
  FilterSinks sink2;
  sink2.timed_out = [&](const G6Record&) { ++timed_out; };
  sink2.passed = [&](const G6Record&) { ++accepted; };
  const FilterCounts d = run_filter(slow, tight, sink2);
  CHECK(d.read == 200);
  CHECK(timed_out == d.timed_out);
  CHECK(accepted == d.passed);
  CHECK(d.timed_out > 0);

  CHECK(parse_predicate("non-apex") == Predicate::NonApex);
  CHECK(std::string(to_string(Predicate::K6MinorFree)) == "k6-minor-free");
  CHECK_FALSE(parse_predicate("bogus").has_value());
}

TEST_CASE("census rows for orders 3 to 8") {
  std::vector<Graph> previous;
  const std::map<int, std::pair<std::size_t, std::size_t>> expected{
      {3, {1, 1}}, {4, {1, 1}}, {5, {1, 1}}, {6, {1, 1}}, {7, {2, 2}}, {8, {6, 5}}};
  for (int n = 3; n <= 8; ++n) {
    const CensusResult r = run_census(n, previous);
    CHECK(r.row.n == n);
    CHECK(r.row.total == expected.at(n).first);
    CHECK(r.row.apex == expected.at(n).second);
    std::size_t histogram_total = 0;
    for (const auto& [m, k] : r.row.edge_histogram) histogram_total += k;
    CHECK(histogram_total == r.row.total);
    CHECK(std::is_sorted(r.survivors.begin(), r.survivors.end(), census_order));
    for (const Graph& g : r.survivors) {
      CHECK(is_maxnil(g));
      CHECK(g.size() <= 4 * n - 10 + (n <= 5 ? 10 : 0));
      CHECK_FALSE(has_k6_minor(g));
    }
    const CensusRow round = nlohmann::json(r.row).get<CensusRow>();
    CHECK(round.total == r.row.total);
    CHECK(round.edge_histogram == r.row.edge_histogram);
    previous = r.survivors;
  }
  CHECK(previous.size() == 6);
  CHECK(is_isomorphic(run_census(6, {}).survivors.front(), k6_minus()));
}

TEST_CASE("complement verdicts") {
  const std::vector<Graph> graphs{Graph(6), Graph::complete(6), complement(petersen()), Graph(10)};
  const auto v = complement_verdicts(graphs, 2);
  REQUIRE(v.size() == 4);
  CHECK(v[0].il_by_linking);
  CHECK(v[0].il_by_minor);
  CHECK(v[0].k6_minor);
  CHECK_FALSE(v[1].il_by_linking);
  CHECK(v[2].il_by_linking);
  CHECK(v[2].il_by_minor);
  CHECK_FALSE(v[2].k6_minor);
  CHECK(v[3].il_by_linking);
  for (const auto& x : v) CHECK(x.il_by_linking == x.il_by_minor);
}
