#include "doctest.h"

#include <unistd.h>

#include "linkless/errors.hpp"
#include "linkless/pipeline.hpp"
#include "support.hpp"

using namespace linkless;
using namespace testing;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("linkless-test-" + std::to_string(::getpid()) + "-" +
                                        std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::vector<fs::path> shard_files(const fs::path& dir, const std::string& stem) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind(stem + ".", 0) == 0 && name.size() == stem.size() + 8 && name.ends_with(".g6")) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

CensusJob job_for(int n, const fs::path& work) {
  CensusJob job;
  job.n = n;
  job.source = generated_dir() / ("search_n" + std::to_string(n) + ".g6");
  job.source_manifest = load_source_manifest(job.source.string() + ".manifest.json");
  job.triangulations = data_dir() / ("triangulations_n" + std::to_string(n - 1) + ".g6");
  job.work_dir = work;
  job.shard_size = 500;
  return job;
}

}  // namespace

TEST_CASE("SHA-256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  TempDir tmp;
  spit(tmp.path / "abc", "abc");
  CHECK(sha256_file(tmp.path / "abc") == sha256_hex("abc"));
  CHECK_THROWS_AS(sha256_file(tmp.path / "nope"), IoError);
}

TEST_CASE("sharding restores the input byte for byte") {
  TempDir tmp;
  std::string big;
  big.reserve(2500000 * 5);
  const char* lines[] = {"E~~w", "Bw", "D~{", "@"};
  for (std::size_t i = 0; i < 2500000; ++i) {
    big += lines[i % 4];
    big += '\n';
  }
  spit(tmp.path / "big.g6", big);
  const RunManifest m = run_shard_job(tmp.path / "big.g6", tmp.path / "big", 1000000);
  const auto shards = shard_files(tmp.path, "big");
  REQUIRE(shards.size() == 3);
  CHECK(m.outputs.size() == 3);
  std::string joined;
  for (const auto& s : shards) joined += slurp(s);
  CHECK(sha256_hex(joined) == sha256_hex(big));
  CHECK(m.outputs[0].records == 1000000);
  CHECK(m.outputs[2].records == 500000);

  spit(tmp.path / "one.g6", "E~~w");
  run_shard_job(tmp.path / "one.g6", tmp.path / "one", 1000000);
  const auto single = shard_files(tmp.path, "one");
  REQUIRE(single.size() == 1);
  CHECK(slurp(single[0]) == "E~~w");

  CHECK_THROWS_AS(run_shard_job(tmp.path / "absent.g6", tmp.path / "x", 10), IoError);
}

TEST_CASE("filter jobs are idempotent") {
  TempDir tmp;
  FilterJob job;
  job.input = generated_dir() / "search_n8.g6";
  job.output = tmp.path / "a.g6";
  job.options.sieve = default_sieve(8);
  job.source = load_source_manifest(job.input.string() + ".manifest.json");
  const RunManifest first = run_filter_job(job);
  job.output = tmp.path / "b.g6";
  const RunManifest second = run_filter_job(job);
  CHECK(slurp(tmp.path / "a.g6") == slurp(tmp.path / "b.g6"));
  CHECK(first.outputs.at(0).sha256 == second.outputs.at(0).sha256);
  CHECK(first.outputs.at(0).records == 6);
  CHECK(first.inputs.at(0).sha256 == sha256_file(job.input));
  REQUIRE(first.stages.size() == 5);
  CHECK(first.stages.front() == std::pair<std::string, std::uint64_t>{"read", 2060});
  CHECK(first.stages.back() == std::pair<std::string, std::uint64_t>{"maxnil", 6});
  for (std::size_t i = 1; i < first.stages.size(); ++i) CHECK(first.stages[i].second <= first.stages[i - 1].second);
  CHECK_FALSE(fs::exists(tmp.path / "a.g6.timeout.g6"));

  const RunManifest round = nlohmann::json(first).get<RunManifest>();
  CHECK(round.stages == first.stages);
  CHECK(round.outputs.at(0).sha256 == first.outputs.at(0).sha256);

  spit(tmp.path / "empty.g6", "");
  FilterJob empty;
  empty.input = tmp.path / "empty.g6";
  empty.output = tmp.path / "empty.out.g6";
  const RunManifest e = run_filter_job(empty);
  CHECK(slurp(empty.output).empty());
  CHECK(e.stages.front().second == 0);

  FilterJob narrow = job;
  narrow.source->bounds.max_edges = 20;
  CHECK_THROWS_AS(run_filter_job(narrow), IncompleteSource);
}

TEST_CASE("graph files and JSON round trip") {
  TempDir tmp;
  const std::vector<Graph> gs{Graph::complete(6), petersen()};
  const FileDigest d = write_graphs(tmp.path / "g.g6", gs);
  CHECK(d.records == 2);
  CHECK(d.sha256 == sha256_file(tmp.path / "g.g6"));
  CHECK(read_graphs(tmp.path / "g.g6") == gs);
  write_json(tmp.path / "x.json", nlohmann::json{{"k", 1}});
  CHECK(read_json(tmp.path / "x.json")["k"] == 1);
  CHECK_THROWS_AS(read_json(tmp.path / "missing.json"), IoError);
}

TEST_CASE("census runs resume from finished shards") {
  TempDir tmp;
  const CensusJob job = job_for(8, tmp.path / "work");
  CensusJob seeded = job;
  seeded.previous_maxnil = tmp.path / "prev.g6";
  write_graphs(tmp.path / "prev.g6", std::vector<Graph>{Graph::complete(6).without_edge(0, 1)});
  std::vector<Graph> seven;
  {
    CensusJob j7 = job_for(7, tmp.path / "work7");
    j7.previous_maxnil = tmp.path / "prev.g6";
    seven = run_census_job(j7).result.survivors;
  }
  REQUIRE(seven.size() == 2);
  write_graphs(tmp.path / "prev7.g6", seven);
  seeded.previous_maxnil = tmp.path / "prev7.g6";

  const CensusRun first = run_census_job(seeded);
  CHECK(first.shards == 5);
  CHECK(first.shards_reused == 0);
  CHECK(first.result.row.total == 6);
  CHECK(first.result.row.apex == 5);

  const CensusRun second = run_census_job(seeded);
  CHECK(second.shards_reused == 5);
  CHECK(second.result.row.total == first.result.row.total);
  CHECK(second.result.row.edge_histogram == first.result.row.edge_histogram);
  CHECK(second.result.survivors == first.result.survivors);
  CHECK(second.counts.passed == first.counts.passed);

  // A tampered shard output is recomputed.
  spit(tmp.path / "work" / "maxnil.0001.g6", "E~~w\n");
  const CensusRun third = run_census_job(seeded);
  CHECK(third.shards_reused == 4);
  CHECK(third.result.survivors == first.result.survivors);

  CensusJob undeclared = seeded;
  undeclared.source_manifest.count = 1;
  undeclared.work_dir = tmp.path / "work-count";
  CHECK_THROWS_AS(run_census_job(undeclared), IncompleteSource);

  CensusJob rushed = job_for(9, tmp.path / "work-rushed");
  rushed.timeout_seconds = 0.0;
  write_graphs(tmp.path / "prev8.g6", first.result.survivors);
  rushed.previous_maxnil = tmp.path / "prev8.g6";
  CHECK_THROWS_AS(run_census_job(rushed), IncompleteSource);
}
