#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>

#include "linkless/pipeline.hpp"
#include "support.hpp"

using namespace linkless;
using namespace testing;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(LINKLESS_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count_lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("linkless-cli-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("query") {
  const Result k6 = run("query E~~w --il --maxnil");
  CHECK(k6.code == 0);
  CHECK(k6.out.find("il: true") != std::string::npos);
  CHECK(k6.out.find("maxnil: false") != std::string::npos);

  const Result json = run("query E~~w --all --json");
  REQUIRE(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["il"] == true);
  CHECK(j["k6_minor"] == true);
  CHECK(j["order"] == 6);
  CHECK(j["size"] == 15);
  CHECK(j["connectivity"] == 5);

  const Result k6m = run("query " + encode_g6(k6_minus()) + " --maxnil --apex --json");
  REQUIRE(k6m.code == 0);
  CHECK(nlohmann::json::parse(k6m.out)["maxnil"] == true);
  CHECK(nlohmann::json::parse(k6m.out)["apex"] == true);

  CHECK(run("query E~~").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("query").code == 1);
}

TEST_CASE("family") {
  const Result r = run("family");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 7);
  std::istringstream lines(r.out);
  G6Reader reader(lines);
  while (auto rec = reader.next()) {
    REQUIRE(rec->ok());
    CHECK(rec->graph->size() == 15);
  }
}

TEST_CASE("filter and census from the shell") {
  const std::string input = (generated_dir() / "search_n7.g6").string();
  const fs::path out = scratch("maxnil7.g6");
  const Result r = run("filter --input " + input + " --output " + out.string() + " --predicate maxnil --sieve-n 7");
  CHECK(r.code == 0);
  CHECK(read_graphs(out).size() == 2);
  const auto manifest = read_json(out.string() + ".manifest.json").get<RunManifest>();
  CHECK(manifest.outputs.at(0).records == 2);
  CHECK(manifest.inputs.at(0).sha256 == sha256_file(input));

  CHECK(run("filter --input /nonexistent.g6 --output " + out.string()).code == 2);

  const fs::path prev = scratch("prev6.g6");
  write_graphs(prev, std::vector<Graph>{k6_minus()});
  const fs::path census_out = scratch("census7.g6");
  const std::string tri = (data_dir() / "triangulations_n6.g6").string();
  const Result c = run("census --sieve-n 7 --input " + input + " --triangulations " + tri + " --previous " +
                       prev.string() + " --output " + census_out.string());
  CHECK(c.code == 0);
  const auto row = read_json(census_out.string() + ".json").get<CensusRow>();
  CHECK(row.total == 2);
  CHECK(row.apex == 2);

  const fs::path bad_manifest = scratch("narrow.json");
  SourceManifest narrow = load_source_manifest(input + ".manifest.json");
  narrow.bounds.max_edges = 17;
  write_json(bad_manifest, narrow);
  const Result incomplete = run("census --sieve-n 7 --input " + input + " --source-manifest " + bad_manifest.string() +
                                " --output " + census_out.string());
  CHECK(incomplete.code == 3);

  fs::remove_all(out.parent_path());
}

TEST_CASE("complement check") {
  const fs::path in = scratch("pair.g6");
  write_graphs(in, std::vector<Graph>{Graph(6), complement(petersen())});
  const Result r = run("complement-check --input " + in.string() + " --json");
  CHECK(r.code == 0);
  CHECK(r.out.find("true") != std::string::npos);
  fs::remove_all(in.parent_path());
}
