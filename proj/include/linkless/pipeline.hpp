#pragma once

// File-level jobs behind the command line tool: filtering, sharding and
// resumable census runs, each leaving a JSON run manifest next to its output.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "linkless/census.hpp"

namespace linkless {

namespace fs = std::filesystem;

/// Raised when a file cannot be opened, read or written.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("IoError: " + what) {}
};

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const fs::path& path);

struct FileDigest {
  std::string path;
  std::string sha256;
  std::uint64_t records = 0;
};

void to_json(nlohmann::json& j, const FileDigest& d);
void from_json(const nlohmann::json& j, FileDigest& d);

struct RunManifest {
  std::string tool_version;
  std::string command;
  std::vector<std::string> arguments;
  std::optional<SieveSpec> sieve;
  std::optional<std::string> predicate;
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;
  /// Stage name and records surviving it, in filter-chain order.
  std::vector<std::pair<std::string, std::uint64_t>> stages;
  double wall_seconds = 0;
  int jobs = 1;
  nlohmann::json extra = nlohmann::json::object();
};

void to_json(nlohmann::json& j, const RunManifest& m);
void from_json(const nlohmann::json& j, RunManifest& m);

/// Writes via a temporary file and rename.
void write_json(const fs::path& path, const nlohmann::json& value);
nlohmann::json read_json(const fs::path& path);

std::vector<Graph> read_graphs(const fs::path& path);
/// One graph6 line per graph; returns the file's digest.
FileDigest write_graphs(const fs::path& path, std::span<const Graph> graphs);

/// Stage list for a filter run: read, decoded, sieve, k6-minor-free, passed.
std::vector<std::pair<std::string, std::uint64_t>> stage_list(const FilterCounts& counts, Predicate predicate);

struct FilterJob {
  fs::path input;
  fs::path output;
  FilterOptions options;
  std::optional<SourceManifest> source;  // checked against the sieve when both are set
};

/// Survivors go to `output`; timed-out records to `output` + ".timeout.g6"
/// when there are any.
RunManifest run_filter_job(const FilterJob& job);

/// Splits `input` into files of `shard_size` lines named
/// <prefix>.0000.g6, <prefix>.0001.g6, ... Concatenating them restores the
/// input byte for byte.
RunManifest run_shard_job(const fs::path& input, const fs::path& prefix, std::size_t shard_size);

struct CensusJob {
  int n = 0;
  SearchPhase phase = SearchPhase::Full;
  fs::path source;
  SourceManifest source_manifest;
  std::optional<fs::path> triangulations;
  std::optional<fs::path> previous_maxnil;
  int jobs = 1;
  std::optional<double> timeout_seconds;
  /// With a work directory the source is sharded there and every finished
  /// shard leaves a digest-checked marker; a rerun skips those shards.
  std::optional<fs::path> work_dir;
  std::size_t shard_size = 1000000;
};

struct CensusRun {
  CensusResult result;
  FilterCounts counts;
  std::size_t shards = 0;
  std::size_t shards_reused = 0;
};

/// Throws IncompleteSource when the manifest does not cover the sieve, the
/// record count disagrees, or graphs were skipped by the time limit.
CensusRun run_census_job(const CensusJob& job);

/// Reads `<source>.manifest.json`. Throws IncompleteSource if missing.
SourceManifest load_source_manifest(const fs::path& manifest_path);

}  // namespace linkless
