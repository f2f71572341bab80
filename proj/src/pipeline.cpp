#include "linkless/pipeline.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstring>
#include <cstdio>
#include <fstream>
#include <memory>

#include "linkless/errors.hpp"

namespace linkless {

namespace {

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) throw Error("SHA-256 unavailable");
  }
  void update(const char* data, std::size_t size) { EVP_DigestUpdate(ctx_.get(), data, size); }
  std::string hex() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_.get(), md.data(), &len);
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out.push_back(digits[md[i] >> 4]);
      out.push_back(digits[md[i] & 15]);
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

std::ifstream open_in(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

std::uint64_t count_lines(const fs::path& path) {
  std::ifstream in = open_in(path);
  std::uint64_t lines = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line != "\r") ++lines;
  }
  return lines;
}

FileDigest digest_of(const fs::path& path) {
  return FileDigest{path.string(), sha256_file(path), count_lines(path)};
}

std::string shard_name(const fs::path& prefix, std::size_t index, const char* suffix) {
  char buf[32];
  std::snprintf(buf, sizeof buf, ".%04zu%s", index, suffix);
  return prefix.string() + buf;
}

// Splits by newline count; the last shard keeps a missing final newline.
std::vector<fs::path> split_lines(const fs::path& input, const fs::path& prefix, std::size_t shard_size) {
  if (shard_size == 0) throw InvalidArgument("shard size must be at least 1");
  std::ifstream in = open_in(input);
  std::vector<fs::path> shards;
  std::ofstream out;
  std::size_t lines_in_shard = 0;
  std::vector<char> buffer(1 << 16);
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    const std::size_t got = static_cast<std::size_t>(in.gcount());
    std::size_t pos = 0;
    while (pos < got) {
      if (!out.is_open()) {
        shards.emplace_back(shard_name(prefix, shards.size(), ".g6"));
        out = open_out(shards.back());
        lines_in_shard = 0;
      }
      const char* nl = static_cast<const char*>(std::memchr(buffer.data() + pos, '\n', got - pos));
      const std::size_t end = nl ? static_cast<std::size_t>(nl - buffer.data()) + 1 : got;
      out.write(buffer.data() + pos, static_cast<std::streamsize>(end - pos));
      pos = end;
      if (nl && ++lines_in_shard == shard_size) {
        finish(out, shards.back());
        out.close();
      }
    }
  }
  if (out.is_open()) {
    finish(out, shards.back());
    out.close();
  }
  return shards;
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  Sha256 h;
  h.update(bytes.data(), bytes.size());
  return h.hex();
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in = open_in(path);
  Sha256 h;
  std::vector<char> buffer(1 << 16);
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    h.update(buffer.data(), static_cast<std::size_t>(in.gcount()));
  }
  return h.hex();
}

void to_json(nlohmann::json& j, const FileDigest& d) {
  j = nlohmann::json{{"path", d.path}, {"sha256", d.sha256}, {"records", d.records}};
}

void from_json(const nlohmann::json& j, FileDigest& d) {
  j.at("path").get_to(d.path);
  j.at("sha256").get_to(d.sha256);
  d.records = j.value("records", std::uint64_t{0});
}

void to_json(nlohmann::json& j, const RunManifest& m) {
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& [name, count] : m.stages) stages.push_back({{"stage", name}, {"count", count}});
  j = nlohmann::json{{"tool_version", m.tool_version},
                     {"command", m.command},
                     {"arguments", m.arguments},
                     {"inputs", m.inputs},
                     {"outputs", m.outputs},
                     {"stages", stages},
                     {"wall_seconds", m.wall_seconds},
                     {"jobs", m.jobs},
                     {"extra", m.extra}};
  j["sieve"] = m.sieve ? nlohmann::json(*m.sieve) : nlohmann::json(nullptr);
  j["predicate"] = m.predicate ? nlohmann::json(*m.predicate) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, RunManifest& m) {
  m.tool_version = j.value("tool_version", "");
  m.command = j.value("command", "");
  m.arguments = j.value("arguments", std::vector<std::string>{});
  if (j.contains("sieve") && !j["sieve"].is_null()) m.sieve = j["sieve"].get<SieveSpec>();
  if (j.contains("predicate") && !j["predicate"].is_null()) m.predicate = j["predicate"].get<std::string>();
  j.at("inputs").get_to(m.inputs);
  j.at("outputs").get_to(m.outputs);
  m.stages.clear();
  for (const auto& s : j.at("stages")) m.stages.emplace_back(s.at("stage").get<std::string>(), s.at("count").get<std::uint64_t>());
  m.wall_seconds = j.value("wall_seconds", 0.0);
  m.jobs = j.value("jobs", 1);
  m.extra = j.value("extra", nlohmann::json::object());
}

void write_json(const fs::path& path, const nlohmann::json& value) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out = open_out(tmp);
    out << value.dump(2) << '\n';
    finish(out, tmp);
  }
  fs::rename(tmp, path);
}

nlohmann::json read_json(const fs::path& path) {
  std::ifstream in = open_in(path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::vector<Graph> read_graphs(const fs::path& path) {
  std::ifstream in = open_in(path);
  G6Reader reader(in);
  std::vector<Graph> out;
  while (auto rec = reader.next()) {
    if (!rec->ok()) throw IoError(path.string() + " line " + std::to_string(rec->line_number) + ": " + rec->error->what());
    out.push_back(*rec->graph);
  }
  return out;
}

FileDigest write_graphs(const fs::path& path, std::span<const Graph> graphs) {
  {
    std::ofstream out = open_out(path);
    for (const Graph& g : graphs) out << encode_g6(g) << '\n';
    finish(out, path);
  }
  return FileDigest{path.string(), sha256_file(path), graphs.size()};
}

std::vector<std::pair<std::string, std::uint64_t>> stage_list(const FilterCounts& c, Predicate predicate) {
  return {{"read", c.read},
          {"decoded", c.decoded},
          {"sieve", c.sieve},
          {"k6-minor-free", c.k6_minor_free},
          {to_string(predicate), c.passed}};
}

RunManifest run_filter_job(const FilterJob& job) {
  const auto start = std::chrono::steady_clock::now();
  if (job.source && job.options.sieve) check_coverage(*job.source, *job.options.sieve);
  std::ifstream in = open_in(job.input);
  std::ofstream out = open_out(job.output);
  const fs::path timeout_path = job.output.string() + ".timeout.g6";
  std::vector<std::string> timed_out;
  FilterSinks sinks;
  sinks.passed = [&](const G6Record& rec) { out << rec.text << '\n'; };
  sinks.timed_out = [&](const G6Record& rec) { timed_out.push_back(rec.text); };
  const FilterCounts counts = run_filter(in, job.options, sinks);
  finish(out, job.output);
  out.close();
  if (job.source && job.source->count && *job.source->count != counts.read) {
    throw IncompleteSource("source declares " + std::to_string(*job.source->count) + " graphs but holds " +
                           std::to_string(counts.read));
  }

  RunManifest m;
  m.command = "filter";
  m.sieve = job.options.sieve;
  m.predicate = to_string(job.options.predicate);
  m.jobs = job.options.jobs;
  m.inputs.push_back(digest_of(job.input));
  m.outputs.push_back(FileDigest{job.output.string(), sha256_file(job.output), counts.passed});
  if (!timed_out.empty()) {
    std::ofstream t = open_out(timeout_path);
    for (const auto& line : timed_out) t << line << '\n';
    finish(t, timeout_path);
    t.close();
    m.outputs.push_back(FileDigest{timeout_path.string(), sha256_file(timeout_path), timed_out.size()});
  } else {
    fs::remove(timeout_path);
  }
  m.stages = stage_list(counts, job.options.predicate);
  m.extra["counts"] = counts;
  if (job.options.timeout_seconds) m.extra["timeout_per_graph"] = *job.options.timeout_seconds;
  m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return m;
}

RunManifest run_shard_job(const fs::path& input, const fs::path& prefix, std::size_t shard_size) {
  const auto start = std::chrono::steady_clock::now();
  RunManifest m;
  m.command = "shard";
  m.inputs.push_back(digest_of(input));
  for (const fs::path& p : split_lines(input, prefix, shard_size)) m.outputs.push_back(digest_of(p));
  m.stages = {{"read", m.inputs[0].records}};
  m.extra["shard_size"] = shard_size;
  m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return m;
}

SourceManifest load_source_manifest(const fs::path& manifest_path) {
  if (!fs::exists(manifest_path)) throw IncompleteSource("no source manifest at " + manifest_path.string());
  try {
    return read_json(manifest_path).get<SourceManifest>();
  } catch (const nlohmann::json::exception& e) {
    throw IncompleteSource(manifest_path.string() + ": " + e.what());
  }
}

CensusRun run_census_job(const CensusJob& job) {
  const auto start = std::chrono::steady_clock::now();
  const SieveSpec sieve = default_sieve(job.n, job.phase);
  check_coverage(job.source_manifest, sieve);
  FilterOptions options;
  options.sieve = sieve;
  options.predicate = Predicate::Maxnil;
  options.jobs = job.jobs;
  options.timeout_seconds = job.timeout_seconds;

  CensusRun run;
  CensusInputs inputs;
  const std::string source_digest = sha256_file(job.source);

  auto filter_into = [&](const fs::path& in_path, std::vector<Graph>& survivors) {
    std::ifstream in = open_in(in_path);
    FilterSinks sinks;
    sinks.passed = [&](const G6Record& rec) { survivors.push_back(*rec.graph); };
    return run_filter(in, options, sinks);
  };

  if (!job.work_dir) {
    run.counts = filter_into(job.source, inputs.searched);
    run.shards = 1;
  } else {
    const fs::path dir = *job.work_dir;
    fs::create_directories(dir);
    const fs::path plan_path = dir / "shards.json";
    std::vector<FileDigest> shards;
    bool reuse_plan = false;
    if (fs::exists(plan_path)) {
      const nlohmann::json plan = read_json(plan_path);
      reuse_plan = plan.value("source_sha256", "") == source_digest &&
                   plan.value("shard_size", std::size_t{0}) == job.shard_size;
      if (reuse_plan) {
        plan.at("shards").get_to(shards);
        for (const FileDigest& s : shards) {
          if (!fs::exists(s.path) || sha256_file(s.path) != s.sha256) reuse_plan = false;
        }
      }
    }
    if (!reuse_plan) {
      shards.clear();
      for (const fs::path& p : split_lines(job.source, dir / "source", job.shard_size)) {
        shards.push_back(digest_of(p));
      }
      write_json(plan_path, {{"source_sha256", source_digest}, {"shard_size", job.shard_size}, {"shards", shards}});
    }
    run.shards = shards.size();
    for (std::size_t i = 0; i < shards.size(); ++i) {
      const fs::path out_path = shard_name(dir / "maxnil", i, ".g6");
      const fs::path done_path = shard_name(dir / "maxnil", i, ".done.json");
      if (fs::exists(done_path) && fs::exists(out_path)) {
        const nlohmann::json done = read_json(done_path);
        if (done.value("shard_sha256", "") == shards[i].sha256 &&
            done.value("output_sha256", "") == sha256_file(out_path) &&
            done.value("sieve", nlohmann::json()) == nlohmann::json(sieve)) {
          const std::vector<Graph> kept = read_graphs(out_path);
          inputs.searched.insert(inputs.searched.end(), kept.begin(), kept.end());
          run.counts += done.at("counts").get<FilterCounts>();
          ++run.shards_reused;
          continue;
        }
      }
      std::vector<Graph> kept;
      const FilterCounts counts = filter_into(shards[i].path, kept);
      const FileDigest written = write_graphs(out_path, kept);
      write_json(done_path, {{"shard_sha256", shards[i].sha256},
                             {"output_sha256", written.sha256},
                             {"sieve", sieve},
                             {"counts", counts}});
      inputs.searched.insert(inputs.searched.end(), kept.begin(), kept.end());
      run.counts += counts;
    }
  }

  if (run.counts.malformed != 0) {
    throw IncompleteSource(std::to_string(run.counts.malformed) + " malformed records in the source");
  }
  if (run.counts.timed_out != 0) {
    throw IncompleteSource(std::to_string(run.counts.timed_out) + " graphs hit the per-graph time limit");
  }
  if (job.source_manifest.count && *job.source_manifest.count != run.counts.read) {
    throw IncompleteSource("source declares " + std::to_string(*job.source_manifest.count) +
                           " graphs but holds " + std::to_string(run.counts.read));
  }
  inputs.sieve = sieve;
  if (job.triangulations) inputs.triangulations = read_graphs(*job.triangulations);
  if (job.previous_maxnil) inputs.previous_maxnil = read_graphs(*job.previous_maxnil);
  run.result = assemble_census(job.n, inputs);
  run.result.row.input_digest = source_digest;
  run.result.row.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

}  // namespace linkless
