// linkless: command line front end.
//
// Exit codes: 0 success, 1 usage, 2 I/O, 3 incomplete source, 4 internal
// invariant violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "linkless/census.hpp"
#include "linkless/errors.hpp"
#include "linkless/g6.hpp"
#include "linkless/linking.hpp"
#include "linkless/minors.hpp"
#include "linkless/pipeline.hpp"
#include "linkless/planarity.hpp"

#ifndef LINKLESS_VERSION
#define LINKLESS_VERSION "0.0.0"
#endif

namespace {

using namespace linkless;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kIncomplete = 3, kInvariant = 4 };

class InvariantFailure : public Error {
 public:
  explicit InvariantFailure(const std::string& what) : Error("InvariantFailure: " + what) {}
};

struct SieveFlags {
  std::optional<int> n;
  std::optional<int> min_edges, max_edges, min_degree, max_degree, min_connectivity;
  std::string phase = "full";

  void add(CLI::App* app) {
    app->add_option("--sieve-n", n, "Order; starts from the default bounds for that order");
    app->add_option("--min-edges", min_edges);
    app->add_option("--max-edges", max_edges);
    app->add_option("--min-degree", min_degree);
    app->add_option("--max-degree", max_degree);
    app->add_option("--min-connectivity", min_connectivity);
    app->add_option("--phase", phase, "full or non-apex")->check(CLI::IsMember({"full", "non-apex"}));
  }

  SearchPhase search_phase() const { return phase == "non-apex" ? SearchPhase::NonApex : SearchPhase::Full; }

  std::optional<SieveSpec> build() const {
    const bool any = min_edges || max_edges || min_degree || max_degree || min_connectivity;
    if (!n) {
      if (any) throw CLI::ValidationError("--sieve-n", "bounds need --sieve-n");
      return std::nullopt;
    }
    SieveSpec s = default_sieve(*n, search_phase());
    if (min_edges) s.min_edges = *min_edges;
    if (max_edges) s.max_edges = *max_edges;
    if (min_degree) s.min_degree = *min_degree;
    if (max_degree) s.max_degree = *max_degree;
    if (min_connectivity) s.min_connectivity = *min_connectivity;
    if (s.min_edges > s.max_edges || s.min_degree > s.max_degree) {
      throw CLI::ValidationError("--sieve-n", "empty bounds");
    }
    return s;
  }
};

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

fs::path manifest_path_for(const fs::path& output) { return output.string() + ".manifest.json"; }

void stamp(RunManifest& m, int argc, char** argv) {
  m.tool_version = LINKLESS_VERSION;
  m.arguments.assign(argv, argv + argc);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// ---- query ---------------------------------------------------------------

struct QueryFlags {
  std::string g6;
  bool planar = false, maximal_planar = false, apex = false, two_apex = false, k6 = false, petersen = false,
       il = false, maxnil = false, triangular = false, connectivity = false, degrees = false, complement = false,
       all = false;
};

int run_query(const QueryFlags& f, bool as_json) {
  const Graph g = decode_g6(f.g6);
  const bool all = f.all || !(f.planar || f.maximal_planar || f.apex || f.two_apex || f.k6 || f.petersen || f.il ||
                              f.maxnil || f.triangular || f.connectivity || f.degrees || f.complement);
  json r;
  r["graph"] = f.g6;
  r["order"] = g.order();
  r["size"] = g.size();
  if (all || f.planar) r["planar"] = is_planar(g);
  if ((all || f.maximal_planar) && g.order() >= 3) r["maximal_planar"] = is_maximal_planar(g);
  if (all || f.apex) {
    const ApexReport a = apex_report(g);
    r["apex"] = a.is_apex;
    r["apex_witness"] = a.witness ? json(*a.witness) : json(nullptr);
  }
  if (all || f.two_apex) {
    const auto w = two_apex_witness(g);
    r["two_apex"] = w.has_value();
    r["two_apex_witness"] = w ? json::array({w->first, w->second}) : json(nullptr);
  }
  if (all || f.k6) r["k6_minor"] = has_k6_minor_in_some_component(g);
  if (all || f.petersen) {
    const auto idx = petersen_minor(g);
    r["petersen_minor"] = idx ? json(petersen_family().names[*idx]) : json(nullptr);
  }
  bool il_linking = false;
  if (all || f.il || f.maxnil) {
    il_linking = !is_nil_linking(g);
    const bool il_minor = is_il_minor(g);
    if (il_linking != il_minor) throw InvariantFailure("the two IL deciders disagree on " + f.g6);
    r["il"] = il_linking;
  }
  if (all || f.maxnil) r["maxnil"] = !il_linking && is_maxnil(g);
  if (all || f.triangular) {
    r["triangular"] = is_triangular(g);
    json nt = json::array();
    for (const Edge& e : non_triangular_edges(g)) nt.push_back({e.u, e.v});
    r["non_triangular_edges"] = nt;
  }
  if (all || f.connectivity) {
    const int n = g.order();
    int k = 0;
    while (k + 1 < n && vertex_connectivity_at_least(g, k + 1)) ++k;
    const bool complete = g.size() == n * (n - 1) / 2;
    r["connectivity"] = complete ? std::max(n - 1, 0) : k;
  }
  if (all || f.degrees) {
    const DegreeProfile p = degree_profile(g);
    r["degrees"] = {{"min", p.min_degree}, {"max", p.max_degree}, {"sequence", p.sequence}};
  }
  if (all || f.complement) {
    const Graph c = complement(g);
    const ComplementVerdict v = complement_verdicts(std::span<const Graph>(&g, 1))[0];
    if (v.il_by_linking != v.il_by_minor) throw InvariantFailure("the two IL deciders disagree on the complement");
    r["complement"] = {{"graph", encode_g6(c)}, {"il", v.il_by_linking}, {"k6_minor", v.k6_minor}};
  }
  if (as_json) {
    std::cout << r.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : r.items()) {
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  return kOk;
}

// ---- filter / shard ------------------------------------------------------

int run_filter_cmd(const std::string& input, const std::string& output, const SieveFlags& sf,
                   const std::string& predicate, int jobs, std::optional<double> timeout,
                   const std::optional<std::string>& source_manifest, bool as_json, int argc, char** argv) {
  FilterJob job;
  job.input = input;
  job.output = output;
  job.options.sieve = sf.build();
  job.options.predicate = *parse_predicate(predicate);
  job.options.jobs = jobs;
  job.options.timeout_seconds = timeout;
  if (source_manifest) job.source = load_source_manifest(*source_manifest);
  RunManifest m = run_filter_job(job);
  stamp(m, argc, argv);
  write_json(manifest_path_for(job.output), m);
  if (as_json) {
    std::cout << json(m).dump(2) << '\n';
  } else {
    for (const auto& [stage, count] : m.stages) std::cout << stage << ": " << count << '\n';
    if (m.outputs.size() > 1) std::cout << "timed out: " << m.outputs[1].records << '\n';
  }
  return kOk;
}

int run_shard_cmd(const std::string& input, const std::string& output, std::size_t shard_size, bool as_json,
                  int argc, char** argv) {
  RunManifest m = run_shard_job(input, output, shard_size);
  stamp(m, argc, argv);
  write_json(manifest_path_for(output), m);
  if (as_json) {
    std::cout << json(m).dump(2) << '\n';
  } else {
    for (const FileDigest& d : m.outputs) std::cout << d.path << ' ' << d.records << ' ' << d.sha256 << '\n';
  }
  return kOk;
}

// ---- census ---------------------------------------------------------------

struct CensusFlags {
  std::string input;
  std::optional<std::string> source_manifest;
  std::optional<std::string> triangulations;
  std::optional<std::string> previous;
  std::optional<std::string> output;
  std::optional<std::string> work_dir;
  std::size_t shard_size = 1000000;
};

int run_census_cmd(const CensusFlags& f, const SieveFlags& sf, int jobs, std::optional<double> timeout, bool as_json,
                   int argc, char** argv) {
  if (!sf.n) throw CLI::ValidationError("--sieve-n", "census needs the order");
  if (sf.min_edges || sf.max_edges || sf.min_degree || sf.max_degree || sf.min_connectivity) {
    throw CLI::ValidationError("--sieve-n", "census always uses the default bounds for the order");
  }
  CensusJob job;
  job.n = *sf.n;
  job.phase = sf.search_phase();
  job.source = f.input;
  job.source_manifest = load_source_manifest(f.source_manifest.value_or(f.input + ".manifest.json"));
  if (f.triangulations) job.triangulations = *f.triangulations;
  if (f.previous) job.previous_maxnil = *f.previous;
  job.jobs = jobs;
  job.timeout_seconds = timeout;
  if (f.work_dir) job.work_dir = *f.work_dir;
  job.shard_size = f.shard_size;
  const CensusRun run = run_census_job(job);
  const CensusResult& res = run.result;

  RunManifest m;
  m.command = "census";
  stamp(m, argc, argv);
  m.sieve = default_sieve(job.n, job.phase);
  m.predicate = to_string(Predicate::Maxnil);
  m.jobs = jobs;
  m.inputs.push_back(FileDigest{f.input, res.row.input_digest, run.counts.read});
  m.stages = stage_list(run.counts, Predicate::Maxnil);
  m.wall_seconds = res.row.runtime_seconds;
  m.extra["row"] = res.row;
  m.extra["from_search"] = res.from_search;
  m.extra["from_apex"] = res.from_apex;
  m.extra["from_degree3"] = res.from_degree3;
  m.extra["degree3_candidates"] = {{"raw", res.extensions.raw},
                                   {"distinct_per_source", res.extensions.distinct_per_source},
                                   {"distinct", res.extensions.graphs.size()},
                                   {"maxnil", res.extensions_maxnil}};
  m.extra["shards"] = run.shards;
  m.extra["shards_reused"] = run.shards_reused;
  if (f.output) {
    m.outputs.push_back(write_graphs(*f.output, res.survivors));
    write_json(*f.output + ".json", res.row);
    write_json(manifest_path_for(*f.output), m);
  }
  if (as_json) {
    std::cout << json(res.row).dump() << '\n';
  } else {
    std::cout << "n=" << res.row.n << " total=" << res.row.total << " apex=" << res.row.apex << '\n';
    for (const auto& [edges, count] : res.row.edge_histogram) std::cout << "  m=" << edges << ": " << count << '\n';
  }
  return kOk;
}

// ---- family / complement-check ----------------------------------------------

int run_family(bool as_json) {
  const PetersenFamily& fam = petersen_family();
  if (as_json) {
    json arr = json::array();
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      arr.push_back({{"name", fam.names[i]},
                     {"g6", encode_g6(fam.members[i])},
                     {"order", fam.members[i].order()},
                     {"size", fam.members[i].size()}});
    }
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const Graph& g : fam.members) std::cout << encode_g6(g) << '\n';
  }
  return kOk;
}

int run_complement_check(const std::string& input, int jobs, bool as_json) {
  const std::vector<Graph> graphs = read_graphs(input);
  const std::vector<ComplementVerdict> v = complement_verdicts(graphs, jobs);
  std::size_t il = 0, k6 = 0, disagree = 0;
  json rows = json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    il += v[i].il_by_linking;
    k6 += v[i].k6_minor;
    disagree += v[i].il_by_linking != v[i].il_by_minor;
    rows.push_back({{"graph", encode_g6(graphs[i])},
                    {"complement_il_linking", v[i].il_by_linking},
                    {"complement_il_minor", v[i].il_by_minor},
                    {"complement_k6_minor", v[i].k6_minor}});
  }
  if (as_json) {
    std::cout << json{{"graphs", graphs.size()}, {"complement_il", il}, {"complement_k6_minor", k6},
                      {"disagreements", disagree}, {"verdicts", rows}}
                     .dump(2)
              << '\n';
  } else {
    for (const auto& r : rows) {
      std::cout << r["graph"].get<std::string>() << " il=" << yes_no(r["complement_il_linking"].get<bool>())
                << " k6=" << yes_no(r["complement_k6_minor"].get<bool>()) << '\n';
    }
    std::cout << "graphs: " << graphs.size() << "  complement IL: " << il << "  complement K6 minor: " << k6 << '\n';
  }
  if (disagree != 0) throw InvariantFailure(std::to_string(disagree) + " decider disagreements");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linkless embeddability and maxnIL census tools"};
  app.set_version_flag("--version", LINKLESS_VERSION);
  app.require_subcommand(1);
  bool as_json = false;
  int jobs = default_jobs();
  std::optional<double> timeout;
  app.add_flag("--json", as_json, "Machine readable output");

  auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber); };
  auto add_timeout = [&](CLI::App* sub) {
    sub->add_option("--timeout-per-graph", timeout, "Seconds per graph")->check(CLI::PositiveNumber);
  };

  QueryFlags qf;
  auto* query = app.add_subcommand("query", "Report properties of one graph");
  query->add_option("graph", qf.g6, "graph6 string")->required();
  query->add_flag("--planar", qf.planar);
  query->add_flag("--maximal-planar", qf.maximal_planar);
  query->add_flag("--apex", qf.apex);
  query->add_flag("--two-apex", qf.two_apex);
  query->add_flag("--k6-minor", qf.k6);
  query->add_flag("--petersen-minor", qf.petersen);
  query->add_flag("--il", qf.il);
  query->add_flag("--maxnil", qf.maxnil);
  query->add_flag("--triangular", qf.triangular);
  query->add_flag("--connectivity", qf.connectivity);
  query->add_flag("--degrees", qf.degrees);
  query->add_flag("--complement", qf.complement);
  query->add_flag("--all", qf.all);
  query->add_flag("--json", as_json);

  std::string input, output, predicate = "maxnil";
  std::optional<std::string> source_manifest;
  SieveFlags sf;
  auto* filter = app.add_subcommand("filter", "Keep the graphs of a graph6 file that pass a predicate");
  filter->add_option("--input", input)->required();
  filter->add_option("--output", output)->required();
  filter->add_option("--predicate", predicate)->check(CLI::IsMember({"k6-minor-free", "nil", "maxnil", "non-apex"}));
  filter->add_option("--source-manifest", source_manifest, "Generator manifest to check against the sieve");
  sf.add(filter);
  add_jobs(filter);
  add_timeout(filter);
  filter->add_flag("--json", as_json);

  std::size_t shard_size = 1000000;
  auto* shard = app.add_subcommand("shard", "Split a graph6 file into numbered pieces");
  shard->add_option("--input", input)->required();
  shard->add_option("--output", output, "Prefix of the shard files")->required();
  shard->add_option("--shard-size", shard_size)->check(CLI::PositiveNumber);
  shard->add_flag("--json", as_json);

  CensusFlags cf;
  auto* census_cmd = app.add_subcommand("census", "Enumerate the maxnIL graphs of one order");
  census_cmd->add_option("--input", cf.input, "Generator output covering the search bounds")->required();
  census_cmd->add_option("--source-manifest", cf.source_manifest, "Defaults to <input>.manifest.json");
  census_cmd->add_option("--triangulations", cf.triangulations, "Maximal planar graphs of order n-1");
  census_cmd->add_option("--previous", cf.previous, "All maxnIL graphs of order n-1");
  census_cmd->add_option("--output", cf.output, "Survivor graph6 file");
  census_cmd->add_option("--work-dir", cf.work_dir, "Shard and resume directory");
  census_cmd->add_option("--shard-size", cf.shard_size)->check(CLI::PositiveNumber);
  sf.add(census_cmd);
  add_jobs(census_cmd);
  add_timeout(census_cmd);
  census_cmd->add_flag("--json", as_json);

  auto* family = app.add_subcommand("family", "Print the seven Petersen family graphs");
  family->add_flag("--json", as_json);

  auto* comp = app.add_subcommand("complement-check", "IL and K6 verdicts for the complement of each graph");
  comp->add_option("--input", input)->required();
  add_jobs(comp);
  comp->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*query) return run_query(qf, as_json);
    if (*filter) return run_filter_cmd(input, output, sf, predicate, jobs, timeout, source_manifest, as_json, argc, argv);
    if (*shard) return run_shard_cmd(input, output, shard_size, as_json, argc, argv);
    if (*census_cmd) return run_census_cmd(cf, sf, jobs, timeout, as_json, argc, argv);
    if (*family) return run_family(as_json);
    if (*comp) return run_complement_check(input, jobs, as_json);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const IncompleteSource& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIncomplete;
  } catch (const PropositionViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariant;
  } catch (const InvariantFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariant;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
