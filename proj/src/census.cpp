#include "linkless/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "linkless/deadline.hpp"
#include "linkless/errors.hpp"
#include "linkless/isomorphism.hpp"
#include "linkless/linking.hpp"
#include "linkless/minors.hpp"
#include "linkless/planarity.hpp"

namespace linkless {

namespace {

enum class Outcome : std::uint8_t { Malformed, Sieved, HasK6, Rejected, Passed, TimedOut };

bool uses_k6_stage(const FilterOptions& o) {
  return o.predicate == Predicate::K6MinorFree || o.predicate == Predicate::Maxnil ||
         (o.sieve && o.sieve->require_k6_minor_free);
}

Outcome evaluate(const G6Record& rec, const FilterOptions& o) {
  if (!rec.ok()) return Outcome::Malformed;
  const Graph& g = *rec.graph;
  if (o.sieve && !o.sieve->admits(g)) return Outcome::Sieved;
  std::optional<Deadline> deadline;
  if (o.timeout_seconds) deadline = Deadline::after(std::chrono::duration<double>(*o.timeout_seconds));
  const Deadline* d = deadline ? &*deadline : nullptr;
  try {
    if (uses_k6_stage(o) && has_k6_minor_in_some_component(g, d)) return Outcome::HasK6;
    bool pass = true;
    switch (o.predicate) {
      case Predicate::K6MinorFree: break;
      case Predicate::Nil: pass = is_nil_linking(g, EquationSet::CycleSpaceBasis, d); break;
      case Predicate::Maxnil: pass = is_maxnil(g, d); break;
      case Predicate::NonApex: pass = !apex_report(g, d).is_apex; break;
    }
    return pass ? Outcome::Passed : Outcome::Rejected;
  } catch (const DeadlineExceeded&) {
    return Outcome::TimedOut;
  }
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

void require_order(const Graph& g, int n, const char* what) {
  if (g.order() != n) {
    throw InvalidArgument(std::string(what) + " has order " + std::to_string(g.order()) + ", expected " +
                          std::to_string(n));
  }
}

}  // namespace

bool SieveSpec::admits(const Graph& g) const {
  if (g.order() != n) return false;
  const int m = g.size();
  if (m < min_edges || m > max_edges) return false;
  const DegreeProfile p = degree_profile(g);
  if (n > 0 && (p.min_degree < min_degree || p.max_degree > max_degree)) return false;
  if (min_connectivity > 0) {
    if (min_connectivity >= n) return false;
    if (!vertex_connectivity_at_least(g, min_connectivity)) return false;
  }
  return true;
}

bool SieveSpec::covers(const SieveSpec& inner) const {
  return n == inner.n && min_edges <= inner.min_edges && max_edges >= inner.max_edges &&
         min_degree <= inner.min_degree && max_degree >= inner.max_degree &&
         min_connectivity <= inner.min_connectivity;
}

SieveSpec default_sieve(int n, SearchPhase phase) {
  if (n < 3 || n > 13) throw UnsupportedOrder("no search bounds for order " + std::to_string(n));
  if (phase == SearchPhase::NonApex && n != 11) {
    throw UnsupportedOrder("the non-apex phase is defined for order 11 only");
  }
  SieveSpec s;
  s.n = n;
  s.min_connectivity = 2;
  s.max_degree = n - 1;
  if (n <= 6) {
    s.min_edges = n;
    s.max_edges = n == 6 ? 14 : n * (n - 1) / 2;
    s.min_degree = 2;
  } else if (n <= 10) {
    s.min_edges = 2 * n;
    s.max_edges = 4 * n - 10;
    s.min_degree = 3;
  } else if (n == 11) {
    s.min_edges = 22;
    s.max_edges = 34;
    s.min_degree = phase == SearchPhase::NonApex ? 4 : 3;
    s.max_degree = phase == SearchPhase::NonApex ? 9 : 10;
  } else {
    s.min_edges = 2 * n;
    s.max_edges = 4 * n - 10;
    s.min_degree = 2;
  }
  return s;
}

void to_json(nlohmann::json& j, const SieveSpec& s) {
  j = nlohmann::json{{"n", s.n},
                     {"min_edges", s.min_edges},
                     {"max_edges", s.max_edges},
                     {"min_degree", s.min_degree},
                     {"max_degree", s.max_degree},
                     {"min_connectivity", s.min_connectivity},
                     {"require_k6_minor_free", s.require_k6_minor_free}};
}

void from_json(const nlohmann::json& j, SieveSpec& s) {
  j.at("n").get_to(s.n);
  j.at("min_edges").get_to(s.min_edges);
  j.at("max_edges").get_to(s.max_edges);
  j.at("min_degree").get_to(s.min_degree);
  j.at("max_degree").get_to(s.max_degree);
  j.at("min_connectivity").get_to(s.min_connectivity);
  s.require_k6_minor_free = j.value("require_k6_minor_free", true);
}

void to_json(nlohmann::json& j, const SourceManifest& m) {
  nlohmann::json b = m.bounds;
  b.erase("require_k6_minor_free");
  j = nlohmann::json{{"bounds", b}, {"generator", m.generator}};
  j["count"] = m.count ? nlohmann::json(*m.count) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, SourceManifest& m) {
  j.at("bounds").get_to(m.bounds);
  m.generator = j.value("generator", "");
  if (j.contains("count") && !j.at("count").is_null()) {
    m.count = j.at("count").get<std::uint64_t>();
  } else {
    m.count.reset();
  }
}

void check_coverage(const SourceManifest& manifest, const SieveSpec& sieve) {
  if (!manifest.bounds.covers(sieve)) {
    throw IncompleteSource("source bounds " + nlohmann::json(manifest.bounds).dump() +
                           " do not cover the sieve " + nlohmann::json(sieve).dump());
  }
}

const char* to_string(Predicate p) {
  switch (p) {
    case Predicate::K6MinorFree: return "k6-minor-free";
    case Predicate::Nil: return "nil";
    case Predicate::Maxnil: return "maxnil";
    case Predicate::NonApex: return "non-apex";
  }
  return "?";
}

std::optional<Predicate> parse_predicate(std::string_view text) {
  for (Predicate p : {Predicate::K6MinorFree, Predicate::Nil, Predicate::Maxnil, Predicate::NonApex}) {
    if (text == to_string(p)) return p;
  }
  return std::nullopt;
}

FilterCounts& FilterCounts::operator+=(const FilterCounts& o) {
  read += o.read;
  malformed += o.malformed;
  decoded += o.decoded;
  sieve += o.sieve;
  k6_minor_free += o.k6_minor_free;
  passed += o.passed;
  timed_out += o.timed_out;
  return *this;
}

void to_json(nlohmann::json& j, const FilterCounts& c) {
  j = nlohmann::json{{"read", c.read},         {"malformed", c.malformed},
                     {"decoded", c.decoded},   {"sieve", c.sieve},
                     {"k6_minor_free", c.k6_minor_free}, {"passed", c.passed},
                     {"timed_out", c.timed_out}};
}

void from_json(const nlohmann::json& j, FilterCounts& c) {
  j.at("read").get_to(c.read);
  j.at("malformed").get_to(c.malformed);
  j.at("decoded").get_to(c.decoded);
  j.at("sieve").get_to(c.sieve);
  j.at("k6_minor_free").get_to(c.k6_minor_free);
  j.at("passed").get_to(c.passed);
  j.at("timed_out").get_to(c.timed_out);
}

FilterCounts run_filter(std::istream& in, const FilterOptions& options, const FilterSinks& sinks) {
  FilterCounts counts;
  G6Reader reader(in);
  std::vector<G6Record> batch;
  std::vector<Outcome> outcome;
  const std::size_t batch_size = std::max<std::size_t>(options.batch, 1);
  const bool k6_stage = uses_k6_stage(options);
  bool done = false;
  while (!done) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto rec = reader.next();
      if (!rec) {
        done = true;
        break;
      }
      batch.push_back(std::move(*rec));
    }
    outcome.assign(batch.size(), Outcome::Malformed);
    parallel_for(batch.size(), options.jobs, [&](std::size_t i) { outcome[i] = evaluate(batch[i], options); });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++counts.read;
      const Outcome r = outcome[i];
      if (r == Outcome::Malformed) {
        ++counts.malformed;
        if (sinks.malformed) sinks.malformed(batch[i]);
        continue;
      }
      ++counts.decoded;
      if (r == Outcome::Sieved) continue;
      ++counts.sieve;
      if (r == Outcome::TimedOut) {
        ++counts.timed_out;
        if (sinks.timed_out) sinks.timed_out(batch[i]);
        continue;
      }
      if (r == Outcome::HasK6) continue;
      ++counts.k6_minor_free;
      if (r == Outcome::Rejected) continue;
      ++counts.passed;
      if (sinks.passed) sinks.passed(batch[i]);
    }
  }
  if (!k6_stage) counts.k6_minor_free = counts.sieve - counts.timed_out;
  return counts;
}

std::vector<Graph> apex_maxnil_from_triangulations(std::span<const Graph> triangulations) {
  std::vector<Graph> out;
  IsoClassSet seen;
  for (std::size_t i = 0; i < triangulations.size(); ++i) {
    const Graph& t = triangulations[i];
    if (t.order() < 3 || !is_maximal_planar(t)) {
      throw NotMaximalPlanar("triangulation #" + std::to_string(i + 1) + " is not maximal planar");
    }
    Graph c = cone(t);
    if (!seen.insert(c).second) {
      throw InvalidArgument("triangulation #" + std::to_string(i + 1) + " repeats an earlier one");
    }
    out.push_back(std::move(c));
  }
  return out;
}

Degree3Extensions degree3_extensions(std::span<const Graph> graphs) {
  Degree3Extensions result;
  IsoClassSet all;
  for (const Graph& g : graphs) {
    IsoClassSet local;
    for (const auto& t : triangles(g)) {
      std::vector<Edge> edges = g.edges();
      for (int c : t) edges.push_back(Edge{c, g.order()});
      Graph h = Graph::from_edges(g.order() + 1, edges);
      ++result.raw;
      if (local.insert(h).second) ++result.distinct_per_source;
      if (all.insert(h).second) result.graphs.push_back(std::move(h));
    }
  }
  return result;
}

void to_json(nlohmann::json& j, const CensusRow& r) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [m, c] : r.edge_histogram) hist[std::to_string(m)] = c;
  j = nlohmann::json{{"n", r.n},
                     {"total", r.total},
                     {"apex", r.apex},
                     {"edge_histogram", hist},
                     {"runtime_seconds", r.runtime_seconds},
                     {"input_digest", r.input_digest}};
}

void from_json(const nlohmann::json& j, CensusRow& r) {
  j.at("n").get_to(r.n);
  j.at("total").get_to(r.total);
  j.at("apex").get_to(r.apex);
  r.edge_histogram.clear();
  for (const auto& [k, v] : j.at("edge_histogram").items()) r.edge_histogram[std::stoi(k)] = v.get<std::size_t>();
  r.runtime_seconds = j.value("runtime_seconds", 0.0);
  r.input_digest = j.value("input_digest", "");
}

bool census_order(const Graph& a, const Graph& b) {
  const int ma = a.size();
  const int mb = b.size();
  if (ma != mb) return ma < mb;
  return encode_g6(a) < encode_g6(b);
}

CensusResult assemble_census(int n, const CensusInputs& inputs) {
  CensusResult result;
  IsoClassSet merged;
  for (const Graph& g : inputs.searched) {
    require_order(g, n, "search survivor");
    merged.insert(g);
  }
  result.from_search = merged.size();

  auto add_constructed = [&](const Graph& g, const char* stream) {
    if (inputs.sieve && inputs.sieve->admits(g) && !merged.find(g)) {
      throw IncompleteSource(std::string("the search missed the ") + stream + " graph " + encode_g6(g));
    }
    return merged.insert(g).second;
  };

  for (const Graph& t : inputs.triangulations) require_order(t, n - 1, "triangulation");
  for (const Graph& c : apex_maxnil_from_triangulations(inputs.triangulations)) {
    if (!is_maxnil(c)) throw PropositionViolation("cone " + encode_g6(c) + " is not maxnIL");
    if (add_constructed(c, "apex")) ++result.from_apex;
  }

  for (const Graph& g : inputs.previous_maxnil) require_order(g, n - 1, "smaller maxnIL graph");
  result.extensions = degree3_extensions(inputs.previous_maxnil);
  for (const Graph& h : result.extensions.graphs) {
    if (!is_maxnil(h)) continue;
    ++result.extensions_maxnil;
    if (add_constructed(h, "degree-3")) ++result.from_degree3;
  }

  result.survivors = merged.representatives();
  std::sort(result.survivors.begin(), result.survivors.end(), census_order);
  result.row.n = n;
  result.row.total = result.survivors.size();
  for (const Graph& g : result.survivors) {
    if (classify_maxnil_apex(g, true)) ++result.row.apex;
    ++result.row.edge_histogram[g.size()];
  }
  return result;
}

CensusResult census(int n, std::istream& source, const SourceManifest& manifest, CensusInputs extra,
                    SearchPhase phase, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  const SieveSpec sieve = default_sieve(n, phase);
  check_coverage(manifest, sieve);
  FilterOptions options;
  options.sieve = sieve;
  options.predicate = Predicate::Maxnil;
  options.jobs = jobs;
  extra.searched.clear();
  FilterSinks sinks;
  sinks.passed = [&](const G6Record& rec) { extra.searched.push_back(*rec.graph); };
  const FilterCounts counts = run_filter(source, options, sinks);
  if (counts.malformed != 0) {
    throw IncompleteSource(std::to_string(counts.malformed) + " malformed records in the source");
  }
  if (manifest.count && *manifest.count != counts.read) {
    throw IncompleteSource("source declares " + std::to_string(*manifest.count) + " graphs but holds " +
                           std::to_string(counts.read));
  }
  extra.sieve = sieve;
  CensusResult result = assemble_census(n, extra);
  result.row.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<ComplementVerdict> complement_verdicts(std::span<const Graph> graphs, int jobs) {
  std::vector<ComplementVerdict> out(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    const Graph c = complement(graphs[i]);
    out[i].il_by_linking = !is_nil_linking(c);
    out[i].il_by_minor = is_il_minor(c);
    out[i].k6_minor = has_k6_minor_in_some_component(c);
  });
  return out;
}

}  // namespace linkless
