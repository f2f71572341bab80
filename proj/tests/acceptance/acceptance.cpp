// Acceptance suite. `--prepare` runs the census chain for orders 3..10 into
// the work directory; every other invocation prints one PASS/FAIL line per
// criterion and exits non-zero if any selected criterion failed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "linkless/census.hpp"
#include "linkless/errors.hpp"
#include "linkless/g6.hpp"
#include "linkless/isomorphism.hpp"
#include "linkless/linking.hpp"
#include "linkless/minors.hpp"
#include "linkless/pipeline.hpp"
#include "linkless/planarity.hpp"
#include "support.hpp"

using namespace linkless;
using testing::data_dir;
using testing::generated_dir;

namespace {

constexpr int kFirst = 3;
constexpr int kLast = 10;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

fs::path survivors_path(const fs::path& work, int n) { return work / ("maxnil_n" + std::to_string(n) + ".g6"); }
fs::path row_path(const fs::path& work, int n) { return work / ("row_n" + std::to_string(n) + ".json"); }
fs::path triangulation_path(int n) { return data_dir() / ("triangulations_n" + std::to_string(n) + ".g6"); }

std::vector<Graph> survivors(const fs::path& work, int n) { return read_graphs(survivors_path(work, n)); }
CensusRow row(const fs::path& work, int n) { return read_json(row_path(work, n)).get<CensusRow>(); }

int prepare(const fs::path& work) {
  fs::create_directories(work);
  for (int n = kFirst; n <= kLast; ++n) {
    CensusJob job;
    job.n = n;
    job.source = generated_dir() / ("search_n" + std::to_string(n) + ".g6");
    job.source_manifest = load_source_manifest(job.source.string() + ".manifest.json");
    if (fs::exists(triangulation_path(n - 1))) job.triangulations = triangulation_path(n - 1);
    if (n > kFirst) job.previous_maxnil = survivors_path(work, n - 1);
    job.jobs = jobs();
    job.work_dir = work / ("shards_n" + std::to_string(n));
    const CensusRun run = run_census_job(job);
    write_graphs(survivors_path(work, n), run.result.survivors);
    write_json(row_path(work, n), run.result.row);
    std::cout << "order " << n << ": total " << run.result.row.total << ", apex " << run.result.row.apex << ", "
              << run.counts.read << " graphs read, " << run.shards_reused << "/" << run.shards << " shards reused, "
              << run.result.row.runtime_seconds << " s\n";
  }
  return 0;
}

int girth(const Graph& g) {
  int best = 1 << 20;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int v = queue[h];
      for_each_vertex(g.neighbors(v), [&](int w) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(v)] != w) {
          best = std::min(best, dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1);
        }
      });
    }
  }
  return best;
}

bool in_family(const Graph& g, const std::vector<Graph>& family) {
  return std::any_of(family.begin(), family.end(), [&](const Graph& f) { return is_isomorphic(f, g); });
}

void criterion1(const fs::path& work, Verdict& v) {
  const std::map<int, std::pair<std::size_t, std::size_t>> table{{6, {1, 1}}, {7, {2, 2}}, {8, {6, 5}}, {9, {20, 14}}};
  for (const auto& [n, expected] : table) {
    const CensusRow r = row(work, n);
    v.detail << " n=" << n << ":(" << r.total << "," << r.apex << ")";
    v.require(r.total == expected.first && r.apex == expected.second, "order " + std::to_string(n));
  }
  const std::vector<Graph> six = survivors(work, 6);
  v.require(six.size() == 1 && is_isomorphic(six.front(), Graph::complete(6).without_edge(0, 1)),
            "order 6 survivor is K6 minus an edge");
  for (const Graph& g : survivors(work, 8))
    if (!classify_maxnil_apex(g)) v.detail << " non-apex order 8: " << encode_g6(g) << " (" << g.size() << " edges)";
}

void criterion2(const fs::path& work, Verdict& v) {
  const CensusRow r = row(work, 10);
  v.detail << " n=10:(" << r.total << "," << r.apex << "), census " << r.runtime_seconds << " s";
  v.require(r.total == 107 && r.apex == 50, "order 10 row");
}

void criterion3(const fs::path& work, Verdict& v) {
  const std::vector<Graph> t10 = read_graphs(triangulation_path(10));
  const std::vector<Graph> cones = apex_maxnil_from_triangulations(t10);
  std::size_t cones_maxnil = 0;
  for (const Graph& g : cones) cones_maxnil += is_maxnil(g);
  v.detail << " (a) " << t10.size() << " triangulations -> " << cones.size() << " cones, " << cones_maxnil << " maxnIL;";
  v.require(cones.size() == 233 && cones_maxnil == 233, "233 apex cones");

  const std::vector<Graph> ten = survivors(work, 10);
  const Degree3Extensions ext = degree3_extensions(ten);
  std::vector<Graph> kept;
  for (const Graph& g : ext.graphs)
    if (is_maxnil(g)) kept.push_back(g);
  v.detail << " (b) from " << ten.size() << " graphs: " << ext.raw << " raw, " << ext.distinct_per_source
           << " distinct per source, " << ext.graphs.size() << " distinct overall, " << kept.size() << " maxnIL;";
  v.require(ext.raw == 1963 || ext.distinct_per_source == 1963 || ext.graphs.size() == 1963, "1963 candidates");
  v.require(kept.size() == 159, "159 maxnIL extensions");

  std::vector<Graph> constructed = cones;
  constructed.insert(constructed.end(), kept.begin(), kept.end());
  IsoClassSet distinct;
  for (const Graph& g : constructed) distinct.insert(g);
  const auto verdicts = complement_verdicts(constructed, jobs());
  std::size_t il = 0;
  std::size_t agree = 0;
  std::size_t k6_free = 0;
  for (const auto& c : verdicts) {
    il += c.il_by_linking && c.il_by_minor;
    agree += c.il_by_linking == c.il_by_minor;
    k6_free += !c.k6_minor;
  }
  v.detail << " (c) " << constructed.size() << " constructed (" << distinct.size() << " distinct), " << il
           << " complements IL, " << k6_free << " with K6-minor-free complement";
  v.require(constructed.size() == 392 && distinct.size() == 392, "392 distinct constructed graphs");
  v.require(il == constructed.size() && agree == constructed.size(), "every complement IL");
}

void criterion4(Verdict& v) {
  std::size_t corpus = 0;
  std::size_t disagreements = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : read_graphs(data_dir() / ("all_graphs_n" + std::to_string(n) + ".g6"))) {
      disagreements += is_nil_linking(g) == is_il_minor(g);
      ++corpus;
    }
  }
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> order(8, 10);
  std::uniform_real_distribution<double> density(0.25, 0.85);
  std::size_t random_il = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Graph g = testing::random_graph(rng, order(rng), density(rng));
    const bool il = is_il_minor(g);
    disagreements += is_nil_linking(g) == il;
    random_il += il;
  }
  v.detail << " " << corpus << " exhaustive + 10000 random (" << random_il << " IL), " << disagreements
           << " disagreements";
  v.require(corpus == 1252, "exhaustive corpus complete");
  v.require(disagreements == 0, "deciders agree");
}

void criterion5(Verdict& v) {
  const PetersenFamily fam = generate_petersen_family();
  std::multiset<int> orders;
  for (const Graph& g : fam.members) orders.insert(g.order());
  v.detail << " " << fam.members.size() << " members, orders {";
  for (auto it = orders.begin(); it != orders.end(); ++it) v.detail << (it == orders.begin() ? "" : ",") << *it;
  v.detail << "}";
  v.require(fam.members.size() == 7, "seven members");
  bool distinct = true;
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    for (std::size_t j = i + 1; j < fam.members.size(); ++j)
      distinct = distinct && !is_isomorphic(fam.members[i], fam.members[j]);
  v.require(distinct, "pairwise non-isomorphic");
  v.require(orders == std::multiset<int>{6, 7, 8, 8, 9, 9, 10}, "order multiset {6,7,8,8,9,9,10}");
  v.require(in_family(Graph::complete(6), fam.members), "contains K6");
  const bool petersen = std::any_of(fam.members.begin(), fam.members.end(), [](const Graph& g) {
    const DegreeProfile d = degree_profile(g);
    return g.order() == 10 && d.min_degree == 3 && d.max_degree == 3 && girth(g) == 5;
  });
  v.require(petersen, "3-regular girth-5 member of order 10");
  bool closed = true;
  std::size_t moves = 0;
  for (const Graph& g : fam.members) {
    for (const auto& t : triangles(g)) {
      closed = closed && in_family(triangle_y_move(g, t[0], t[1], t[2]), fam.members);
      ++moves;
    }
    for (int x = 0; x < g.order(); ++x) {
      if (g.degree(x) != 3) continue;
      const VertexSet nb = g.neighbors(x);
      bool independent = true;
      for_each_vertex(nb, [&](int w) { independent = independent && (g.neighbors(w) & nb) == 0; });
      if (!independent) continue;
      closed = closed && in_family(y_triangle_move(g, x), fam.members);
      ++moves;
    }
  }
  v.detail << ", " << moves << " moves checked";
  v.require(closed, "closure under both moves");
}

void criterion6(const fs::path& work, Verdict& v) {
  std::size_t checked = 0;
  std::size_t apex = 0;
  bool nine_non_apex_26 = false;
  for (int n = 6; n <= kLast; ++n) {
    for (const Graph& g : survivors(work, n)) {
      ++checked;
      bool is_apex = false;
      try {
        is_apex = classify_maxnil_apex(g, true);
      } catch (const PropositionViolation& e) {
        v.require(false, e.what());
        continue;
      }
      apex += is_apex;
      if (is_apex) v.require(g.size() == 4 * n - 10, "apex survivor " + encode_g6(g) + " has 4n-10 edges");
      if (n == 9 && !is_apex && g.size() == 26) nine_non_apex_26 = true;
      v.require(is_triangular(g), "survivor " + encode_g6(g) + " is triangular");
      if (n >= 7) v.require(vertex_connectivity_at_least(g, 3), "survivor " + encode_g6(g) + " is 3-connected");
      v.require(two_apex_witness(g).has_value(), "survivor " + encode_g6(g) + " is 2-apex");
    }
  }
  v.detail << " " << checked << " survivors of orders 6..10, " << apex << " apex";
  v.require(nine_non_apex_26, "non-apex order 9 survivor with 26 edges");
}

void criterion7(const fs::path& work, Verdict& v) {
  const Graph* g9 = nullptr;
  for (const Graph& f : petersen_family().members)
    if (f.order() == 9) g9 = &f;
  std::size_t apex = 0;
  std::vector<Graph> il;
  for (const Graph& g : survivors(work, 10)) {
    if (!classify_maxnil_apex(g)) continue;
    ++apex;
    const Graph c = complement(g);
    const bool by_linking = !is_nil_linking(c);
    v.require(by_linking == is_il_minor(c), "deciders agree on " + encode_g6(c));
    if (by_linking) il.push_back(c);
  }
  v.detail << " " << apex << " apex order-10 survivors, " << il.size() << " with IL complement";
  v.require(apex == 50, "50 apex survivors");
  v.require(il.size() == 1, "exactly one IL complement");
  if (il.size() == 1 && g9 != nullptr) {
    const Graph& c = il.front();
    int isolated = -1;
    int isolated_count = 0;
    for (int x = 0; x < c.order(); ++x)
      if (c.degree(x) == 0) {
        isolated = x;
        ++isolated_count;
      }
    v.detail << " (" << encode_g6(c) << ")";
    v.require(isolated_count == 1, "one isolated vertex");
    v.require(isolated >= 0 && is_isomorphic(c.without_vertex(isolated), *g9), "rest is the order 9 family member");
  }
}

void criterion8(Verdict& v) {
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<int> order(1, 32);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  std::size_t round_trips = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Graph g = testing::random_graph(rng, order(rng), density(rng));
    const std::string text = encode_g6(g);
    round_trips += decode_g6(text) == g && encode_g6(decode_g6(text)) == text;
  }
  std::vector<fs::path> files;
  for (int n = 1; n <= 7; ++n) files.push_back(data_dir() / ("all_graphs_n" + std::to_string(n) + ".g6"));
  for (int n = kFirst; n <= kLast; ++n) files.push_back(generated_dir() / ("search_n" + std::to_string(n) + ".g6"));
  std::size_t identical = 0;
  std::uint64_t records = 0;
  for (const fs::path& path : files) {
    std::ifstream in(path, std::ios::binary);
    G6Reader reader(in);
    std::string rebuilt;
    while (auto rec = reader.next()) {
      if (!rec->ok()) break;
      rebuilt += encode_g6(*rec->graph);
      rebuilt += '\n';
      ++records;
    }
    identical += sha256_hex(rebuilt) == sha256_file(path);
  }
  v.detail << " " << round_trips << "/10000 round trips, " << identical << "/" << files.size()
           << " generator files byte-identical (" << records << " records)";
  v.require(round_trips == 10000, "round trip");
  v.require(identical == files.size(), "byte-exact interop");
}

void criterion9(Verdict& v) {
  std::map<int, double> mean_ms;
  std::map<int, double> kill_rate;
  for (int m = 22; m <= 34; ++m) {
    const std::vector<Graph> sample = read_graphs(generated_dir() / ("sample_n11_m" + std::to_string(m) + ".g6"));
    double total = 0;
    std::size_t killed = 0;
    for (const Graph& g : sample) {
      double best = 1e300;
      bool minor = false;
      for (int rep = 0; rep < 3; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        minor = has_k6_minor_in_some_component(g);
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
      }
      total += best;
      killed += minor;
    }
    mean_ms[m] = sample.empty() ? 0 : total / static_cast<double>(sample.size());
    kill_rate[m] = sample.empty() ? 0 : static_cast<double>(killed) / static_cast<double>(sample.size());
  }
  v.detail << std::fixed << std::setprecision(3);
  for (int m = 22; m <= 34; ++m) v.detail << " m" << m << ":" << mean_ms[m] << "ms/" << kill_rate[m];
  bool rate_rises = true;
  for (int m = 23; m <= 34; ++m) rate_rises = rate_rises && kill_rate[m] >= kill_rate[m - 1];
  bool time_falls = true;
  for (int m = 32; m <= 34; ++m) time_falls = time_falls && mean_ms[m] < mean_ms[m - 1];
  v.require(rate_rises, "kill rate non-decreasing in m");
  v.require(time_falls, "time per graph decreasing over m=31..34");
  v.require(mean_ms[34] < mean_ms[27] / 2, "m=34 at most half the m=27 time");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string work = "census";
  bool do_prepare = false;
  std::vector<int> selected;
  app.add_option("--work", work, "Census output directory");
  app.add_flag("--prepare", do_prepare, "Run the census chain for orders 3..10");
  app.add_option("--criterion", selected, "Criteria to check (default: all)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  try {
    if (do_prepare) return prepare(work);
  } catch (const std::exception& e) {
    std::cerr << "prepare failed: " << e.what() << "\n";
    return 1;
  }

  if (selected.empty())
    for (int k = 1; k <= 9; ++k) selected.push_back(k);
  const std::map<int, std::function<void(Verdict&)>> criteria{
      {1, [&](Verdict& v) { criterion1(work, v); }}, {2, [&](Verdict& v) { criterion2(work, v); }},
      {3, [&](Verdict& v) { criterion3(work, v); }}, {4, criterion4},
      {5, criterion5},                              {6, [&](Verdict& v) { criterion6(work, v); }},
      {7, [&](Verdict& v) { criterion7(work, v); }}, {8, criterion8},
      {9, criterion9}};

  int failed = 0;
  for (int k : selected) {
    Verdict v;
    try {
      criteria.at(k)(v);
    } catch (const std::exception& e) {
      v.require(false, e.what());
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << k << ":" << v.detail.str() << std::endl;
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
