// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "brooks/cli.hpp"
#include "brooks/engine.hpp"
#include "brooks/generators.hpp"
#include "brooks/io.hpp"
#include "brooks/oracle.hpp"
#include "support/fixtures.hpp"

using namespace brooks;

namespace {

constexpr int kRandomSuiteSize = 10'000;
constexpr int kCorrespondenceSuiteSize = 10'000;
constexpr int kSignedSuiteSize = 1'000;
constexpr Vertex kAtlasMaxN = 7;
constexpr double kMaxRatio = 15.0;
constexpr double kMaxLargestMs = 10'000.0;
constexpr int kBenchAttempts = 3;

// Order-sensitive FNV-1a over everything the runs of a suite produced.
struct Digest {
  std::uint64_t h = 1469598103934665603ull;

  void add(std::int64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }

  void add(const BrooksOutcome& out) {
    add(out.coloring.size());
    for (ColorIndex i : out.coloring.indices()) add(i);
    for (const auto& ex : out.exceptions) {
      add(static_cast<int>(ex.issue));
      for (Vertex v : ex.vertices) add(v);
    }
  }
};

// Steps seen by the observer. A step passes when its vertex had at most k-1
// blocked indices and the structural reason for coloring it then held.
struct Contract {
  std::uint64_t steps = 0;
  std::uint64_t violations = 0;
};

struct Suite {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;  // samples rejected by the K_{k+1} filter
  std::string first_failure;
  Digest digest;
  Contract contract;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

// Runs the engine with an observer and checks the per-step contract, plus that
// every vertex of a colored run was stepped exactly once with its final index.
BrooksOutcome observed_run(const Graph& g, const ColorSystem& sys, Suite& suite) {
  std::vector<ColorStep> steps;
  EngineOptions opt;
  opt.observer = [&](const ColorStep& s) { steps.push_back(s); };
  BrooksOutcome out = brooks_color(g, sys, opt);
  std::vector<int> hits(g.vertex_count(), 0);
  for (const ColorStep& s : steps) {
    ++suite.contract.steps;
    const bool ok = s.blocked <= sys.k() - 1 && s.guard_holds && ++hits[s.vertex] == 1 &&
                    out.coloring[s.vertex] == s.index;
    if (!ok) ++suite.contract.violations;
  }
  if (out.colored() && std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
    ++suite.contract.violations;
  }
  suite.digest.add(out);
  return out;
}

Vertex degree_cap(const Graph& g) {
  std::vector<Vertex> deg(g.vertex_count(), 0);
  Vertex top = 0;
  for (const Edge& e : g.edges()) top = std::max({top, ++deg[e.u], ++deg[e.v]});
  return top;
}

bool colors_in_range(const Coloring& c, ColorIndex k) {
  return std::all_of(c.indices().begin(), c.indices().end(), [&](ColorIndex i) { return i >= 0 && i < k; });
}

// ---------------------------------------------------------------- suite 1

bool connected_mask(int n, const std::vector<std::uint32_t>& adj) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier >> v & 1) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

void check_plain(const Graph& g, ColorIndex k, bool expect_clique, Suite& suite, const char* tag) {
  ++suite.instances;
  const ColorSystem sys = plain_system(g, k);
  const BrooksOutcome out = observed_run(g, sys, suite);
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  bool ok;
  if (expect_clique) {
    ok = out.exceptions == std::vector<ComponentException>{{ComponentIssue::Clique, all}};
  } else {
    ok = out.colored() && colors_in_range(out.coloring, k) && respects(sys, out.coloring).ok &&
         fixtures::naive_proper(g, fixtures::as_ints(out.coloring));
  }
  if (!ok) {
    suite.fail(std::string(tag) + " n=" + std::to_string(g.vertex_count()) + " m=" +
               std::to_string(g.edge_count()) + " k=" + std::to_string(k));
  }
}

// Every labeled connected graph on n <= kAtlasMaxN vertices, under k = max(3, delta)
// and k + 1. The only K_{k+1} among them is the complete graph at k = n - 1.
void atlas(Suite& suite, Vertex max_n) {
  for (Vertex n = 1; n <= max_n; ++n) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const std::uint32_t total = 1u << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      std::vector<std::uint32_t> adj(n, 0);
      std::vector<Edge> edges;
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (!(mask >> b & 1)) continue;
        edges.push_back(pairs[b]);
        adj[pairs[b].u] |= 1u << pairs[b].v;
        adj[pairs[b].v] |= 1u << pairs[b].u;
      }
      if (!connected_mask(n, adj)) continue;
      const Graph g = Graph::from_edges(n, edges);
      const Vertex delta = degree_cap(g);
      const bool complete = mask == total - 1;
      for (ColorIndex k : {std::max<Vertex>(3, delta), std::max<Vertex>(3, delta) + 1}) {
        const bool expect_clique = complete && k == n - 1;
        if (expect_clique != contains_clique(g, k + 1)) suite.fail("clique oracle disagrees with the atlas");
        check_plain(g, k, expect_clique, suite, "atlas");
      }
    }
  }
}

// Random graph with maximum degree at most k on at most max_n vertices:
// a pairing-model regular graph when feasible, otherwise a capped sample.
Graph random_bounded_graph(Vertex max_n, Vertex k, Rng& rng) {
  const Vertex n = 1 + static_cast<Vertex>(rng.below(max_n));
  if (rng.coin() && n > k && (n * k) % 2 == 0) return gen_random_regular(n, k, rng.next());
  const auto most = static_cast<std::size_t>(n) * k / 2;
  return fixtures::capped_random_graph(n, k, rng.below(most + 1), rng);
}

void random_plain(Suite& suite, std::uint64_t seed) {
  Rng rng(seed);
  while (suite.instances < kRandomSuiteSize) {
    const auto k = static_cast<ColorIndex>(3 + rng.below(3));
    const Graph g = random_bounded_graph(9, k, rng);
    if (degree_cap(g) > k) {
      suite.fail("generator exceeded the degree cap");
      continue;
    }
    if (contains_clique(g, k + 1)) {
      ++suite.skipped;
      continue;
    }
    check_plain(g, k, false, suite, "random");
  }
}

// ---------------------------------------------------------------- suite 2

void exceptions(Suite& suite) {
  auto expect = [&](const Graph& g, ColorIndex k, std::optional<ComponentIssue> issue, const std::string& name) {
    ++suite.instances;
    const ColorSystem sys = plain_system(g, k);
    const BrooksOutcome out = brooks_color(g, sys);
    suite.digest.add(out);
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    const bool ok = issue ? out.exceptions == std::vector<ComponentException>{{*issue, all}}
                          : out.colored() && colors_in_range(out.coloring, k) &&
                                fixtures::naive_proper(g, fixtures::as_ints(out.coloring));
    if (!ok) suite.fail(name);
  };
  for (ColorIndex k = 3; k <= 6; ++k) expect(gen_clique(k + 1), k, ComponentIssue::Clique, "K" + std::to_string(k + 1));
  for (Vertex n = 3; n <= 15; n += 2) expect(gen_cycle(n), 2, ComponentIssue::OddCycle, "C" + std::to_string(n));
  for (Vertex n = 4; n <= 16; n += 2) expect(gen_cycle(n), 2, std::nullopt, "C" + std::to_string(n));
  for (Vertex n = 1; n <= 16; ++n) expect(gen_path(n), 2, std::nullopt, "P" + std::to_string(n));
}

// ---------------------------------------------------------------- suite 3

// Direct check from the raw lists: adjacent vertices carry different labels.
bool list_proper(const Graph& g, const std::vector<std::vector<Label>>& lists, const Coloring& c) {
  for (const Edge& e : g.edges())
    if (lists[e.u][c[e.u]] == lists[e.v][c[e.v]]) return false;
  return true;
}

// Direct check against the edge matchings.
bool avoids_matchings(const ColorSystem& sys, const Coloring& c) {
  const Graph& g = sys.graph();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const IndexPair used{c[g.edge(e).u], c[g.edge(e).v]};
    const auto m = sys.matching(e);
    if (std::find(m.begin(), m.end(), used) != m.end()) return false;
  }
  return true;
}

void correspondence(Suite& suite, std::uint64_t seed) {
  Rng rng(seed);
  while (suite.instances < kCorrespondenceSuiteSize) {
    const auto k = static_cast<ColorIndex>(3 + rng.below(2));
    const Graph g = random_bounded_graph(8, k, rng);
    if (contains_clique(g, k + 1)) {
      ++suite.skipped;
      continue;
    }
    ++suite.instances;
    const bool lists_mode = suite.instances % 2 == 0;
    std::vector<std::vector<Label>> lists;
    ColorSystem sys;
    if (lists_mode) {
      // A palette barely larger than k keeps neighboring lists overlapping.
      lists = fixtures::random_lists(g.vertex_count(), k, 0, k + 1, rng);
      sys = list_system(g, lists);
    } else {
      static constexpr double kKeep[] = {0.5, 0.8, 1.0};
      sys = random_correspondence(g, k, rng.next(), kKeep[rng.below(3)]);
    }
    const BrooksOutcome out = observed_run(g, sys, suite);
    const auto oracle = exhaustive_respecting_coloring(sys);
    bool ok = out.colored() && colors_in_range(out.coloring, k) && respects(sys, out.coloring).ok &&
              avoids_matchings(sys, out.coloring) && oracle.has_value() && respects(sys, *oracle).ok;
    if (ok && lists_mode) ok = list_proper(g, lists, out.coloring);
    if (!ok) {
      suite.fail(std::string(lists_mode ? "list" : "correspondence") + " n=" + std::to_string(g.vertex_count()) +
                 " k=" + std::to_string(k));
    }
  }
}

// ---------------------------------------------------------------- suite 4

void signed_suite(Suite& suite, std::uint64_t seed) {
  Rng rng(seed);
  while (suite.instances < kSignedSuiteSize) {
    const auto k = static_cast<ColorIndex>(3 + rng.below(3));
    SignedGraph s{random_bounded_graph(9, k, rng), {}};
    if (contains_clique(s.graph, k + 1)) {
      ++suite.skipped;
      continue;
    }
    ++suite.instances;
    for (EdgeId e = 0; e < s.graph.edge_count(); ++e) s.signs.push_back(rng.coin() ? Sign::Plus : Sign::Minus);
    // Symmetric palettes around 0 make '-' edges bite.
    const auto lists = fixtures::random_lists(s.graph.vertex_count(), k, -k, k, rng);
    const ColorSystem sys = signed_system(s, lists);
    const BrooksOutcome out = brooks_color(s.graph, sys);
    suite.digest.add(out);
    bool ok = out.colored() && colors_in_range(out.coloring, k);
    if (ok) {
      std::vector<Label> label(s.graph.vertex_count());
      for (Vertex v = 0; v < s.graph.vertex_count(); ++v) label[v] = lists[v][out.coloring[v]];
      ok = fixtures::signed_proper(s, label);
    }
    if (!ok) suite.fail("signed n=" + std::to_string(s.graph.vertex_count()) + " k=" + std::to_string(k));
  }
}

// ---------------------------------------------------------------- CLI reports

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("brooks-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string strip_time(const std::string& s) {
  static const std::regex time_field("time_ms=[0-9.]+");
  return std::regex_replace(s, time_field, "time_ms=*");
}

// Every CLI transcript of a fixed set of runs, timings blanked.
std::string cli_transcript(const TempDir& dir) {
  std::ostringstream all;
  auto record = [&](int code, const std::ostringstream& out, const std::ostringstream& err) {
    all << "exit=" << code << '\n' << out.str() << strip_time(err.str());
  };

  struct Input {
    std::string file;
    cli::Mode mode;
    std::optional<ColorIndex> k;
  };
  std::vector<Input> inputs;
  auto gen = [&](const std::string& family, Vertex n, Vertex d, std::int64_t m, const std::string& name) {
    cli::GenOptions opt;
    opt.family = family;
    opt.n = n;
    opt.d = d;
    opt.m = m;
    opt.seed = 99;
    opt.out = dir.file(name);
    std::ostringstream out, err;
    record(cli::cmd_gen(opt, out, err), out, err);
    return opt.out;
  };
  inputs.push_back({gen("regular", 2000, 4, 0, "reg.col"), cli::Mode::Plain, std::nullopt});
  inputs.push_back({gen("clique", 5, 0, 0, "k5.col"), cli::Mode::Plain, std::nullopt});
  inputs.push_back({gen("cycle", 9, 0, 0, "c9.col"), cli::Mode::Plain, 3});
  inputs.push_back({gen("gnm", 300, 0, 400, "gnm.col"), cli::Mode::Plain, std::nullopt});

  const Graph pet = fixtures::petersen();
  {
    std::ofstream f(dir.file("pet.json"));
    write_instance_json(f, random_correspondence(pet, 3, 5));
  }
  inputs.push_back({dir.file("pet.json"), cli::Mode::Dp, std::nullopt});
  {
    std::vector<Sign> signs;
    for (EdgeId e = 0; e < pet.edge_count(); ++e) signs.push_back(e % 3 == 0 ? Sign::Minus : Sign::Plus);
    std::ofstream f(dir.file("pet-signed.col"));
    write_dimacs(f, pet, &signs);
  }
  inputs.push_back({dir.file("pet-signed.col"), cli::Mode::Signed, std::nullopt});

  for (const Input& in : inputs) {
    cli::ColorOptions opt;
    opt.input = in.file;
    opt.mode = in.mode;
    opt.k = in.k;
    opt.verify = true;
    std::ostringstream out, err;
    record(cli::cmd_color(opt, out, err), out, err);
  }
  return all.str();
}

// ---------------------------------------------------------------- driver

int failures = 0;

void verdict(bool pass, const std::string& name, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("%s  %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string suite_detail(const Suite& s) {
  std::string d = std::to_string(s.instances) + " instances, " + std::to_string(s.failures) + " failures";
  if (s.skipped) d += ", " + std::to_string(s.skipped) + " K_{k+1} samples skipped";
  if (s.failures) d += ", first: " + s.first_failure;
  return d;
}

struct Runs {
  Suite atlas, random, exceptions, lists, signs;
};

Runs run_suites() {
  Runs r;
  atlas(r.atlas, kAtlasMaxN);
  random_plain(r.random, 1);
  exceptions(r.exceptions);
  correspondence(r.lists, 2);
  signed_suite(r.signs, 3);
  return r;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const Runs first = run_suites();
  const double suites_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  verdict(first.atlas.failures == 0 && first.random.failures == 0 && first.atlas.instances > 0 &&
              first.random.instances >= kRandomSuiteSize,
          "1 brooks-correctness",
          "atlas n<=" + std::to_string(kAtlasMaxN) + " " + suite_detail(first.atlas) + "; random " +
              suite_detail(first.random) + "; suites took " + fmt("%.1f s", suites_s));
  verdict(first.exceptions.failures == 0, "2 exception-soundness", suite_detail(first.exceptions));
  verdict(first.lists.failures == 0 && first.lists.instances >= kCorrespondenceSuiteSize,
          "3 list-and-correspondence", suite_detail(first.lists) + ", oracle agreed on every colored instance");
  verdict(first.signs.failures == 0 && first.signs.instances >= kSignedSuiteSize, "4 signed-reduction",
          suite_detail(first.signs));

  {
    std::string detail;
    bool pass = false;
    for (int attempt = 1; attempt <= kBenchAttempts && !pass; ++attempt) {
      const auto rows = cli::run_bench(cli::BenchOptions{});
      bool ok = rows.size() == 3 && rows.back().median_ms <= kMaxLargestMs;
      detail += "attempt " + std::to_string(attempt) + ":";
      for (const auto& row : rows) {
        detail += " n=" + std::to_string(row.n) + " " + fmt("%.2f ms", row.median_ms);
        if (row.ratio) {
          detail += fmt(" (x%.2f)", *row.ratio);
          ok = ok && *row.ratio <= kMaxRatio;
        }
      }
      detail += "; ";
      pass = ok;
    }
    verdict(pass, "5 linear-time", detail + "limits x" + fmt("%.0f", kMaxRatio) + " per step, " +
                                       fmt("%.0f ms", kMaxLargestMs) + " at n=1000000");
  }

  const std::uint64_t steps = first.atlas.contract.steps + first.random.contract.steps + first.lists.contract.steps;
  const std::uint64_t bad =
      first.atlas.contract.violations + first.random.contract.violations + first.lists.contract.violations;
  verdict(bad == 0 && steps > 0, "6 pathcolor-contract",
          std::to_string(steps) + " observed steps over suites 1 and 3, " + std::to_string(bad) + " violations");

  {
    const Runs second = run_suites();
    const bool same_suites = first.atlas.digest.h == second.atlas.digest.h &&
                             first.random.digest.h == second.random.digest.h &&
                             first.exceptions.digest.h == second.exceptions.digest.h &&
                             first.lists.digest.h == second.lists.digest.h &&
                             first.signs.digest.h == second.signs.digest.h;
    TempDir dir;
    const std::string a = cli_transcript(dir);
    const std::string b = cli_transcript(dir);
    verdict(same_suites && a == b && !a.empty(), "7 determinism",
            std::string("suite digests ") + (same_suites ? "identical" : "DIFFER") + " across reruns; CLI transcripts (" +
                std::to_string(a.size()) + " bytes, time_ms blanked) " + (a == b ? "identical" : "DIFFER"));
  }

  return failures == 0 ? 0 : 1;
}
