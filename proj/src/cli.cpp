#include "brooks/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "brooks/engine.hpp"
#include "brooks/generators.hpp"
#include "brooks/io.hpp"

namespace brooks::cli {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return in;
}

// Graph and color system for one command. The graph sits behind a pointer
// because the system refers to it by address; signs are empty unless signed.
struct Instance {
  std::unique_ptr<SignedGraph> holder = std::make_unique<SignedGraph>();
  std::optional<ColorSystem> sys;

  const Graph& graph() const { return holder->graph; }
};

// Symmetric signed palette: {-h..-1, 1..h} for even k, with 0 added for odd k.
std::vector<Label> signed_palette(ColorIndex k) {
  std::vector<Label> labels;
  for (Label a = -(k / 2); a <= k / 2; ++a) {
    if (a != 0 || k % 2 == 1) labels.push_back(a);
  }
  return labels;
}

Instance load(const std::string& path, Mode mode, std::optional<ColorIndex> k) {
  Instance inst;
  std::ifstream in = open_input(path);
  if (mode == Mode::Plain || mode == Mode::Signed) {
    DimacsGraph parsed = parse_dimacs(in);
    inst.holder->graph = std::move(parsed.graph);
    const ColorIndex colors = k.value_or(max_degree(inst.graph()));
    if (colors < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
    if (mode == Mode::Plain) {
      inst.sys = plain_system(inst.graph(), colors);
    } else {
      if (parsed.signs) {
        inst.holder->signs = std::move(*parsed.signs);
      } else if (inst.graph().edge_count() > 0) {
        throw Error(ErrorCode::ParseError, "signed mode needs a sign on every edge line");
      }
      std::vector<std::vector<Label>> lists(inst.graph().vertex_count(), signed_palette(colors));
      inst.sys = signed_system(*inst.holder, lists);
    }
    return inst;
  }

  JsonInstance parsed = parse_instance_json(in);
  if (k && *k != parsed.k) {
    throw Error(ErrorCode::ListSizeMismatch,
                "--k " + std::to_string(*k) + " disagrees with instance k = " + std::to_string(parsed.k));
  }
  inst.holder->graph = std::move(parsed.graph);
  if (mode == Mode::List) {
    inst.sys = list_system(inst.graph(), parsed.lists);
  } else {
    if (!parsed.has_matchings) throw Error(ErrorCode::ParseError, "dp mode needs a \"matching\" on every edge");
    std::vector<Label> flat;
    for (auto& l : parsed.lists) flat.insert(flat.end(), l.begin(), l.end());
    inst.sys = ColorSystem::from_matchings(inst.graph(), parsed.k, std::move(flat), parsed.matchings);
  }
  return inst;
}

std::string outcome_name(const BrooksOutcome& outcome) {
  if (outcome.colored()) return "colored";
  return std::string(to_string(outcome.exceptions.front().issue)) + "-exception";
}

std::string describe(const ComponentException& ex) {
  std::ostringstream s;
  switch (ex.issue) {
    case ComponentIssue::Clique: s << "clique K" << ex.vertices.size() << " component"; break;
    case ComponentIssue::OddCycle: s << "odd cycle C" << ex.vertices.size() << " component"; break;
    case ComponentIssue::UncolorableCycle: s << "uncolorable cycle C" << ex.vertices.size() << " component"; break;
  }
  s << " {";
  for (std::size_t i = 0; i < ex.vertices.size(); ++i) s << (i ? " " : "") << ex.vertices[i] + 1;
  s << "}";
  return s.str();
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace

std::optional<Mode> parse_mode(const std::string& name) {
  if (name == "plain") return Mode::Plain;
  if (name == "list") return Mode::List;
  if (name == "dp") return Mode::Dp;
  if (name == "signed") return Mode::Signed;
  return std::nullopt;
}

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::Plain: return "plain";
    case Mode::List: return "list";
    case Mode::Dp: return "dp";
    case Mode::Signed: return "signed";
  }
  return "unknown";
}

void print_report(std::ostream& out, const RunReport& r) {
  out << "n=" << r.n << " m=" << r.m << " delta=" << r.max_degree << " k=" << r.k
      << " mode=" << to_string(r.mode) << " outcome=" << r.outcome << " time_ms=" << std::fixed
      << std::setprecision(3) << r.wall_ms;
  if (r.verified) out << " verification=" << (*r.verified ? "ok" : "FAILED");
  out << '\n';
}

int cmd_color(const ColorOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = load(opt.input, opt.mode, opt.k);
    const Graph& g = inst.graph();
    const ColorSystem& sys = *inst.sys;

    RunReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.max_degree = max_degree(g);
    report.k = sys.k();
    report.mode = opt.mode;

    BrooksOutcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      outcome = brooks_color(g, sys);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegreeExceedsK) throw;
      report.outcome = "refused";
      print_report(err, report);
      err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
      return kExitError;
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.outcome = outcome_name(outcome);

    if (!outcome.colored()) {
      print_report(err, report);
      for (const auto& ex : outcome.exceptions) out << describe(ex) << '\n';
      return kExitException;
    }

    report.verified = respects(sys, outcome.coloring).ok;
    if (opt.verify && !*report.verified) {
      print_report(err, report);
      err << "error: produced coloring failed verification\n";
      return kExitError;
    }

    std::ofstream file;
    if (!opt.out.empty()) {
      file.open(opt.out);
      if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + opt.out);
    }
    std::ostream& sink = opt.out.empty() ? out : file;
    if (opt.json) {
      write_coloring_json(sink, sys, outcome.coloring);
    } else {
      write_coloring(sink, sys, outcome.coloring);
    }
    print_report(err, report);
    if (opt.verify) err << "verification ok\n";
    return kExitOk;
  });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = load(opt.graph, opt.mode, opt.k);
    std::ifstream in = open_input(opt.coloring);
    const Coloring c = parse_coloring(in, *inst.sys);
    const Verdict verdict = respects(*inst.sys, c);
    if (verdict.ok) {
      out << "ok\n";
      return kExitOk;
    }
    const Edge& e = *verdict.witness;
    out << "violation on edge " << e.u + 1 << ' ' << e.v + 1 << " (labels "
        << inst.sys->label(e.u, c[e.u]) << ", " << inst.sys->label(e.v, c[e.v]) << ")\n";
    return kExitError;
  });
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Graph g;
    if (opt.family == "cycle") {
      g = gen_cycle(opt.n);
    } else if (opt.family == "clique") {
      g = gen_clique(opt.n);
    } else if (opt.family == "path") {
      g = gen_path(opt.n);
    } else if (opt.family == "regular") {
      g = gen_random_regular(opt.n, opt.d, opt.seed);
    } else if (opt.family == "gnm") {
      g = gen_gnm(opt.n, opt.m, opt.seed);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown family '" + opt.family + "'");
    }
    if (opt.out.empty()) {
      write_dimacs(out, g);
    } else {
      std::ofstream file(opt.out);
      if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + opt.out);
      write_dimacs(file, g);
    }
    return kExitOk;
  });
}

std::vector<BenchRow> run_bench(const BenchOptions& opt) {
  if (opt.family != "regular") throw Error(ErrorCode::InvalidArgument, "bench supports the regular family only");
  if (opt.repeats < 1) throw Error(ErrorCode::InvalidArgument, "repeats must be positive");
  if (opt.sizes.empty() || !std::is_sorted(opt.sizes.begin(), opt.sizes.end()) ||
      std::adjacent_find(opt.sizes.begin(), opt.sizes.end()) != opt.sizes.end()) {
    throw Error(ErrorCode::InvalidArgument, "sizes must be strictly ascending");
  }
  std::vector<BenchRow> rows;
  for (Vertex n : opt.sizes) {
    const Graph g = gen_random_regular(n, opt.d, opt.seed);
    const ColorSystem sys = plain_system(g, opt.d);
    std::vector<double> times;
    for (int rep = 0; rep < opt.repeats; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      const BrooksOutcome outcome = brooks_color(g, sys);
      times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
      if (rep == 0 && outcome.colored() && !respects(sys, outcome.coloring).ok) {
        throw Error(ErrorCode::NoFreeColor, "benchmark coloring failed verification");
      }
    }
    std::sort(times.begin(), times.end());
    BenchRow row{n, g.edge_count(), times[times.size() / 2], std::nullopt};
    if (!rows.empty()) row.ratio = row.median_ms / rows.back().median_ms;
    rows.push_back(row);
  }
  return rows;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rows = run_bench(opt);
    out << std::setw(10) << "n" << std::setw(12) << "m" << std::setw(14) << "median_ms" << std::setw(10) << "ratio"
        << '\n';
    nlohmann::json machine = nlohmann::json::array();
    for (const auto& r : rows) {
      out << std::setw(10) << r.n << std::setw(12) << r.m << std::setw(14) << std::fixed << std::setprecision(3)
          << r.median_ms << std::setw(10);
      if (r.ratio) {
        out << std::setprecision(2) << *r.ratio;
      } else {
        out << "-";
      }
      out << '\n';
      machine.push_back({{"n", r.n}, {"m", r.m}, {"median_ms", r.median_ms},
                         {"ratio", r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr)}});
    }
    if (!opt.json_out.empty()) {
      std::ofstream file(opt.json_out);
      if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + opt.json_out);
      file << machine.dump(2) << '\n';
    }
    return kExitOk;
  });
}

OracleBudget oracle_budget_from_env() {
  OracleBudget budget;
  const char* raw = std::getenv("BROOKS_ORACLE_BUDGET");
  if (!raw || !*raw) return budget;
  const std::string text(raw);
  try {
    const auto colon = text.find(':');
    budget.max_vertices = std::stoi(text.substr(0, colon));
    if (colon != std::string::npos) budget.max_states = std::stoull(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "BROOKS_ORACLE_BUDGET must be 'vertices' or 'vertices:states'");
  }
  return budget;
}

int cmd_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = load(opt.input, opt.mode, opt.k);
    const Graph& g = inst.graph();
    const ColorSystem& sys = *inst.sys;
    const auto witness = exhaustive_respecting_coloring(sys, oracle_budget_from_env());
    const bool exists = witness.has_value();
    if (exists && !respects(sys, *witness).ok) throw Error(ErrorCode::InvalidArgument, "oracle witness fails");
    const std::string head = exists ? "exists" : "no coloring exists";
    const int found = exists ? kExitOk : kExitException;

    if (max_degree(g) > sys.k()) {
      out << head << "; engine not applicable (maximum degree exceeds k)\n";
      return found;
    }
    const BrooksOutcome outcome = brooks_color(g, sys);
    if (outcome.colored()) {
      if (exists && respects(sys, outcome.coloring).ok) {
        out << head << "; engine agrees\n";
        return kExitOk;
      }
      out << head << "; DISAGREEMENT: engine produced a coloring\n";
      return kExitError;
    }
    if (!exists) {
      out << head << "; engine exception consistent (" << describe(outcome.exceptions.front()) << ")\n";
      return kExitException;
    }
    // Plain exceptions and the exact cycle search are genuinely uncolorable;
    // other systems may color a clique or odd cycle the engine declines.
    const bool exact = outcome.exceptions.front().issue == ComponentIssue::UncolorableCycle;
    if (opt.mode == Mode::Plain || exact) {
      out << head << "; DISAGREEMENT: engine reported " << describe(outcome.exceptions.front()) << '\n';
      return kExitError;
    }
    out << head << "; engine declined " << describe(outcome.exceptions.front())
        << " (outside the theorem's hypotheses)\n";
    return kExitOk;
  });
}

}  // namespace brooks::cli
