#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "brooks/oracle.hpp"
#include "brooks/types.hpp"

namespace brooks::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitException = 2;

inline constexpr std::uint64_t kDefaultSeed = 20170817;

enum class Mode { Plain, List, Dp, Signed };

std::optional<Mode> parse_mode(const std::string& name);
const char* to_string(Mode mode);

struct RunReport {
  Vertex n = 0;
  EdgeId m = 0;
  Vertex max_degree = 0;
  ColorIndex k = 0;
  Mode mode = Mode::Plain;
  std::string outcome;                 // colored | clique-exception | odd-cycle-exception | ... | refused
  double wall_ms = 0;
  std::optional<bool> verified;        // set whenever outcome == "colored"
};

void print_report(std::ostream& out, const RunReport& report);

struct ColorOptions {
  std::string input;
  std::optional<ColorIndex> k;
  Mode mode = Mode::Plain;
  std::string out;  // empty: coloring goes to the `out` stream
  bool verify = false;
  bool json = false;
};

struct VerifyOptions {
  std::string graph;
  std::string coloring;
  std::optional<ColorIndex> k;
  Mode mode = Mode::Plain;
};

struct GenOptions {
  std::string family;  // cycle | clique | path | regular | gnm
  Vertex n = 0;
  Vertex d = 0;
  std::int64_t m = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

struct BenchOptions {
  std::string family = "regular";
  Vertex d = 4;
  std::vector<Vertex> sizes{10'000, 100'000, 1'000'000};
  std::uint64_t seed = kDefaultSeed;
  int repeats = 5;
  std::string json_out;
};

struct BenchRow {
  Vertex n = 0;
  EdgeId m = 0;
  double median_ms = 0;
  std::optional<double> ratio;  // median_ms over the previous row's
};

struct OracleOptions {
  std::string input;
  std::optional<ColorIndex> k;
  Mode mode = Mode::Plain;
};

// Each command writes results to `out` and diagnostics to `err` and returns
// its exit code.
int cmd_color(const ColorOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err);

/// Median engine times per size; throws InvalidArgument for unsorted sizes.
std::vector<BenchRow> run_bench(const BenchOptions& opt);

/// BROOKS_ORACLE_BUDGET as "vertices" or "vertices:states"; defaults otherwise.
OracleBudget oracle_budget_from_env();

}  // namespace brooks::cli
