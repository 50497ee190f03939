#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "brooks/cli.hpp"

namespace {

const std::map<std::string, brooks::cli::Mode> kModes{
    {"plain", brooks::cli::Mode::Plain},
    {"list", brooks::cli::Mode::List},
    {"dp", brooks::cli::Mode::Dp},
    {"signed", brooks::cli::Mode::Signed},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace brooks::cli;

  CLI::App app{"Brooks-theorem graph coloring: plain, list, correspondence and signed"};
  app.require_subcommand(1);

  ColorOptions color;
  auto* color_cmd = app.add_subcommand("color", "color a graph with k colors or report the obstruction");
  color_cmd->add_option("input", color.input, "DIMACS graph (plain, signed) or JSON instance (list, dp)")->required();
  color_cmd->add_option("--k", color.k, "list size; defaults to the maximum degree for DIMACS input");
  color_cmd->add_option("--mode", color.mode, "plain | list | dp | signed")->transform(CLI::CheckedTransformer(kModes));
  color_cmd->add_option("--out", color.out, "write the coloring here instead of stdout");
  color_cmd->add_flag("--verify", color.verify, "re-check the coloring and fail on mismatch");
  color_cmd->add_flag("--json", color.json, "emit the coloring as a JSON array");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "check a coloring file against an instance");
  verify_cmd->add_option("graph", verify.graph)->required();
  verify_cmd->add_option("coloring", verify.coloring)->required();
  verify_cmd->add_option("--k", verify.k);
  verify_cmd->add_option("--mode", verify.mode)->transform(CLI::CheckedTransformer(kModes));

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a DIMACS graph");
  gen_cmd->add_option("family", gen.family, "cycle | clique | path | regular | gnm")
      ->required()
      ->check(CLI::IsMember({"cycle", "clique", "path", "regular", "gnm"}));
  gen_cmd->add_option("--n", gen.n)->required();
  gen_cmd->add_option("--d", gen.d, "degree for the regular family");
  gen_cmd->add_option("--m", gen.m, "edge count for the gnm family");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out", gen.out);

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "median engine time on random regular graphs");
  bench_cmd->add_option("--family", bench.family)->check(CLI::IsMember({"regular"}));
  bench_cmd->add_option("--d", bench.d);
  bench_cmd->add_option("--sizes", bench.sizes, "ascending vertex counts")->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--repeats", bench.repeats);
  bench_cmd->add_option("--json", bench.json_out, "also write the rows as JSON");

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search, cross-checked against the engine");
  oracle_cmd->add_option("input", oracle.input)->required();
  oracle_cmd->add_option("--k", oracle.k);
  oracle_cmd->add_option("--mode", oracle.mode)->transform(CLI::CheckedTransformer(kModes));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (*color_cmd) return cmd_color(color, std::cout, std::cerr);
  if (*verify_cmd) return cmd_verify(verify, std::cout, std::cerr);
  if (*gen_cmd) return cmd_gen(gen, std::cout, std::cerr);
  if (*bench_cmd) return cmd_bench(bench, std::cout, std::cerr);
  return cmd_oracle(oracle, std::cout, std::cerr);
}
