#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  using sqcore::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"Guirardel core, square complex checks and sphere-system pieces for pairs of marked graphs"};
  app.require_subcommand(1);

  auto pair_options = [&cfg](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "First marked graph, or a complex file")->required();
    sub->add_option("--input2", cfg.input2, "Second marked graph");
    sub->add_option("--out", cfg.out, "Output directory");
    sub->add_option("--genus", cfg.genus, "Genus for complex files without one")->check(CLI::Range(2, 64));
    sub->add_option("--threads", cfg.threads, "Worker threads for the core")->check(CLI::Range(1, 256));
    sub->add_flag("--timings", cfg.timings, "Append phase timings to the report");
  };

  for (const char* name : {"build", "validate", "pieces", "export-dot"}) {
    pair_options(app.add_subcommand(name, std::string(name) + " a core"));
  }
  auto* roundtrip = app.add_subcommand("roundtrip", "Compile pieces, rebuild the dual and compare");
  pair_options(roundtrip);
  roundtrip->add_option("--pieces", cfg.pieces, "Decomposition file to use instead of compiling one");

  auto* oracle = app.add_subcommand("oracle", "Compare fibers with direct nestedness tests in a ball");
  pair_options(oracle);
  oracle->add_option("--radius", cfg.radius, "Ball radius")->check(CLI::Range(0, 12));

  auto* random = app.add_subcommand("random", "Write a seeded random pair of marked graphs");
  random->add_option("--genus", cfg.genus, "Genus")->check(CLI::Range(2, 64));
  random->add_option("--seed", cfg.seed, "Seed");
  random->add_option("--moves", cfg.moves, "Nielsen moves")->check(CLI::Range(0, 1000));
  random->add_option("--out", cfg.out, "Output directory");
  random->add_flag("--timings", cfg.timings, "Append timings to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sqcore::cli::kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return sqcore::cli::run(cfg, std::cout, std::cerr);
}
