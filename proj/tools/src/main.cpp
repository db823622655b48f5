#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "racgk/cli.hpp"

int main(int argc, char** argv) {
  using namespace racgk::cli;

  CLI::App app{"Equivariant K-theory of right-angled Coxeter groups"};
  app.set_version_flag("--version", "racgk 1.0.0");

  std::string subcommand;
  std::string format = "text";
  RunConfig config;
  std::string input, partition, dump;

  app.add_option("subcommand", subcommand,
                 "ktheory | bgw | bredon | limit | kunneth | counterexample | mv-check | all")
      ->required();
  app.add_option("--input,-i", input, "graph file (edge list or JSON)");
  app.add_option("--format,-f", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", config.precision, "2-adic precision for bgw")->check(CLI::PositiveNumber);
  app.add_option("--kunneth-max", config.kunneth_max, "largest n for the kunneth check");
  app.add_option("--seed", config.seed, "seed for sampled checks");
  app.add_option("--partition", partition, "two lines of vertex labels for mv-check");
  app.add_option("--dump", dump, "directory for sparse-triplet dumps of the Bredon differentials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto sub = parse_subcommand(subcommand);
  if (!sub) {
    std::cerr << "error: unknown subcommand '" << subcommand << "'\n";
    return kExitUsage;
  }
  config.subcommand = *sub;
  config.output_format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  if (!input.empty()) config.input_path = input;
  if (!partition.empty()) config.partition_path = partition;
  if (!dump.empty()) config.dump_dir = dump;

  return execute(config, std::cout, std::cerr);
}
