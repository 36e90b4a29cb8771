#include <iostream>

#include "CLI11.hpp"
#include "supervir/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suite for graded Lie superalgebras of Block type"};
  supervir::CommandOptions opts;
  std::uint64_t seed = 0;

  app.add_option("command", opts.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(supervir::command_names()));
  app.add_option("--config", opts.config_path, "Session config (JSON)")->required();
  app.add_option("--window", opts.window_path, "Window file (JSON), overrides the config window");
  app.add_option("--input", opts.inputs, "Command input file (repeatable)");
  app.add_option("--out", opts.out, "Write the JSON report here");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized suites");
  app.add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*seed_opt) opts.seed = seed;
  return supervir::run_command(opts, std::cout, std::cerr);
}
