#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "causal/error.hpp"
#include "dispatch.hpp"

int main(int argc, char** argv) {
  using namespace causal;
  using cli::kExitUsage;

  CLI::App app{"causalc: typed causal-process calculus with exact subprobability semantics"};
  std::string command;
  std::vector<std::string> positional;
  std::string epsilon = "0";
  std::string output;
  std::string probes;
  cli::RunConfig cfg;

  app.add_option("command", command,
                 "typecheck | eval | check-laws | is-function | specialize | steer | fixpoint | render")
      ->required();
  app.add_option("args", positional, "input file, then VAL (specialize) or STEERING_FILE (steer)");
  app.add_option("--fuel", cfg.fuel, "apply-unfolding budget (default 64)");
  app.add_option("--epsilon", epsilon, "fixpoint discrepancy tolerance, P/Q (default 0)");
  app.add_option("--probes", probes, "probe events, e.g. \"(0 (pair 1 0))\"");
  app.add_option("--seed", cfg.seed, "check-laws seed (default 0)");
  app.add_option("--output", output, "write the report to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  auto parsed = cli::parse_command(command);
  if (!parsed) {
    std::cerr << "error: unknown command '" << command << "'\n" << app.help();
    return kExitUsage;
  }
  cfg.command = *parsed;
  if (!positional.empty()) {
    cfg.input_path = positional.front();
    cfg.extra.assign(positional.begin() + 1, positional.end());
  }
  try {
    cfg.epsilon = parse_rational(epsilon);
  } catch (const Error& e) {
    std::cerr << "error: --epsilon: " << e.what() << "\n";
    return kExitUsage;
  }
  if (cfg.epsilon < 0) {
    std::cerr << "error: --epsilon must be nonnegative\n";
    return kExitUsage;
  }
  if (!probes.empty()) cfg.probes = probes;

  cli::Outcome outcome = cli::dispatch(cfg);
  std::cerr << outcome.error;
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << output << "'\n";
      return kExitUsage;
    }
    out << outcome.report;
  } else {
    std::cout << outcome.report;
  }
  return outcome.exit_code;
}
