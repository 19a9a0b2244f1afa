#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "causal/eval.hpp"
#include "causal/rational.hpp"

namespace causal::cli {

enum class Command { Typecheck, Eval, CheckLaws, IsFunction, Specialize, Steer, Fixpoint, Render };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

struct RunConfig {
  Command command = Command::Typecheck;
  // Input file; unused by check-laws.
  std::string input_path;
  // specialize: the parameter VAL. steer: path of the steering term.
  std::vector<std::string> extra;
  std::uint64_t fuel = kDefaultFuel;
  Rational epsilon = 0;
  std::optional<std::string> probes;
  std::uint64_t seed = 0;
  std::optional<std::string> output;
  std::size_t law_instances = 200;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct Outcome {
  int exit_code = kExitOk;
  std::string report;  // stdout text
  std::string error;   // stderr text
};

/// Runs one command. Never throws: engine errors become exit code 2 with the
/// message (including byte offsets for parse errors) in Outcome::error.
Outcome dispatch(const RunConfig& cfg);

/// Input file text with leading '#' comment lines blanked out, so byte
/// offsets still refer to the original file.
std::string strip_comments(std::string text);

}  // namespace causal::cli
