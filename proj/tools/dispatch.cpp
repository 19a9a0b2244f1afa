#include "dispatch.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include "causal/error.hpp"
#include "causal/fixpoint.hpp"
#include "causal/law_suite.hpp"
#include "causal/laws.hpp"
#include "causal/modeling.hpp"
#include "causal/render.hpp"
#include "causal/syntax.hpp"

namespace causal::cli {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 8> kCommands{{
    {Command::Typecheck, "typecheck"},
    {Command::Eval, "eval"},
    {Command::CheckLaws, "check-laws"},
    {Command::IsFunction, "is-function"},
    {Command::Specialize, "specialize"},
    {Command::Steer, "steer"},
    {Command::Fixpoint, "fixpoint"},
    {Command::Render, "render"},
}};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Term load_term(const std::string& path) {
  try {
    return parse(strip_comments(read_file(path)));
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Probes probes_of(const RunConfig& cfg) {
  if (!cfg.probes) return std::nullopt;
  return parse_value_list(*cfg.probes);
}

Outcome typecheck_cmd(const RunConfig& cfg) {
  Signature s = typecheck(load_term(cfg.input_path));
  return {kExitOk, "dom: " + to_string(s.dom) + "\ncod: " + to_string(s.cod) + "\n", {}};
}

Outcome eval_cmd(const RunConfig& cfg) {
  Term t = load_term(cfg.input_path);
  Kernel k = eval(t, Fuel{cfg.fuel});
  return {kExitOk, dump(k, resolve_probes(k.dom(), probes_of(cfg))), {}};
}

Outcome check_laws_cmd(const RunConfig& cfg) {
  LawSuiteOptions options{cfg.seed, cfg.law_instances};
  auto results = run_law_suite(options);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  return {ok ? kExitOk : kExitFailed, format_law_report(options, results), {}};
}

Outcome is_function_cmd(const RunConfig& cfg) {
  Kernel k = eval(load_term(cfg.input_path), Fuel{cfg.fuel});
  FunctionVerdict v = is_function(k, probes_of(cfg));
  std::string out = std::string("function: ") + (v ? "yes" : "no") + "\n";
  out += std::string("total: ") + (v.total ? "yes" : "no") + "\n";
  out += std::string("single-valued: ") + (v.single_valued ? "yes" : "no") + "\n";
  return {v ? kExitOk : kExitFailed, out, {}};
}

Outcome specialize_cmd(const RunConfig& cfg) {
  if (cfg.extra.size() != 1) throw UsageError("specialize expects FILE VAL");
  Code p = serialize(load_term(cfg.input_path));
  return {kExitOk, specialize(p, parse_value(cfg.extra[0])).text + "\n", {}};
}

Outcome steer_cmd(const RunConfig& cfg) {
  if (cfg.extra.size() != 1) throw UsageError("steer expects MODEL_FILE STEERING_FILE");
  ParamModel model = ParamModel::make(load_term(cfg.input_path));
  SteeringMap map = SteeringMap::make(load_term(cfg.extra[0]), probes_of(cfg));
  return {kExitOk, serialize(steer(model, map).term()).text + "\n", {}};
}

Outcome fixpoint_cmd(const RunConfig& cfg) {
  Code q = serialize(load_term(cfg.input_path));
  FixpointResult r = verify_self_confirming(build_self_confirming(q), Fuel{cfg.fuel}, cfg.epsilon);
  std::string out = "q: " + r.q.text + "\n";
  out += "G: " + r.g.text + "\n";
  out += "Gamma: " + r.gamma.text + "\n";
  out += "fuel: " + std::to_string(cfg.fuel) + " epsilon: " + to_string(cfg.epsilon) + "\n";
  out += format_report(r);
  out += std::string("verified: ") + (r.verified ? "yes" : "no") + "\n";
  return {r.verified ? kExitOk : kExitFailed, out, {}};
}

Outcome render_cmd(const RunConfig& cfg) { return {kExitOk, render(load_term(cfg.input_path)), {}}; }

Outcome run_command(const RunConfig& cfg) {
  if (cfg.fuel < 1) throw UsageError("--fuel must be at least 1");
  if (cfg.command != Command::CheckLaws && cfg.input_path.empty())
    throw UsageError(std::string(command_name(cfg.command)) + " needs an input file");
  switch (cfg.command) {
    case Command::Typecheck: return typecheck_cmd(cfg);
    case Command::Eval: return eval_cmd(cfg);
    case Command::CheckLaws: return check_laws_cmd(cfg);
    case Command::IsFunction: return is_function_cmd(cfg);
    case Command::Specialize: return specialize_cmd(cfg);
    case Command::Steer: return steer_cmd(cfg);
    case Command::Fixpoint: return fixpoint_cmd(cfg);
    case Command::Render: return render_cmd(cfg);
  }
  throw UsageError("unknown command");
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands)
    if (n == name) return c;
  return std::nullopt;
}

std::string_view command_name(Command c) {
  for (const auto& [cmd, n] : kCommands)
    if (cmd == c) return n;
  return "?";
}

std::string strip_comments(std::string text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
    if (pos >= text.size() || text[pos] != '#') {
      if (pos < text.size() && text[pos] == '\n') {
        ++pos;
        continue;
      }
      break;
    }
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    for (std::size_t i = start; i < end; ++i) text[i] = ' ';
    pos = end;
  }
  return text;
}

Outcome dispatch(const RunConfig& cfg) {
  try {
    return run_command(cfg);
  } catch (const UsageError& e) {
    return {kExitUsage, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {kExitUsage, {}, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace causal::cli
