#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace causal {

struct LawResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;

  bool passed() const noexcept { return failures == 0 && instances > 0; }
};

struct LawSuiteOptions {
  std::uint64_t seed = 0;
  std::size_t instances = 200;  // per law
};

/// Checks every structural and modeling law as exact kernel equalities over
/// random terms at enum sizes 1..4. Law order and output are deterministic
/// for a given seed.
std::vector<LawResult> run_law_suite(const LawSuiteOptions& options);

std::string format_law_report(const LawSuiteOptions& options, const std::vector<LawResult>& results);

}  // namespace causal
