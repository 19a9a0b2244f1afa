#pragma once

#include <string>

#include "causal/term.hpp"

namespace causal {

/// ASCII box-and-wire drawing of t. Sequential composition stacks boxes
/// bottom to top, parallel composition places them side by side, inputs
/// enter at the bottom and outputs leave at the top.
std::string render(const Term& t);

}  // namespace causal
