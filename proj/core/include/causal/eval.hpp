#pragma once

#include <cstdint>

#include "causal/kernel.hpp"
#include "causal/term.hpp"

namespace causal {

inline constexpr std::uint64_t kDefaultFuel = 64;

/// Number of permitted apply-unfoldings along any evaluation path. Each
/// apply consumes one unit; an exhausted budget yields the zero
/// subdistribution.
struct Fuel {
  std::uint64_t budget = kDefaultFuel;

  Fuel spent() const { return Fuel{budget - 1}; }
  bool exhausted() const { return budget == 0; }
};

/// Denotation of t. Parse, type and fuel failures inside apply or spec
/// surface as missing mass, never as exceptions.
Kernel eval(const Term& t, Fuel fuel = {});

/// One row of eval(t, fuel); x must inhabit t.dom().
SubDist run(const Term& t, const Event& x, Fuel fuel = {});

}  // namespace causal
