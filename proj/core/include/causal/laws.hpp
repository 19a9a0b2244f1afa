#pragma once

#include <optional>
#include <vector>

#include "causal/kernel.hpp"

namespace causal {

using Probes = std::optional<std::vector<Event>>;

/// Probe set for a kernel domain: the given probes (validated), or every
/// event when the domain is finite. Throws NeedProbes otherwise.
std::vector<Event> resolve_probes(const TypeExpr& dom, const Probes& probes);

struct FunctionVerdict {
  bool total = true;          // every row has mass exactly 1
  bool single_valued = true;  // no row has more than one outcome

  bool is_function() const noexcept { return total && single_valued; }
  explicit operator bool() const noexcept { return is_function(); }
};

/// Row test: every probed row is a point mass of mass 1. The verdict is
/// cross-checked against is_comonoid_homomorphism; a disagreement throws
/// std::logic_error.
FunctionVerdict is_function(const Kernel& k, const Probes& probes = std::nullopt);

/// Δ∘f = (f⊗f)∘Δ and ⊤∘f = ⊤ on every probe.
bool is_comonoid_homomorphism(const Kernel& k, const Probes& probes = std::nullopt);

/// Exact equality of k1(x) and k2(x) on every probe. Throws TypeMismatch if
/// the signatures differ and InvalidEvent for a probe outside the domain.
bool indistinguishable(const Kernel& k1, const Kernel& k2, const Probes& probes = std::nullopt);

}  // namespace causal
