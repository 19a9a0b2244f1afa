#pragma once

#include <string>
#include <vector>

#include "causal/eval.hpp"
#include "causal/subdist.hpp"
#include "causal/term.hpp"

namespace causal {

struct ProbeReport {
  Event input;
  SubDist left;    // q(Γ, a)
  SubDist right;   // ⟦Γ⟧(a), run through the universal testing process
  Rational discrepancy;          // max entry |left - right|
  Rational doubled_discrepancy;  // the same at twice the fuel
  bool exact = false;
};

/// A model-parametrized process q: code ⊗ A -> B together with the
/// generator G and the self-confirming model Γ = specialize(G, G).
struct FixpointResult {
  Code q;
  Code g;
  Code gamma;
  TypeExpr arg;     // A
  TypeExpr result;  // B
  std::vector<ProbeReport> report;
  bool verified = false;
};

/// G is the code of ((copy ; spec) ⊗ id_A) ; q, so ⟦G⟧(ω, a) = ⟦q⟧(Ξ(ω, ω), a).
/// Throws BadCode when q does not load, WrongSignature unless its domain
/// leads with the code type.
FixpointResult build_self_confirming(const Code& q);

/// Compares q(Γ, a) with ⟦Γ⟧(a) for every event a of A. Passes when every
/// probe is exact, or when every discrepancy is at most epsilon and shrinks
/// once the fuel is doubled. Throws NotFinite when A involves the code type.
FixpointResult verify_self_confirming(FixpointResult r, Fuel fuel, const Rational& epsilon);

/// "a | L-mass | R-mass | max-entry-discrepancy | exact?" table.
std::string format_report(const FixpointResult& r);

}  // namespace causal
