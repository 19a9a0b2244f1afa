#pragma once

#include "causal/event.hpp"
#include "causal/kernel.hpp"
#include "causal/laws.hpp"
#include "causal/term.hpp"

namespace causal {

/// A model parametrized over paramType: a term param_type -> code. Closed
/// models have the unit parameter type.
class ParamModel {
 public:
  /// Throws TypeMismatch unless term.cod() is exactly the code type.
  static ParamModel make(Term term);

  const Term& term() const noexcept { return term_; }
  const TypeExpr& param_type() const noexcept { return term_.dom(); }

 private:
  explicit ParamModel(Term term) : term_(std::move(term)) {}
  Term term_;
};

/// A deterministic reparametrization. Construction runs is_function on the
/// term's denotation; domains involving the code type need probes.
class SteeringMap {
 public:
  /// Throws NotAFunction (or NeedProbes).
  static SteeringMap make(Term term, const Probes& probes = std::nullopt);

  const Term& term() const noexcept { return term_; }

 private:
  explicit SteeringMap(Term term) : term_(std::move(term)) {}
  Term term_;
};

/// The prediction of P on a -> b: (P ⊗ id_a) ; apply(a, b), a process
/// param ⊗ a -> b. With P = id on code this is the universal testing process.
Term prediction(const ParamModel& model, const TypeExpr& a, const TypeExpr& b);

/// Code of a literal with k's matrix; running it through apply reproduces k
/// exactly. Throws NotFinite when dom or cod involves the code type.
Code synthesize_model(const Kernel& k);

/// Reparametrizes model along steering: steering ; model. Throws
/// TypeMismatch unless cod(steering) == model.param_type().
ParamModel steer(const ParamModel& model, const SteeringMap& steering);

/// Fixes the leading parameter of p to x: the code of
/// (const x ⊗ id_rest) ; p, a process rest -> cod(p). Throws BadCode when p
/// does not parse or has no parameter, BadParam when x is not a single event
/// of the leading factor.
Code specialize(const Code& p, const Event& x);

/// Fixes the first prefix.arity() factors of p at once.
Code specialize_prefix(const Code& p, const Event& prefix);

}  // namespace causal
