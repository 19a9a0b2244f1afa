#include "causal/eval.hpp"

#include <optional>

#include "causal/error.hpp"
#include "causal/modeling.hpp"
#include "causal/syntax.hpp"

namespace causal {

namespace {

std::optional<Term> load(const Atom& atom) {
  const auto* code = std::get_if<Code>(&atom);
  if (!code) return std::nullopt;
  try {
    return parse(code->text);
  } catch (const Error&) {
    return std::nullopt;
  }
}

SubDist run_apply(const Term& t, const Event& x, Fuel fuel) {
  if (fuel.exhausted()) return SubDist::zero();
  auto program = load(x[0]);
  if (!program || program->dom() != t.type() || program->cod() != t.second_type()) return SubDist::zero();
  return run(*program, x.drop_front(1), fuel.spent());
}

SubDist run_spec(const Event& x) {
  const auto* program = std::get_if<Code>(&x[0]);
  if (!program) return SubDist::zero();
  try {
    return SubDist::point(Event::of(specialize(*program, x.drop_front(1))));
  } catch (const Error&) {
    return SubDist::zero();
  }
}

}  // namespace

SubDist run(const Term& t, const Event& x, Fuel fuel) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Id: return SubDist::point(x);
    case K::Swap: {
      std::size_t n = t.type().arity();
      return SubDist::point(x.drop_front(n) * x.slice(0, n));
    }
    case K::Copy: return SubDist::point(x * x);
    case K::Del: return SubDist::point(Event::unit());
    case K::Lit: {
      const auto& row = t.matrix()[event_index(x, t.type())];
      SubDist out;
      for (std::size_t j = 0; j < row.size(); ++j) out.add(event_at(j, t.second_type()), row[j]);
      return out;
    }
    case K::Const: return SubDist::point(t.value());
    case K::Seq: {
      SubDist out;
      for (const auto& [y, w] : run(t.first(), x, fuel).support())
        for (const auto& [z, v] : run(t.second(), y, fuel).support()) out.add(z, w * v);
      return out;
    }
    case K::Par: {
      std::size_t n = t.first().dom().arity();
      SubDist left = run(t.first(), x.slice(0, n), fuel);
      if (left.empty()) return left;
      SubDist right = run(t.second(), x.drop_front(n), fuel);
      SubDist out;
      for (const auto& [y, w] : left.support())
        for (const auto& [v, u] : right.support()) out.add(y * v, w * u);
      return out;
    }
    case K::Mix: {
      SubDist out;
      const Rational& p = t.weight();
      if (p != 0)
        for (const auto& [y, w] : run(t.first(), x, fuel).support()) out.add(y, p * w);
      if (p != 1)
        for (const auto& [y, w] : run(t.second(), x, fuel).support()) out.add(y, (1 - p) * w);
      return out;
    }
    case K::Apply: return run_apply(t, x, fuel);
    case K::Spec: return run_spec(x);
  }
  return SubDist::zero();
}

Kernel eval(const Term& t, Fuel fuel) {
  Kernel k(t.dom(), t.cod(), [t, fuel](const Event& x) { return run(t, x, fuel); });
  if (t.dom().is_finite()) return k.materialized();
  return k;
}

}  // namespace causal
