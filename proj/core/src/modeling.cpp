#include "causal/modeling.hpp"

#include "causal/error.hpp"
#include "causal/eval.hpp"
#include "causal/syntax.hpp"

namespace causal {

ParamModel ParamModel::make(Term term) {
  if (term.cod() != TypeExpr::code())
    throw Error(ErrorCode::TypeMismatch, "a parametrized model must produce code, got " + to_string(term.cod()));
  return ParamModel(std::move(term));
}

SteeringMap SteeringMap::make(Term term, const Probes& probes) {
  FunctionVerdict v = is_function(eval(term), probes);
  if (!v) {
    std::string why;
    if (!v.total) why += " not total;";
    if (!v.single_valued) why += " not single-valued;";
    throw Error(ErrorCode::NotAFunction, "steering map is not a function:" + why);
  }
  return SteeringMap(std::move(term));
}

Term prediction(const ParamModel& model, const TypeExpr& a, const TypeExpr& b) {
  return Term::seq(Term::par(model.term(), Term::id(a)), Term::apply(a, b));
}

Code synthesize_model(const Kernel& k) {
  if (!k.dom().is_finite() || !k.cod().is_finite())
    throw Error(ErrorCode::NotFinite, "cannot synthesize a literal for " + to_string(k.dom()) + " -> " +
                                          to_string(k.cod()));
  return serialize(Term::lit(k.dom(), k.cod(), k.matrix()));
}

ParamModel steer(const ParamModel& model, const SteeringMap& steering) {
  if (steering.term().cod() != model.param_type())
    throw Error(ErrorCode::TypeMismatch, "steering produces " + to_string(steering.term().cod()) +
                                             " but the model is parametrized over " +
                                             to_string(model.param_type()));
  return ParamModel::make(Term::seq(steering.term(), model.term()));
}

Code specialize_prefix(const Code& p, const Event& prefix) {
  Term program = [&] {
    try {
      return parse(p.text);
    } catch (const Error& e) {
      throw Error(ErrorCode::BadCode, "cannot load code: " + std::string(e.what()));
    }
  }();
  const TypeExpr& dom = program.dom();
  std::size_t n = prefix.arity();
  if (n == 0 || dom.arity() < n)
    throw Error(ErrorCode::BadCode, "code of type " + to_string(dom) + " has no " + std::to_string(n) +
                                        "-factor parameter");
  TypeExpr head = dom.slice(0, n);
  if (!inhabits(prefix, head))
    throw Error(ErrorCode::BadParam, to_string(prefix) + " does not inhabit " + to_string(head));
  Term fixed = Term::par(Term::constant(head, prefix), Term::id(dom.drop_front(n)));
  return serialize(Term::seq(fixed, program));
}

Code specialize(const Code& p, const Event& x) {
  if (x.arity() != 1)
    throw Error(ErrorCode::BadParam, "expected a single-factor parameter, got " + to_string(x));
  return specialize_prefix(p, x);
}

}  // namespace causal
