#include "causal/law_suite.hpp"

#include <functional>
#include <future>

#include "causal/eval.hpp"
#include "causal/laws.hpp"
#include "causal/modeling.hpp"
#include "causal/random_terms.hpp"
#include "causal/syntax.hpp"

namespace causal {

namespace {

using Instance = std::function<bool(TermGenerator&)>;

bool same(const Term& a, const Term& b) { return indistinguishable(eval(a), eval(b)); }

bool interchange(TermGenerator& gen) {
  TypeExpr a = gen.enum_type(), b = gen.enum_type(), c = gen.enum_type();
  TypeExpr u = gen.enum_type(), v = gen.enum_type(), w = gen.enum_type();
  Term f = gen.term(a, b, 1), g = gen.term(b, c, 1);
  Term t = gen.term(u, v, 1), s = gen.term(v, w, 1);
  Term lhs = Term::par(Term::seq(f, g), Term::seq(t, s));
  Term rhs = Term::seq(Term::par(f, t), Term::par(g, s));
  Kernel by_kernels = kernel_par(kernel_seq(eval(f), eval(g)), kernel_seq(eval(t), eval(s)));
  return same(lhs, rhs) && indistinguishable(eval(lhs), by_kernels);
}

bool unit_seq(TermGenerator& gen) {
  TypeExpr a = gen.finite_type(), b = gen.finite_type();
  Term f = gen.term(a, b, 1);
  return same(Term::seq(Term::id(a), f), f) && same(Term::seq(f, Term::id(b)), f);
}

bool unit_par(TermGenerator& gen) {
  TypeExpr a = gen.finite_type(), b = gen.finite_type();
  Term f = gen.term(a, b, 1);
  Term unit = Term::id(TypeExpr::unit());
  Kernel k = eval(f);
  return same(Term::par(f, unit), f) && same(Term::par(unit, f), f) &&
         indistinguishable(kernel_par(k, identity_kernel(TypeExpr::unit())), k);
}

bool coassociativity(TermGenerator& gen) {
  TypeExpr t = gen.finite_type();
  Term copy = Term::copy(t);
  Term left = Term::seq(copy, Term::par(copy, Term::id(t)));
  Term right = Term::seq(copy, Term::par(Term::id(t), copy));
  return same(left, right);
}

bool counit(TermGenerator& gen) {
  TypeExpr t = gen.finite_type();
  Term copy = Term::copy(t);
  Term left = Term::seq(copy, Term::par(Term::del(t), Term::id(t)));
  Term right = Term::seq(copy, Term::par(Term::id(t), Term::del(t)));
  return same(left, Term::id(t)) && same(right, Term::id(t));
}

bool commutativity(TermGenerator& gen) {
  TypeExpr t = gen.finite_type();
  DataServices ds = data_services(t);
  return same(Term::seq(Term::copy(t), Term::swap(t, t)), Term::copy(t)) &&
         indistinguishable(kernel_seq(ds.copy, ds.swap), ds.copy);
}

bool function_characterization(TermGenerator& gen) {
  TypeExpr a = gen.enum_type(), b = gen.enum_type(), c = gen.enum_type();
  Matrix m;
  switch (gen.below(3)) {
    case 0: m = gen.deterministic(a, b); break;
    case 1: m = gen.stochastic(a, b); break;
    default: m = gen.substochastic(a, b); break;
  }
  Kernel k = Kernel::from_matrix(a, b, m);
  if (is_function(k).is_function() != is_comonoid_homomorphism(k)) return false;

  Kernel f = Kernel::from_matrix(a, b, gen.deterministic(a, b));
  Kernel g = Kernel::from_matrix(b, c, gen.deterministic(b, c));
  return is_function(f) && is_function(g) && is_function(kernel_seq(f, g)) && is_function(kernel_par(f, g));
}

bool scalars(TermGenerator& gen) {
  TypeExpr unit = TypeExpr::unit();
  Term s = gen.lit(unit, unit);
  Term t = gen.lit(unit, unit);
  Rational ws = eval(s)(Event::unit()).at(Event::unit());
  Rational wt = eval(t)(Event::unit()).at(Event::unit());
  SubDist prod = eval(Term::seq(s, t))(Event::unit());
  return prod.size() <= 1 && prod.mass() == ws * wt;
}

bool model_roundtrip(TermGenerator& gen) {
  TypeExpr a = gen.finite_type(), b = gen.finite_type();
  Kernel k = eval(gen.lit(a, b));
  Event code = Event::of(synthesize_model(k));
  Term testing = Term::apply(a, b);
  for (const auto& x : all_events(a))
    if (run(testing, code * x) != k(x)) return false;
  return true;
}

bool smn(TermGenerator& gen) {
  TypeExpr x_type = gen.enum_type(), a = gen.finite_type(), b = gen.enum_type();
  Code p = serialize(gen.term(x_type * a, b, 1));
  Term testing = Term::apply(x_type * a, b);
  for (const auto& x : all_events(x_type)) {
    Kernel special = eval(parse(specialize(p, x).text));
    for (const auto& y : all_events(a))
      if (special(y) != run(testing, Event::of(p) * x * y)) return false;
  }
  return true;
}

bool spec_coherence(TermGenerator& gen) {
  TypeExpr a = gen.enum_type(), b = gen.enum_type();
  Code q = serialize(gen.model_ignoring(a, b));
  std::vector<Code> probes = {q, serialize(gen.lit(a, b)), Code{"(not a term"}, Code{""}};
  Term spec = Term::spec();
  for (const auto& c : probes)
    if (run(spec, Event::of(q) * Event::of(c)) != SubDist::point(Event::of(specialize(q, Event::of(c)))))
      return false;
  // A code without a leading model parameter cannot be specialized at runtime.
  Code finite = serialize(gen.lit(a, b));
  return run(spec, Event::of(finite) * Event::of(q)).empty();
}

bool steering(TermGenerator& gen) {
  TypeExpr a = gen.enum_type(), b = gen.enum_type();
  TypeExpr x = gen.enum_type();
  std::optional<ParamModel> model;
  std::optional<SteeringMap> map;
  if (gen.below(4) == 0) {
    model = ParamModel::make(Term::id(TypeExpr::code()));
    Code c = serialize(gen.lit(a, b));
    map = SteeringMap::make(Term::seq(Term::del(x), Term::constant(TypeExpr::code(), Event::of(c))));
  } else {
    TypeExpr y = gen.finite_type();
    model = ParamModel::make(gen.model(y, a, b));
    map = SteeringMap::make(Term::lit(x, y, gen.deterministic(x, y)));
  }
  Term steered = prediction(steer(*model, *map), a, b);
  Term composed = Term::seq(Term::par(map->term(), Term::id(a)), prediction(*model, a, b));
  return same(steered, composed);
}

bool slicing(TermGenerator& gen) {
  TypeExpr y_type = gen.enum_type(1, 3), x_type = gen.enum_type(1, 3);
  TypeExpr a = gen.enum_type(), b = gen.enum_type();
  Code r = serialize(gen.term(y_type * x_type * a, b, 1));
  Term testing = Term::apply(y_type * x_type * a, b);
  for (const auto& y : all_events(y_type)) {
    Code sliced = specialize(r, y);
    for (const auto& x : all_events(x_type)) {
      Kernel stepwise = eval(parse(specialize(sliced, x).text));
      Kernel fused = eval(parse(specialize_prefix(r, y * x).text));
      for (const auto& e : all_events(a)) {
        SubDist direct = run(testing, Event::of(r) * y * x * e);
        if (stepwise(e) != direct || fused(e) != direct) return false;
      }
    }
  }
  return true;
}

struct Law {
  const char* name;
  Instance check;
};

const std::vector<Law>& laws() {
  static const std::vector<Law> all = {
      {"middle-two-interchange", interchange},
      {"seq-unit", unit_seq},
      {"par-unit", unit_par},
      {"comonoid-coassociativity", coassociativity},
      {"comonoid-counit", counit},
      {"comonoid-commutativity", commutativity},
      {"function-characterization", function_characterization},
      {"scalar-multiplication", scalars},
      {"model-roundtrip", model_roundtrip},
      {"s-m-n", smn},
      {"spec-coherence", spec_coherence},
      {"steering", steering},
      {"slicing", slicing},
  };
  return all;
}

LawResult check_law(const Law& law, std::uint64_t seed, std::size_t instances) {
  TermGenerator gen(seed);
  LawResult r{law.name, instances, 0};
  for (std::size_t i = 0; i < instances; ++i)
    if (!law.check(gen)) ++r.failures;
  return r;
}

}  // namespace

std::vector<LawResult> run_law_suite(const LawSuiteOptions& options) {
  const auto& all = laws();
  std::vector<std::future<LawResult>> pending;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::uint64_t seed = options.seed * 1000003u + i;
    pending.push_back(std::async(std::launch::async, check_law, std::cref(all[i]), seed, options.instances));
  }
  std::vector<LawResult> results;
  for (auto& p : pending) results.push_back(p.get());
  return results;
}

std::string format_law_report(const LawSuiteOptions& options, const std::vector<LawResult>& results) {
  std::string out = "check-laws seed=" + std::to_string(options.seed) +
                    " instances=" + std::to_string(options.instances) + "\n";
  for (const auto& r : results) {
    out += r.name;
    out += r.passed() ? ": pass (" : ": FAIL (";
    out += std::to_string(r.instances - r.failures) + "/" + std::to_string(r.instances) + ")\n";
  }
  return out;
}

}  // namespace causal
