#include "causal/fixpoint.hpp"

#include "causal/error.hpp"
#include "causal/modeling.hpp"
#include "causal/syntax.hpp"

namespace causal {

FixpointResult build_self_confirming(const Code& q) {
  Term process = [&] {
    try {
      return parse(q.text);
    } catch (const Error& e) {
      throw Error(ErrorCode::BadCode, "cannot load q: " + std::string(e.what()));
    }
  }();
  if (!process.dom().leads_with_code())
    throw Error(ErrorCode::WrongSignature,
                "q must take a model first, got domain " + to_string(process.dom()));

  FixpointResult r;
  r.q = serialize(process);
  r.arg = process.dom().drop_front(1);
  r.result = process.cod();

  Term self_apply = Term::seq(Term::copy(TypeExpr::code()), Term::spec());
  r.g = serialize(Term::seq(Term::par(self_apply, Term::id(r.arg)), process));
  r.gamma = specialize(r.g, Event::of(r.g));
  return r;
}

FixpointResult verify_self_confirming(FixpointResult r, Fuel fuel, const Rational& epsilon) {
  if (!r.arg.is_finite())
    throw Error(ErrorCode::NotFinite, "cannot enumerate probes of " + to_string(r.arg));

  Term process = parse(r.q.text);
  Term testing = Term::apply(r.arg, r.result);
  Event model = Event::of(r.gamma);
  Fuel doubled{fuel.budget * 2};

  r.report.clear();
  bool all_exact = true;
  bool within = true;
  bool shrinking = true;
  for (const auto& a : all_events(r.arg)) {
    ProbeReport p;
    p.input = a;
    p.left = run(process, model * a, fuel);
    p.right = run(testing, model * a, fuel);
    p.discrepancy = max_discrepancy(p.left, p.right);
    p.exact = p.left == p.right;
    if (!p.exact) {
      p.doubled_discrepancy =
          max_discrepancy(run(process, model * a, doubled), run(testing, model * a, doubled));
      all_exact = false;
      if (p.discrepancy > epsilon) within = false;
      if (!(p.doubled_discrepancy < p.discrepancy)) shrinking = false;
    }
    r.report.push_back(std::move(p));
  }
  r.verified = all_exact || (within && shrinking);
  return r;
}

std::string format_report(const FixpointResult& r) {
  std::string out = "a | L-mass | R-mass | max-entry-discrepancy | exact?\n";
  for (const auto& p : r.report) {
    out += to_string(p.input) + " | " + to_string(p.left.mass()) + " | " + to_string(p.right.mass()) +
           " | " + to_string(p.discrepancy) + " | " + (p.exact ? "yes" : "no") + "\n";
  }
  return out;
}

}  // namespace causal
