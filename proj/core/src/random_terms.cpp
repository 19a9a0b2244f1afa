#include "causal/random_terms.hpp"

#include "causal/syntax.hpp"

namespace causal {

TypeExpr TermGenerator::enum_type(std::uint32_t lo, std::uint32_t hi) {
  return TypeExpr::enumeration("X", between(lo, hi));
}

TypeExpr TermGenerator::finite_type(std::size_t max_arity, std::uint32_t max_card) {
  TypeExpr t;
  std::size_t n = 1 + below(max_arity);
  for (std::size_t i = 0; i < n; ++i) t = t * enum_type(1, max_card);
  return t;
}

Matrix TermGenerator::substochastic(const TypeExpr& dom, const TypeExpr& cod) {
  std::size_t rows = dom.event_count();
  std::size_t cols = cod.event_count();
  Matrix m(rows, std::vector<Rational>(cols));
  for (auto& row : m) {
    Rational sum = 0;
    for (auto& w : row) {
      w = eighth();
      sum += w;
    }
    if (sum > 1)
      for (auto& w : row) w /= sum;
  }
  return m;
}

Matrix TermGenerator::stochastic(const TypeExpr& dom, const TypeExpr& cod) {
  Matrix m = substochastic(dom, cod);
  for (auto& row : m) {
    Rational sum = 0;
    for (const auto& w : row) sum += w;
    if (sum == 0) {
      row[below(row.size())] = 1;
      continue;
    }
    for (auto& w : row) w /= sum;
  }
  return m;
}

Matrix TermGenerator::deterministic(const TypeExpr& dom, const TypeExpr& cod) {
  std::size_t cols = cod.event_count();
  Matrix m(dom.event_count(), std::vector<Rational>(cols));
  for (auto& row : m) row[below(cols)] = 1;
  return m;
}

Term TermGenerator::term(const TypeExpr& dom, const TypeExpr& cod, int depth) {
  if (depth <= 0) {
    if (dom == cod && below(4) == 0) return Term::id(dom);
    if (cod.is_unit() && below(3) == 0) return Term::del(dom);
    if (cod == dom * dom && !dom.is_unit() && below(2) == 0) return Term::copy(dom);
    return lit(dom, cod);
  }
  switch (below(5)) {
    case 0: return lit(dom, cod);
    case 1: {
      if (!dom.is_unit() && dom.event_count() <= 4 && below(3) == 0)
        return Term::seq(Term::copy(dom), term(dom * dom, cod, depth - 1));
      TypeExpr mid = finite_type();
      return Term::seq(term(dom, mid, depth - 1), term(mid, cod, depth - 1));
    }
    case 2: {
      std::size_t i = below(dom.arity() + 1);
      std::size_t j = below(cod.arity() + 1);
      return Term::par(term(dom.slice(0, i), cod.slice(0, j), depth - 1),
                       term(dom.drop_front(i), cod.drop_front(j), depth - 1));
    }
    case 3:
      return Term::mix(eighth(), term(dom, cod, depth - 1), term(dom, cod, depth - 1));
    default: {
      if (dom.arity() >= 2) {
        std::size_t i = 1 + below(dom.arity() - 1);
        TypeExpr swapped = dom.drop_front(i) * dom.slice(0, i);
        return Term::seq(Term::swap(dom.slice(0, i), dom.drop_front(i)), term(swapped, cod, depth - 1));
      }
      return Term::seq(term(dom, dom, depth - 1), term(dom, cod, depth - 1));
    }
  }
}

Term TermGenerator::model(const TypeExpr& param, const TypeExpr& a, const TypeExpr& b) {
  auto branch = [&] {
    Code c = serialize(lit(a, b));
    return Term::seq(lit(param, TypeExpr::unit()), Term::constant(TypeExpr::code(), Event::of(c)));
  };
  Term out = branch();
  for (std::uint64_t n = below(3); n > 0; --n) out = Term::mix(eighth(), branch(), out);
  return out;
}

Term TermGenerator::model_ignoring(const TypeExpr& a, const TypeExpr& b) {
  TypeExpr omega = TypeExpr::code();
  Term body = term(a, b);
  switch (below(4)) {
    case 0: return Term::seq(Term::par(Term::del(omega), Term::id(a)), body);
    case 1: {
      // Specializes its model against itself, then discards the result.
      Term spin = Term::seq(Term::seq(Term::copy(omega), Term::spec()), Term::del(omega));
      return Term::seq(Term::par(spin, Term::id(a)), body);
    }
    case 2: {
      Term drop = Term::seq(Term::copy(omega), Term::par(Term::del(omega), Term::del(omega)));
      return Term::seq(Term::par(drop, term(a, a, 1)), body);
    }
    default:
      return Term::mix(eighth(), Term::seq(Term::par(Term::del(omega), Term::id(a)), body),
                       Term::seq(Term::par(Term::del(omega), Term::id(a)), term(a, b)));
  }
}

}  // namespace causal
