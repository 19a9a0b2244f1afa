#pragma once

#include <cstdint>
#include <random>

#include "causal/term.hpp"

namespace causal {

/// Seeded generator of well-typed random terms over small enums. Matrix
/// entries are drawn as j/8 for j in 0..8 and a row whose sum exceeds 1 is
/// divided by its sum, so all weights stay exact.
class TermGenerator {
 public:
  explicit TermGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  std::uint32_t between(std::uint32_t lo, std::uint32_t hi) {
    return lo + static_cast<std::uint32_t>(below(hi - lo + 1));
  }
  bool coin() { return below(2) == 1; }
  Rational eighth() {
    Rational r(static_cast<long>(below(9)), 8);
    r.canonicalize();
    return r;
  }

  /// Single enum factor of cardinality in [lo, hi].
  TypeExpr enum_type(std::uint32_t lo = 1, std::uint32_t hi = 4);
  /// One to max_arity enum factors.
  TypeExpr finite_type(std::size_t max_arity = 2, std::uint32_t max_card = 4);

  Matrix substochastic(const TypeExpr& dom, const TypeExpr& cod);
  /// Every row sums to exactly 1.
  Matrix stochastic(const TypeExpr& dom, const TypeExpr& cod);
  /// Rows are point masses (a function table).
  Matrix deterministic(const TypeExpr& dom, const TypeExpr& cod);

  Term lit(const TypeExpr& dom, const TypeExpr& cod) { return Term::lit(dom, cod, substochastic(dom, cod)); }

  /// Random finite term built from literals, data services, seq, par and mix.
  Term term(const TypeExpr& dom, const TypeExpr& cod, int depth = 2);

  /// param -> code model whose output distribution depends on the
  /// parameter through literal weights on constant codes of a -> b.
  Term model(const TypeExpr& param, const TypeExpr& a, const TypeExpr& b);

  /// code ⊗ a -> b process that never runs its model input.
  Term model_ignoring(const TypeExpr& a, const TypeExpr& b);

 private:
  std::mt19937_64 engine_;
};

}  // namespace causal
