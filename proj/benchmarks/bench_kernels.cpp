#include <benchmark/benchmark.h>

#include "causal/eval.hpp"
#include "causal/fixpoint.hpp"
#include "causal/random_terms.hpp"
#include "causal/syntax.hpp"

namespace {

using namespace causal;

void BM_KernelSeq(benchmark::State& state) {
  TermGenerator gen(1);
  auto n = static_cast<std::uint32_t>(state.range(0));
  TypeExpr t = TypeExpr::enumeration("X", n);
  Kernel a = eval(gen.lit(t, t));
  Kernel b = eval(gen.lit(t, t));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_seq(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KernelSeq)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_KernelPar(benchmark::State& state) {
  TermGenerator gen(2);
  auto n = static_cast<std::uint32_t>(state.range(0));
  TypeExpr t = TypeExpr::enumeration("X", n);
  Kernel a = eval(gen.lit(t, t));
  Kernel b = eval(gen.lit(t, t));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_par(a, b));
}
BENCHMARK(BM_KernelPar)->RangeMultiplier(2)->Range(2, 8);

void BM_ParseSerialize(benchmark::State& state) {
  TermGenerator gen(3);
  TypeExpr a = gen.finite_type(), b = gen.finite_type();
  Code c = serialize(gen.term(a, b, 3));
  for (auto _ : state) benchmark::DoNotOptimize(serialize(parse(c.text)));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * c.text.size()));
}
BENCHMARK(BM_ParseSerialize);

// Mixing process whose right side unfolds one apply per unit of fuel.
void BM_FixpointVerify(benchmark::State& state) {
  TypeExpr a = TypeExpr::enumeration("A", 2), b = TypeExpr::enumeration("B", 2);
  Term base = Term::lit(a, b, {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 3), Rational(2, 3)}});
  Term q = Term::mix(Rational(1, 2), Term::apply(a, b),
                     Term::seq(Term::par(Term::del(TypeExpr::code()), Term::id(a)), base));
  FixpointResult built = build_self_confirming(serialize(q));
  Fuel fuel{static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(verify_self_confirming(built, fuel, Rational(1)));
}
BENCHMARK(BM_FixpointVerify)->RangeMultiplier(2)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
