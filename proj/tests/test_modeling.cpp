#include <gtest/gtest.h>

#include "causal/error.hpp"
#include "causal/eval.hpp"
#include "causal/laws.hpp"
#include "causal/modeling.hpp"
#include "causal/random_terms.hpp"
#include "causal/syntax.hpp"
#include "oracle.hpp"

using namespace causal;

namespace {

const TypeExpr A2 = TypeExpr::enumeration("A", 2);
const TypeExpr B2 = TypeExpr::enumeration("B", 2);
const TypeExpr X2 = TypeExpr::enumeration("X", 2);
const TypeExpr CODE = TypeExpr::code();

Rational q(long n, long d = 1) { return Rational(n, d); }

ErrorCode error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::SyntaxError;
}

Term constant_model(const Term& k) { return Term::constant(CODE, Event::of(serialize(k))); }

}  // namespace

TEST(Prediction, ConstantModelReproducesKernel) {
  Term k = Term::lit(A2, B2, {{q(1, 2), q(1, 2)}, {q(1, 3), q(2, 3)}});
  ParamModel p = ParamModel::make(constant_model(k));
  Term pred = prediction(p, A2, B2);
  EXPECT_EQ(typecheck(pred), (Signature{A2, B2}));
  EXPECT_EQ(eval(pred).matrix(), k.matrix());
}

TEST(Prediction, IdentityModelIsUniversalTester) {
  ParamModel p = ParamModel::make(Term::id(CODE));
  Term pred = prediction(p, A2, B2);
  EXPECT_EQ(typecheck(pred), (Signature{CODE * A2, B2}));
  TermGenerator gen(31);
  for (int i = 0; i < 20; ++i) {
    Term k = gen.term(A2, B2, 2);
    for (const auto& a : all_events(A2))
      EXPECT_EQ(run(pred, Event::of(serialize(k)) * a), run(k, a));
  }
}

TEST(Prediction, BadCodeGivesZero) {
  ParamModel p = ParamModel::make(Term::constant(CODE, Event::of(Code{"(lit broken"})));
  Kernel k = eval(prediction(p, A2, B2));
  for (const auto& a : all_events(A2)) EXPECT_EQ(k(a), SubDist::zero());
  ParamModel wrong = ParamModel::make(constant_model(Term::id(X2 * X2)));
  Kernel w = eval(prediction(wrong, A2, B2));
  for (const auto& a : all_events(A2)) EXPECT_EQ(w(a).mass(), 0);
}

TEST(Prediction, ModelMustProduceCode) {
  EXPECT_EQ(error_code([] { ParamModel::make(Term::id(X2)); }), ErrorCode::TypeMismatch);
}

TEST(Synthesize, RoundTripOnRandomKernels) {
  TermGenerator gen(32);
  for (int i = 0; i < 100; ++i) {
    TypeExpr a = gen.finite_type(), b = gen.finite_type();
    Kernel k = eval(gen.term(a, b, 3));
    Code c = synthesize_model(k);
    ParamModel p = ParamModel::make(Term::constant(CODE, Event::of(c)));
    EXPECT_TRUE(indistinguishable(eval(prediction(p, a, b)), k));
  }
}

TEST(Synthesize, RejectsCodeTypes) {
  EXPECT_EQ(error_code([] { synthesize_model(eval(Term::id(CODE))); }), ErrorCode::NotFinite);
}

TEST(Steer, IdentitySteeringLeavesModelAlone) {
  TermGenerator gen(33);
  TypeExpr y = TypeExpr::enumeration("Y", 3);
  ParamModel p = ParamModel::make(gen.model(y, A2, B2));
  ParamModel steered = steer(p, SteeringMap::make(Term::id(y)));
  EXPECT_TRUE(indistinguishable(eval(prediction(steered, A2, B2)), eval(prediction(p, A2, B2))));
}

TEST(Steer, PredictionCommutesWithSteering) {
  TermGenerator gen(34);
  for (int i = 0; i < 50; ++i) {
    TypeExpr x = gen.enum_type(1, 3), y = gen.enum_type(1, 3);
    ParamModel p = ParamModel::make(gen.model(y, A2, B2));
    Term s = Term::lit(x, y, gen.deterministic(x, y));
    ParamModel steered = steer(p, SteeringMap::make(s));
    Kernel lhs = eval(prediction(steered, A2, B2));
    Kernel rhs = eval(Term::seq(Term::par(s, Term::id(A2)), prediction(p, A2, B2)));
    EXPECT_TRUE(indistinguishable(lhs, rhs));
  }
}

TEST(Steer, ConstantSteeringPicksOneParameter) {
  Term model = parse(
      "(mix 1/2 (seq (lit (enum School 2) unit ((1) (1/4))) (const code (code \"(lit (enum A 2) (enum B 2) ((1 0) (0 1)))\")))"
      " (seq (lit (enum School 2) unit ((1/4) (1))) (const code (code \"(lit (enum A 2) (enum B 2) ((0 1) (1 0)))\"))))");
  ParamModel p = ParamModel::make(model);
  TypeExpr school = TypeExpr::enumeration("School", 2);
  ParamModel fixed = steer(p, SteeringMap::make(Term::constant(school, Event::of(1u))));
  EXPECT_EQ(fixed.param_type(), TypeExpr::unit());
  // School 1: 1/8 identity, 1/2 swap.
  EXPECT_EQ(eval(prediction(fixed, A2, B2)).matrix(), (Matrix{{q(1, 8), q(1, 2)}, {q(1, 2), q(1, 8)}}));
}

TEST(Steer, StochasticSteeringRejected) {
  Term s = Term::lit(X2, X2, {{q(1, 2), q(1, 2)}, {0, 1}});
  EXPECT_EQ(error_code([&] { SteeringMap::make(s); }), ErrorCode::NotAFunction);
  EXPECT_EQ(error_code([&] { SteeringMap::make(Term::lit(X2, X2, {{1, 0}, {0, 0}})); }), ErrorCode::NotAFunction);
}

TEST(Steer, TypeMismatch) {
  ParamModel p = ParamModel::make(Term::seq(Term::del(X2), constant_model(Term::id(A2))));
  TypeExpr y3 = TypeExpr::enumeration("Y", 3);
  EXPECT_EQ(error_code([&] { steer(p, SteeringMap::make(Term::id(y3))); }), ErrorCode::TypeMismatch);
}

TEST(Specialize, XorFixedAtOneIsNot) {
  Term xorp = Term::lit(X2 * X2, X2, {{1, 0}, {0, 1}, {0, 1}, {1, 0}});
  Code fixed = specialize(serialize(xorp), Event::of(1u));
  Term back = parse(fixed.text);
  EXPECT_EQ(typecheck(back), (Signature{X2, X2}));
  EXPECT_EQ(eval(back).matrix(), (Matrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(eval(back).matrix(), oracle::slice_rows(xorp.matrix(), 1, 2));
}

TEST(Specialize, IgnoredParameter) {
  Term k = Term::lit(A2, B2, {{q(1, 4), q(3, 4)}, {1, 0}});
  Term p = Term::par(Term::del(X2), k);
  for (std::uint32_t x : {0u, 1u})
    EXPECT_TRUE(indistinguishable(eval(parse(specialize(serialize(p), Event::of(x)).text)), eval(k)));
}

TEST(Specialize, AgreesWithApplyOnRandomPrograms) {
  TermGenerator gen(35);
  for (int i = 0; i < 50; ++i) {
    TypeExpr x = gen.enum_type(1, 3), a = gen.finite_type(), b = gen.finite_type();
    Term p = gen.term(x * a, b, 2);
    Code pc = serialize(p);
    for (const auto& xv : all_events(x)) {
      Code fixed = specialize(pc, xv);
      for (const auto& av : all_events(a)) {
        SubDist direct = run(Term::apply(x * a, b), Event::of(pc) * xv * av);
        EXPECT_EQ(run(Term::apply(a, b), Event::of(fixed) * av), direct);
      }
    }
  }
}

TEST(Specialize, RuntimeSpecMatchesLibrary) {
  Term p = Term::lit(X2 * X2, X2, {{1, 0}, {0, 1}, {0, 1}, {1, 0}});
  // spec's parameter is a code, so specialize a code-parametrized program.
  Term prog = Term::seq(Term::par(Term::del(CODE), Term::id(A2)), Term::id(A2));
  Code pc = serialize(prog);
  Code arg = serialize(p);
  SubDist out = run(Term::spec(), Event({Atom{pc}, Atom{arg}}));
  EXPECT_EQ(out, SubDist::point(Event::of(specialize(pc, Event::of(arg)))));
  // Programs without a leading code factor cannot be specialized at runtime.
  EXPECT_EQ(run(Term::spec(), Event({Atom{arg}, Atom{arg}})), SubDist::zero());
}

TEST(Specialize, Errors) {
  EXPECT_EQ(error_code([] { specialize(Code{"(id"}, Event::of(0u)); }), ErrorCode::BadCode);
  EXPECT_EQ(error_code([] { specialize(serialize(Term::constant(X2, Event::of(0u))), Event::of(0u)); }),
            ErrorCode::BadCode);
  Code idc = serialize(Term::id(X2 * X2));
  EXPECT_EQ(error_code([&] { specialize(idc, Event::of(2u)); }), ErrorCode::BadParam);
  EXPECT_EQ(error_code([&] { specialize(idc, Event::of(Code{"x"})); }), ErrorCode::BadParam);
  EXPECT_EQ(error_code([&] { specialize(idc, Event({Atom{0u}, Atom{0u}})); }), ErrorCode::BadParam);
}

TEST(Slicing, FusedParameterMatchesStagedSpecialization) {
  TermGenerator gen(36);
  for (int i = 0; i < 30; ++i) {
    TypeExpr y = gen.enum_type(1, 3), x = gen.enum_type(1, 3), a = gen.enum_type(1, 3), b = gen.enum_type(1, 3);
    Term p = gen.term(y * x * a, b, 2);
    Code pc = serialize(p);
    for (const auto& yv : all_events(y))
      for (const auto& xv : all_events(x)) {
        Kernel fused = eval(parse(specialize_prefix(pc, yv * xv).text));
        Kernel staged = eval(parse(specialize(specialize(pc, yv), xv).text));
        EXPECT_TRUE(indistinguishable(fused, staged));
        // Oracle: rows of p's matrix with (y, x) fixed.
        std::size_t block = a.event_count();
        std::size_t idx = event_index(yv * xv, y * x);
        EXPECT_EQ(fused.matrix(), oracle::slice_rows(eval(p).matrix(), idx, block));
      }
  }
}
