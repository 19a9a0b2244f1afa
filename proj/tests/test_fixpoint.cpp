#include <gtest/gtest.h>

#include "causal/error.hpp"
#include "causal/fixpoint.hpp"
#include "causal/modeling.hpp"
#include "causal/random_terms.hpp"
#include "causal/syntax.hpp"

using namespace causal;

namespace {

const TypeExpr A2 = TypeExpr::enumeration("A", 2);
const TypeExpr B2 = TypeExpr::enumeration("B", 2);
const TypeExpr CODE = TypeExpr::code();

Rational q(long n, long d = 1) { return Rational(n, d); }

const Matrix kK{{q(1, 2), q(1, 2)}, {q(1, 3), q(2, 3)}};

Term k_term() { return Term::lit(A2, B2, kK); }
Term ignoring() { return Term::seq(Term::par(Term::del(CODE), Term::id(A2)), k_term()); }
Term amplifier() {
  return Term::seq(Term::apply(A2, B2), Term::lit(B2, B2, {{q(1, 2), q(1, 2)}, {q(1, 4), q(3, 4)}}));
}
Term mixing() { return Term::mix(q(1, 2), Term::apply(A2, B2), ignoring()); }

// Geometric oracle: row a of k scaled by s.
SubDist scaled_row(std::size_t a, const Rational& s) {
  SubDist::Support w;
  for (std::uint32_t b = 0; b < 2; ++b)
    if (kK[a][b] * s != 0) w[Event::of(b)] = kK[a][b] * s;
  return SubDist::from(w);
}

}  // namespace

TEST(Fixpoint, ConstructionShapes) {
  FixpointResult r = build_self_confirming(serialize(ignoring()));
  EXPECT_EQ(r.arg, A2);
  EXPECT_EQ(r.result, B2);
  Term g = parse(r.g.text);
  EXPECT_EQ(typecheck(g), (Signature{CODE * A2, B2}));
  Term gamma = parse(r.gamma.text);
  EXPECT_EQ(typecheck(gamma), (Signature{A2, B2}));
  EXPECT_EQ(r.gamma, specialize(r.g, Event::of(r.g)));
}

TEST(Fixpoint, GammaIsRuntimeSpecOfGWithItself) {
  for (const Term& q : {ignoring(), amplifier(), mixing()}) {
    FixpointResult r = build_self_confirming(serialize(q));
    SubDist spec = run(Term::spec(), Event({Atom{r.g}, Atom{r.g}}));
    EXPECT_EQ(spec, SubDist::point(Event::of(r.gamma)));
  }
}

TEST(Fixpoint, GammaUnfoldsThroughG) {
  // [[Gamma]](a) = [[G]](G, a) = q(Spec(G, G), a) = q(Gamma, a), with the
  // fuel bookkeeping made explicit: each apply costs one unit.
  FixpointResult r = build_self_confirming(serialize(mixing()));
  Term q = parse(r.q.text);
  for (std::uint64_t n = 1; n < 8; ++n)
    for (const auto& a : all_events(A2)) {
      SubDist via_gamma = run(Term::apply(A2, B2), Event::of(r.gamma) * a, Fuel{n});
      SubDist via_g = run(Term::apply(CODE * A2, B2), Event::of(r.g) * Event::of(r.g) * a, Fuel{n});
      SubDist via_q = run(q, Event::of(r.gamma) * a, Fuel{n - 1});
      EXPECT_EQ(via_gamma, via_g);
      EXPECT_EQ(via_gamma, via_q);
    }
}

TEST(Fixpoint, GammaDoesNotDependOnFuel) {
  FixpointResult r = build_self_confirming(serialize(mixing()));
  for (std::uint64_t n : {1u, 5u, 64u}) {
    SubDist s = run(Term::spec(), Event({Atom{r.g}, Atom{r.g}}), Fuel{n});
    EXPECT_EQ(s, SubDist::point(Event::of(r.gamma)));
  }
}

TEST(Fixpoint, ModelIgnoringIsExact) {
  FixpointResult r = verify_self_confirming(build_self_confirming(serialize(ignoring())), Fuel{}, 0);
  EXPECT_TRUE(r.verified);
  ASSERT_EQ(r.report.size(), 2u);
  for (std::size_t a = 0; a < 2; ++a) {
    EXPECT_TRUE(r.report[a].exact);
    EXPECT_EQ(r.report[a].left, scaled_row(a, 1));
    EXPECT_EQ(r.report[a].right, scaled_row(a, 1));
  }
}

TEST(Fixpoint, AmplifierHasNoMass) {
  FixpointResult r = verify_self_confirming(build_self_confirming(serialize(amplifier())), Fuel{}, 0);
  EXPECT_TRUE(r.verified);
  for (const auto& p : r.report) {
    EXPECT_TRUE(p.exact);
    EXPECT_EQ(p.left.mass(), 0);
    EXPECT_EQ(p.right.mass(), 0);
  }
}

TEST(Fixpoint, MixingConvergesGeometrically) {
  FixpointResult base = build_self_confirming(serialize(mixing()));
  for (unsigned n = 1; n <= 12; ++n) {
    FixpointResult r = verify_self_confirming(base, Fuel{n}, inverse_power_of_two(n));
    for (std::size_t a = 0; a < 2; ++a) {
      const ProbeReport& p = r.report[a];
      EXPECT_EQ(p.left, scaled_row(a, 1 - inverse_power_of_two(n + 1))) << n;
      EXPECT_EQ(p.right, scaled_row(a, 1 - inverse_power_of_two(n))) << n;
      Rational largest = kK[a][0] > kK[a][1] ? kK[a][0] : kK[a][1];
      EXPECT_EQ(p.discrepancy, inverse_power_of_two(n + 1) * largest);
      EXPECT_EQ(p.doubled_discrepancy, inverse_power_of_two(2 * n + 1) * largest);
      EXPECT_FALSE(p.exact);
    }
    EXPECT_TRUE(r.verified);
  }
}

TEST(Fixpoint, MixingFailsAtTightEpsilon) {
  FixpointResult r = verify_self_confirming(build_self_confirming(serialize(mixing())), Fuel{4}, 0);
  EXPECT_FALSE(r.verified);
}

TEST(Fixpoint, RandomModelIgnoringProcessesAreExact) {
  TermGenerator gen(41);
  for (int i = 0; i < 25; ++i) {
    TypeExpr a = gen.finite_type(), b = gen.finite_type();
    Term q = gen.model_ignoring(a, b);
    FixpointResult r = verify_self_confirming(build_self_confirming(serialize(q)), Fuel{}, 0);
    EXPECT_TRUE(r.verified) << serialize(q).text;
  }
}

TEST(Fixpoint, Errors) {
  try {
    build_self_confirming(Code{"(seq"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadCode);
  }
  try {
    build_self_confirming(serialize(k_term()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongSignature);
  }
  FixpointResult r = build_self_confirming(serialize(Term::id(CODE * CODE)));
  try {
    verify_self_confirming(r, Fuel{}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFinite);
  }
}

TEST(Fixpoint, ReportFormat) {
  FixpointResult r = verify_self_confirming(build_self_confirming(serialize(mixing())), Fuel{2}, q(1, 4));
  EXPECT_EQ(format_report(r),
            "a | L-mass | R-mass | max-entry-discrepancy | exact?\n"
            "0 | 7/8 | 3/4 | 1/16 | no\n"
            "1 | 7/8 | 3/4 | 1/12 | no\n");
}
