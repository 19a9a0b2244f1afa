#include <gtest/gtest.h>

#include "causal/error.hpp"
#include "causal/event.hpp"
#include "causal/random_terms.hpp"
#include "causal/type.hpp"

using namespace causal;

namespace {

RawType base(const TypeExpr& t) { return RawType(t[0]); }

}  // namespace

TEST(NormalizeType, UnitIsLeftAndRightIdentity) {
  TypeExpr x = TypeExpr::enumeration("X", 2);
  RawType unit{RawType::Unit{}};
  EXPECT_EQ(normalize_type(RawType::tensor(unit, base(x))), x);
  EXPECT_EQ(normalize_type(RawType::tensor(base(x), unit)), x);
}

TEST(NormalizeType, FlattensAssociativity) {
  TypeExpr a = TypeExpr::enumeration("A", 2), b = TypeExpr::enumeration("B", 3), c = TypeExpr::code();
  TypeExpr left = normalize_type(RawType::tensor(RawType::tensor(base(a), base(b)), base(c)));
  TypeExpr right = normalize_type(RawType::tensor(base(a), RawType::tensor(base(b), base(c))));
  EXPECT_EQ(left, right);
  EXPECT_EQ(left.arity(), 3u);
  EXPECT_EQ(left, a * b * c);
}

TEST(NormalizeType, UnitTensorUnitIsUnit) {
  RawType unit{RawType::Unit{}};
  TypeExpr t = normalize_type(RawType::tensor(unit, unit));
  EXPECT_TRUE(t.is_unit());
  EXPECT_EQ(to_string(t), "unit");
}

TEST(NormalizeType, IsMonoidHomomorphismOnRandomNestings) {
  TermGenerator gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    // Random binary bracketing of a random factor list, with units sprinkled in.
    std::vector<TypeExpr> parts;
    for (std::uint64_t n = 1 + gen.below(5); n > 0; --n)
      parts.push_back(gen.coin() ? gen.enum_type() : TypeExpr::unit());
    TypeExpr expected;
    for (const auto& p : parts) expected = expected * p;

    std::vector<RawType> raws;
    for (const auto& p : parts) raws.push_back(p.is_unit() ? RawType(RawType::Unit{}) : base(p));
    while (raws.size() > 1) {
      std::size_t i = gen.below(raws.size() - 1);
      raws[i] = RawType::tensor(raws[i], raws[i + 1]);
      raws.erase(raws.begin() + static_cast<std::ptrdiff_t>(i + 1));
    }
    EXPECT_EQ(normalize_type(raws[0]), expected);
  }
}

TEST(TypeExpr, EventCountAndFiniteness) {
  TypeExpr t = TypeExpr::enumeration("A", 2) * TypeExpr::enumeration("B", 3);
  EXPECT_TRUE(t.is_finite());
  EXPECT_EQ(t.event_count(), 6u);
  EXPECT_EQ(TypeExpr::unit().event_count(), 1u);
  TypeExpr omega = TypeExpr::code() * t;
  EXPECT_FALSE(omega.is_finite());
  EXPECT_TRUE(omega.leads_with_code());
  try {
    (void)omega.event_count();
    FAIL() << "expected NotFinite";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFinite);
  }
}

TEST(TypeExpr, ZeroCardinalityRejected) {
  EXPECT_THROW(TypeExpr::enumeration("Z", 0), Error);
}

TEST(TypeExpr, CanonicalTextIsRightNested) {
  TypeExpr t = TypeExpr::enumeration("A", 2) * TypeExpr::code() * TypeExpr::enumeration("C", 1);
  EXPECT_EQ(to_string(t), "(tensor (enum A 2) (tensor code (enum C 1)))");
}

TEST(Event, RowMajorIndexing) {
  TypeExpr t = TypeExpr::enumeration("A", 2) * TypeExpr::enumeration("U", 3);
  // (a, u) -> a * |U| + u
  EXPECT_EQ(event_index(Event({Atom{1u}, Atom{2u}}), t), 5u);
  EXPECT_EQ(event_index(Event({Atom{0u}, Atom{1u}}), t), 1u);
  auto all = all_events(t);
  ASSERT_EQ(all.size(), 6u);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(event_index(all[i], t), i);
    EXPECT_EQ(event_at(i, t), all[i]);
  }
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Event, Inhabitation) {
  TypeExpr t = TypeExpr::code() * TypeExpr::enumeration("A", 2);
  EXPECT_TRUE(inhabits(Event({Atom{Code{"x"}}, Atom{1u}}), t));
  EXPECT_FALSE(inhabits(Event({Atom{Code{"x"}}, Atom{2u}}), t));
  EXPECT_FALSE(inhabits(Event({Atom{1u}, Atom{1u}}), t));
  EXPECT_FALSE(inhabits(Event::of(1u), t));
  EXPECT_TRUE(inhabits(Event::unit(), TypeExpr::unit()));
  EXPECT_THROW(event_index(Event::of(4u), TypeExpr::enumeration("A", 2)), Error);
}

TEST(Event, CanonicalText) {
  EXPECT_EQ(to_string(Event::unit()), "unit");
  EXPECT_EQ(to_string(Event::of(3u)), "3");
  EXPECT_EQ(to_string(Event({Atom{1u}, Atom{Code{"a\"b\\"}}, Atom{0u}})),
            "(pair 1 (pair (code \"a\\\"b\\\\\") 0))");
}
