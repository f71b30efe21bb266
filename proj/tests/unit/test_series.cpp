// Copyright 2026 The quatbranch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "qbtool/generators.hpp"
#include "quatbranch/series.hpp"

namespace {

using qb::GF2Field;
using qb::Series;

const GF2Field& F1() { return GF2Field::standard(1); }
Series S(const std::string& s, const GF2Field& f = F1()) { return qb::parse_series(f, s); }

TEST(Series, MonomialInverseIsExact) {
  const Series x = S("t").inv();
  EXPECT_TRUE(x.is_exact());
  EXPECT_EQ(x, S("t^-1"));
}

TEST(Series, FrobeniusCrossTermsCancel) { EXPECT_EQ(S("1 + t") * S("1 + t"), S("1 + t^2")); }

TEST(Series, ValuationOfUniformizer) { EXPECT_EQ(S("t").val(), 1); }

TEST(Series, SqrtExamples) {
  EXPECT_EQ(*S("t^2").sqrt(), S("t"));
  EXPECT_FALSE(S("t").sqrt().has_value());
  EXPECT_EQ(*S("1 + t^2 + t^4").sqrt(), S("1 + t + t^2"));
  EXPECT_THROW(S("1 + t^2 (mod t^5)").sqrt(), qb::PrecisionError);
}

TEST(Series, GrammarRendersCanonically) {
  const GF2Field& f2 = GF2Field::standard(2);
  const Series x = S("t^-3 + 1 + g*t^2", f2);
  EXPECT_EQ(x.to_string(), "t^-3 + 1 + g*t^2");
  EXPECT_EQ(S(x.to_string(), f2), x);
  const Series y = S("t + t^3 (mod t^6)");
  EXPECT_EQ(y.prec(), 6);
  EXPECT_EQ(S(y.to_string()), y);
  EXPECT_THROW(S("t^"), qb::ParseError);
}

TEST(Series, ZeroCarriesPrecision) {
  const Series a = S("t (mod t^4)");
  const Series z = a + a;
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.is_exact());
  EXPECT_EQ(z.val(), 4);
  EXPECT_TRUE(Series::zero(F1()).is_exact());
}

TEST(Series, PrecisionPropagation) {
  const Series a = S("1 + t (mod t^5)");
  const Series b = S("t^-2");
  EXPECT_EQ((a + b).prec(), 5);
  EXPECT_EQ((a * b).prec(), 3);           // exact factor adds its valuation
  EXPECT_TRUE((b * b).is_exact());        // exact times exact stays exact
  EXPECT_EQ(a.square().prec(), 10);
  EXPECT_THROW(S("0 (mod t^3)").inv(), qb::PrecisionError);
}

// Properties over random exact pairs, multiplication checked against the
// packed-word oracle.
TEST(Series, FieldAxiomsOnRandomPairs) {
  for (int tau : {1, 2, 3}) {
    const GF2Field& f = GF2Field::standard(tau);
    qbtool::InstanceGen gen(f, 11 + static_cast<std::uint64_t>(tau));
    for (int i = 0; i < 1000; ++i) {
      const Series a = gen.poly(-6, 6);
      const Series b = gen.poly(-6, 6);
      ASSERT_EQ((a + b) + b, a);
      if (!a.is_zero() && !b.is_zero()) {
        ASSERT_EQ((a * b).val(), a.val() + b.val());
        const Series back = (a * b) * b.inv();
        ASSERT_TRUE(back.equal_mod(a, back.prec()));
      }
      if (a.val() != b.val() && !(a.is_zero() && b.is_zero())) {
        ASSERT_EQ((a + b).val(), std::min(a.val(), b.val()));
      } else if (!(a + b).is_zero()) {
        ASSERT_GE((a + b).val(), std::min(a.val(), b.val()));
      }
      if (tau == 1) ASSERT_EQ((oracle::Bits::from(a) * oracle::Bits::from(b)).to_series(f), a * b);
      if (auto r = a.sqrt()) ASSERT_EQ(*r * *r, a);
    }
  }
}

TEST(Series, EvenOddSplit) {
  qbtool::InstanceGen gen(GF2Field::standard(2), 5);
  for (int i = 0; i < 200; ++i) {
    const Series x = gen.poly(-5, 9);
    Series e, o;
    x.split_even_odd(&e, &o);
    ASSERT_EQ(e.square() + o.square().shift(1), x);
  }
}

TEST(Series, RoundTripRandom) {
  for (int tau : {1, 2, 4}) {
    const GF2Field& f = GF2Field::standard(tau);
    qbtool::InstanceGen gen(f, 3);
    for (int i = 0; i < 300; ++i) {
      Series x = gen.poly(-8, 8);
      if (i % 3 == 0) x = x.truncate(gen.uniform(-2, 12));
      ASSERT_EQ(S(x.to_string(), f), x) << x.to_string();
    }
  }
}

}  // namespace
