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

#include "oracles/canonical.hpp"
#include "qbtool/generators.hpp"
#include "quatbranch/quaternion.hpp"

namespace {

using qb::GF2Field;
using qb::Mat2;
using qb::PolyClass;
using qb::Series;

const GF2Field& F1() { return GF2Field::standard(1); }
Series S(const std::string& s) { return qb::parse_series(F1(), s); }
Mat2 M(const std::string& s, const GF2Field& f = F1()) { return qb::parse_mat2(f, s); }

TEST(Quaternion, BarExamples) {
  EXPECT_EQ(qb::bar(Mat2::identity(F1())), Mat2::identity(F1()));
  EXPECT_EQ(qb::bar(M("[[1, t],[t^2, t^3]]")), M("[[t^3, t],[t^2, 1]]"));
}

TEST(Quaternion, BarIdentitiesOnRandomMatrices) {
  for (int tau : {1, 2}) {
    const GF2Field& f = GF2Field::standard(tau);
    qbtool::InstanceGen gen(f, 31);
    for (int i = 0; i < 300; ++i) {
      const Mat2 a{gen.poly(-3, 3), gen.poly(-3, 3), gen.poly(-3, 3), gen.poly(-3, 3)};
      const Mat2 b{gen.poly(-3, 3), gen.poly(-3, 3), gen.poly(-3, 3), gen.poly(-3, 3)};
      ASSERT_EQ(a * qb::bar(a), Mat2::scalar(a.det()));
      ASSERT_EQ(a + qb::bar(a), Mat2::scalar(a.trace()));
      ASSERT_EQ(qb::bar(qb::bar(a)), a);
      ASSERT_EQ(qb::bar(a * b), qb::bar(b) * qb::bar(a));
      ASSERT_EQ(a * a + a * a.trace() + Mat2::scalar(a.det()), Mat2::zero(f));
    }
  }
}

TEST(Quaternion, SymmetricProductIsTheScalarOfTheMatrixForm) {
  qbtool::InstanceGen gen(GF2Field::standard(2), 32);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 a{gen.poly(-3, 3), gen.poly(-3, 3), gen.poly(-3, 3), gen.poly(-3, 3)};
    const Mat2 b{gen.poly(-3, 3), gen.poly(-3, 3), gen.poly(-3, 3), gen.poly(-3, 3)};
    const Series l = qb::sym_product(a, b);
    ASSERT_EQ(a * qb::bar(b) + b * qb::bar(a), Mat2::scalar(l));
    ASSERT_EQ(l, qb::sym_product(b, a));
    ASSERT_TRUE(qb::sym_product(a, a).is_zero());
    // linear in each argument
    const Mat2 c{gen.poly(-3, 3), gen.poly(-3, 3), gen.poly(-3, 3), gen.poly(-3, 3)};
    ASSERT_EQ(qb::sym_product(a + c, b), l + qb::sym_product(c, b));
  }
}

TEST(Quaternion, DiscriminantCollapsesWithoutLinearTerms) {
  const Series l = S("t^-1 + t");
  EXPECT_EQ(qb::discriminant(l, S("0"), S("t"), S("0"), S("1")), l.square());
}

TEST(Quaternion, DiscriminantShiftInvariance) {
  qbtool::InstanceGen gen(GF2Field::standard(2), 33);
  for (int i = 0; i < 300; ++i) {
    const Series l = gen.poly(-3, 3), a1 = gen.poly(0, 3), b1 = gen.poly(0, 3), a2 = gen.poly(0, 3),
                 b2 = gen.poly(0, 3);
    ASSERT_EQ(qb::discriminant(l, a1, b1, a2, b2), qb::discriminant(l + a1 * a2, a1, b1, a2, b2));
  }
}

TEST(Quaternion, CanonicalPairsReproduceClosedForms) {
  for (int tau : {1, 2}) {
    qbtool::InstanceGen gen(GF2Field::standard(tau), 34);
    for (int i = 0; i < 100; ++i) {
      for (const auto& row : canonical::rows(gen)) {
        ASSERT_EQ(qb::sym_product(row.q1, row.q2), row.lambda) << row.name;
        ASSERT_EQ(canonical::row_discriminant(row), row.delta) << row.name;
      }
    }
  }
}

TEST(Quaternion, MinPolyExamples) {
  qb::QuadPoly m = qb::min_poly(M("[[0,1],[0,0]]"));
  EXPECT_EQ(m.cls, PolyClass::ReducibleInsep);
  EXPECT_TRUE(m.a.is_zero());
  EXPECT_TRUE(m.b.is_zero());
  m = qb::min_poly(M("[[0,t],[1,0]]"));
  EXPECT_EQ(m.cls, PolyClass::RamInsep);
  EXPECT_EQ(m.t, 0);
  m = qb::min_poly(M("[[1,0],[t,0]]"));
  EXPECT_EQ(m.cls, PolyClass::ReducibleSep);
  EXPECT_EQ(m.a, S("1"));
  EXPECT_TRUE(m.b.is_zero());
  EXPECT_THROW(qb::min_poly(Mat2::identity(F1())), qb::ScalarMatrixError);
  EXPECT_THROW(qb::min_poly(M("[[t^-1,0],[0,0]]")), qb::NonIntegralError);
}

TEST(Quaternion, MakePairExamples) {
  EXPECT_EQ(qb::make_pair(M("[[0,1],[0,0]]"), M("[[0,0],[1,0]]")).lambda, S("1"));
  const Series a1 = S("t"), al1 = S("1 + t"), a2 = S("1"), al2 = S("t^2");
  const Mat2 q1{a1 + al1, S("0"), S("0"), al1};
  const Mat2 q2{a2 + al2, S("0"), S("0"), al2};
  EXPECT_EQ(qb::make_pair(q1, q2).lambda, a1 * al2 + a2 * al1);
  EXPECT_TRUE(qb::make_pair(q1, q1).lambda.is_zero());
  EXPECT_THROW(qb::make_pair(q1, Mat2::identity(F1())), qb::ScalarMatrixError);
}

TEST(Quaternion, MatrixGrammarRoundTrip) {
  const GF2Field& f = GF2Field::standard(3);
  qbtool::InstanceGen gen(f, 35);
  for (int i = 0; i < 300; ++i) {
    const Mat2 q{gen.poly(-4, 4), gen.poly(-4, 4), gen.poly(-4, 4), gen.poly(-4, 4)};
    ASSERT_EQ(M(q.to_string(), f), q);
  }
  EXPECT_THROW(M("[[1, 0],[0]]"), qb::ParseError);
}

}  // namespace
