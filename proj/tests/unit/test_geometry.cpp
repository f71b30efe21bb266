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
#include "quatbranch/geometry.hpp"

namespace {

using qb::BranchShape;
using qb::GF2Field;
using qb::HalfInt;
using qb::Mat2;
using qb::PolyClass;
using qb::RelKind;
using qb::Series;
using qb::StemKind;
using qb::Verdict;

const GF2Field& F1() { return GF2Field::standard(1); }
Series S(const std::string& s) { return qb::parse_series(F1(), s); }
Mat2 M(const std::string& s) { return qb::parse_mat2(F1(), s); }

TEST(HalfInt, ArithmeticAndOrder) {
  EXPECT_EQ(HalfInt::from_twice(3) + HalfInt::from_twice(-1), HalfInt::of(1));
  EXPECT_EQ(-HalfInt::neg_inf(), HalfInt::two_inf());
  EXPECT_LT(HalfInt::neg_inf(), HalfInt::of(-100));
  EXPECT_LT(HalfInt::of(100), HalfInt::pos_inf());
  EXPECT_LT(HalfInt::pos_inf(), HalfInt::two_inf());
  EXPECT_TRUE(HalfInt::of(2).is_integer());
  EXPECT_FALSE(HalfInt::from_twice(1).is_integer());
}

TEST(HalfInt, TextRoundTrip) {
  for (long long t = -9; t <= 9; ++t) {
    const HalfInt h = HalfInt::from_twice(t);
    EXPECT_EQ(HalfInt::parse(h.to_string()), h);
  }
  EXPECT_EQ(HalfInt::from_twice(-1).to_string(), "-1/2");
  for (const HalfInt& h : {HalfInt::neg_inf(), HalfInt::pos_inf(), HalfInt::two_inf()})
    EXPECT_EQ(HalfInt::parse(h.to_string()), h);
  EXPECT_FALSE(HalfInt::parse("1/3").has_value());
}

TEST(BranchShape, NilpotentFoliageAtInfinity) {
  for (int t = 0; t <= 3; ++t) {
    for (const char* alpha : {"0", "1", "1 + t^2"}) {
      const Mat2 q = Mat2{S("0"), Series::monomial(F1(), 1, t), S("0"), S("0")} + S(alpha);
      const BranchShape s = qb::branch_shape(q);
      ASSERT_TRUE(s.is_foliage());
      EXPECT_TRUE(s.end1.inf);
      EXPECT_EQ(s.leaf_level, t);
      EXPECT_EQ(qb::stem_length(s), HalfInt::pos_inf());
    }
  }
}

TEST(BranchShape, IdempotentIsAPath) {
  const BranchShape s = qb::branch_shape(M("[[1,0],[0,0]]"));
  ASSERT_FALSE(s.is_foliage());
  EXPECT_EQ(s.stem_kind, StemKind::BiInfinitePath);
  EXPECT_EQ(s.depth, 0);
  EXPECT_EQ(qb::stem_length(s), HalfInt::two_inf());
  const bool ends = (s.end1.inf && !s.end2.inf && s.end2.x.is_zero()) ||
                    (s.end2.inf && !s.end1.inf && s.end1.x.is_zero());
  EXPECT_TRUE(ends);
}

// Frozen from the oracle at radius 6: edge stem B_0^[0] -- B_0^[1], depth 0.
TEST(BranchShape, InseparableRamifiedEdge) {
  const Mat2 q = M("[[0,t],[1,0]]");
  const BranchShape s = qb::branch_shape(q);
  EXPECT_EQ(s.cls, PolyClass::RamInsep);
  EXPECT_EQ(s.stem_kind, StemKind::Edge);
  EXPECT_EQ(s.depth, 0);
  const qb::TreeOracle orc(F1(), 6, 2);
  const qb::MeasuredShape m = orc.measure_branch(q);
  ASSERT_EQ(m.kind, qb::MeasuredKind::Thick);
  EXPECT_EQ(m.depth, 0);
  ASSERT_EQ(m.stem.size(), 2u);
  EXPECT_EQ(qb::compare_shape(s, m, orc.window()).verdict, Verdict::Match);
}

TEST(BranchShape, DepthFormulasByClass) {
  qbtool::InstanceGen gen(F1(), 51);
  for (int i = 0; i < 300; ++i) {
    const Mat2 q = gen.with_class(static_cast<PolyClass>(i % 5));
    const qb::QuadPoly m = qb::min_poly(q);
    const BranchShape s = qb::branch_shape(q);
    ASSERT_EQ(s.cls, m.cls);
    switch (m.cls) {
      case PolyClass::UnramSep:
        ASSERT_EQ(s.stem_kind, StemKind::Vertex);
        ASSERT_EQ(s.depth, m.a.val());
        break;
      case PolyClass::RamSep:
        ASSERT_EQ(s.stem_kind, StemKind::Edge);
        ASSERT_EQ(s.depth, m.a.val() - m.t);
        ASSERT_GE(s.depth, 0);
        break;
      case PolyClass::RamInsep:
        ASSERT_EQ(s.stem_kind, StemKind::Edge);
        ASSERT_EQ(s.depth, m.t);
        break;
      case PolyClass::ReducibleSep:
        ASSERT_EQ(s.stem_kind, StemKind::BiInfinitePath);
        ASSERT_EQ(s.depth, m.a.val());
        break;
      case PolyClass::ReducibleInsep:
        ASSERT_TRUE(s.is_foliage());
        break;
    }
  }
}

TEST(FakeDistance, OppositeFoliages) {
  for (int s = -3; s <= 3; ++s) {
    const Mat2 q1 = canonical::A1(S("1 + t"), S("0"));
    const Mat2 q2 = canonical::A2(Series::monomial(F1(), 1, -s) * S("1 + t^2"), S("1"));
    const qb::PairConfig pc = qb::make_pair(q1, q2);
    EXPECT_EQ(qb::fake_distance(pc.lambda, pc.m1, pc.m2), HalfInt::of(s));
  }
}

TEST(FakeDistance, VanishingDiscriminant) {
  const qb::PairConfig pc = qb::make_pair(M("[[1,0],[0,0]]"), M("[[t,0],[0,0]]"));
  EXPECT_TRUE(pc.delta.is_zero());
  EXPECT_EQ(qb::fake_distance(pc.lambda, pc.m1, pc.m2), HalfInt::neg_inf());
}

// Frozen: the oracle measures distance 1 for this pair at radius 8.
TEST(FakeDistance, SplitAgainstRamifiedSeparable) {
  const Mat2 q1 = M("[[1,0],[0,0]]");
  const Mat2 q2 = M("[[t^-1, t^-2 + 1 + t],[1, t^-1 + t]]");
  const qb::PairConfig pc = qb::make_pair(q1, q2);
  ASSERT_EQ(pc.m2.cls, PolyClass::RamSep);
  ASSERT_EQ(pc.m2.t, 1);
  const long long base = -(pc.delta.val() - 2LL * pc.m1.a.val() - 2LL * pc.m2.a.val());
  const HalfInt df = qb::fake_distance(pc.lambda, pc.m1, pc.m2);
  EXPECT_EQ(df, HalfInt::from_twice(base - 2));
  EXPECT_EQ(df, HalfInt::of(1));
  const qb::TreeOracle orc(F1(), 8, 2);
  const qb::IntersectionMeasurement m = orc.measure_intersection(q1, q2);
  EXPECT_EQ(m.rel, qb::MeasuredRel::Disjoint);
  EXPECT_EQ(m.distance, 1);
}

TEST(FakeDistance, ShiftInvariance) {
  qbtool::InstanceGen gen(F1(), 52);
  for (int i = 0; i < 200; ++i) {
    const auto [q1, q2] = gen.pair();
    const qb::PairConfig pc = qb::make_pair(q1, q2);
    ASSERT_EQ(qb::fake_distance(pc.lambda, pc.m1, pc.m2),
              qb::fake_distance(pc.lambda + pc.m1.a * pc.m2.a, pc.m1, pc.m2));
  }
}

TEST(RelPos, Examples) {
  const Mat2 w = M("[[1,0],[t,0]]");
  EXPECT_EQ(qb::predict_relpos(qb::make_pair(w, w)).kind, RelKind::SharedMaxPath);
  EXPECT_EQ(qb::predict_relpos(qb::make_pair(M("[[1,0],[0,0]]"), M("[[1,1],[0,0]]"))).kind, RelKind::SharedRay);

  for (int s = 1; s <= 3; ++s) {
    const Mat2 q2 = canonical::A2(Series::monomial(F1(), 1, -s), S("0"));
    const qb::RelPos rp = qb::predict_relpos(qb::make_pair(M("[[0,1],[0,0]]"), q2));
    EXPECT_EQ(rp.kind, RelKind::Disjoint);
    EXPECT_EQ(rp.value, HalfInt::of(s));
  }

  const qb::RelPos meet = qb::predict_relpos(qb::make_pair(M("[[0,1],[0,0]]"), M("[[0,0],[1,0]]")));
  EXPECT_EQ(meet.kind, RelKind::FoliageMeet);
  EXPECT_EQ(meet.diameter, 0);
  EXPECT_EQ(meet.depth, 0);
  EXPECT_FALSE(meet.stem_is_edge);
  EXPECT_EQ(qb::predict_relpos(qb::make_pair(M("[[0,1],[0,0]]"), M("[[1,t],[0,1]]"))).kind,
            RelKind::FoliageContained);
}

TEST(RelPos, FoliageMeetInvariants) {
  qbtool::InstanceGen gen(F1(), 53);
  for (int i = 0; i < 200; ++i) {
    const Mat2 q1 = qb::conjugate(gen.conjugator(), gen.with_class(PolyClass::ReducibleInsep));
    const Mat2 q2 = qb::conjugate(gen.conjugator(), gen.with_class(PolyClass::ReducibleInsep));
    const qb::RelPos rp = qb::predict_relpos(qb::make_pair(q1, q2));
    if (rp.kind != RelKind::FoliageMeet) continue;
    ASSERT_EQ(rp.depth, rp.diameter / 2);
    ASSERT_EQ(rp.stem_is_edge, rp.diameter % 2 != 0);
  }
}

TEST(RelPos, ConjugationInvariance) {
  qbtool::InstanceGen gen(F1(), 54);
  for (int i = 0; i < 200; ++i) {
    const auto [q1, q2] = gen.pair();
    const Mat2 g = gen.conjugator();
    const qb::RelPos a = qb::predict_relpos(qb::make_pair(q1, q2));
    const qb::RelPos b = qb::predict_relpos(qb::make_pair(qb::conjugate(g, q1), qb::conjugate(g, q2)));
    ASSERT_EQ(a, b) << q1.to_string() << " " << q2.to_string();
    ASSERT_EQ(a.df, b.df);
    ASSERT_EQ(a.cell, b.cell);
  }
}

TEST(RelPos, ComparatorSkipsUnsafeMeasurements) {
  qb::RelPos rp;
  rp.kind = RelKind::Disjoint;
  rp.value = HalfInt::of(2);
  qb::IntersectionMeasurement m;
  m.rel = qb::MeasuredRel::Disjoint;
  m.distance = 3;
  m.boundary_safe = false;
  EXPECT_EQ(qb::compare_relpos(rp, m).verdict, Verdict::Skip);
  m.boundary_safe = true;
  EXPECT_EQ(qb::compare_relpos(rp, m).verdict, Verdict::Mismatch);
  m.distance = 2;
  EXPECT_EQ(qb::compare_relpos(rp, m).verdict, Verdict::Match);
}

}  // namespace
