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

#include <climits>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "qbtool/generators.hpp"
#include "quatbranch/defects.hpp"

namespace {

using qb::GF2Field;
using qb::Ideal;
using qb::PolyClass;
using qb::Series;

const GF2Field& F1() { return GF2Field::standard(1); }
Series S(const std::string& s, const GF2Field& f = F1()) { return qb::parse_series(f, s); }

Series p(const Series& a, const Series& h) { return h.square() + h + a; }

TEST(Defects, UniformizerIsArtinSchreierTrivial) {
  EXPECT_EQ(qb::as_defect(S("t")).ideal, Ideal::Zero());
}

TEST(Defects, ArtinSchreierImageOfAStep) {
  qbtool::InstanceGen gen(F1(), 2);
  for (int i = 0; i < 50; ++i) {
    const Series c = gen.poly(-4, 4);
    const qb::DefectResult d = qb::as_defect(c.square() + c);
    EXPECT_EQ(d.ideal, Ideal::Zero());
    EXPECT_TRUE(p(c.square() + c, d.witness).is_zero() || p(c.square() + c, d.witness).val() > 0);
  }
}

TEST(Defects, InverseUniformizer) {
  const qb::DefectResult d = qb::as_defect(S("t^-1"));
  EXPECT_EQ(d.ideal, Ideal::Pow(-1));
}

TEST(Defects, TraceOneConstantOverF4) {
  const GF2Field& f = GF2Field::standard(2);
  const qb::DefectResult d = qb::as_defect(Series::monomial(f, f.generator(), 0));
  EXPECT_EQ(d.ideal, Ideal::Unit());
}

TEST(Defects, QuadraticExamples) {
  qb::DefectResult d = qb::quad_defect(S("t^2"));
  EXPECT_EQ(d.ideal, Ideal::Zero());
  EXPECT_EQ(d.witness, S("t"));
  EXPECT_EQ(qb::quad_defect(S("t")).ideal, Ideal::Pow(1));
  d = qb::quad_defect(S("1 + t^3"));
  EXPECT_EQ(d.ideal, Ideal::Pow(3));
  EXPECT_EQ(d.witness, S("1"));
}

// Valuations frozen from the brute-force grid oracle (h support [-4, 8]);
// INT_MAX stands for the zero ideal, and a positive Artin-Schreier value
// means a root lifts.
struct Frozen {
  const char* a;
  int as;
  int quad;
};
const Frozen kFrozen[] = {
    {"t^-1", -1, -1},
    {"t^-2", -1, INT_MAX},
    {"t^-3 + t^-2 + 1", -3, -3},
    {"t^-4 + t", -1, 1},
    {"1", 0, INT_MAX},
    {"t", 16, 1},
    {"t^-5 + t^-3", -5, -5},
    {"t^-6 + t^-1 + 1", -3, -1},
    {"1 + t^3", 0, 3},
    {"t^-2 + t^-1", INT_MAX, -1},
    {"t^2 + t", INT_MAX, 1},
    {"t^-4 + t^-2 + t^-1", -1, -1},
    {"t^-6 + t^-4 + t^-3", -1, -3},
    {"t^-5 + t^-2 + t^4", -5, -5},
};

TEST(Defects, FrozenBruteForceValues) {
  for (const Frozen& fz : kFrozen) {
    const Series a = S(fz.a);
    const oracle::Bits b = oracle::Bits::from(a);
    ASSERT_EQ(oracle::brute_defect(b, -4, 8, true), fz.as) << fz.a;
    ASSERT_EQ(oracle::brute_defect(b, -4, 8, false), fz.quad) << fz.a;
    const Ideal as = qb::as_defect(a).ideal;
    if (fz.as > 0) {
      EXPECT_EQ(as, Ideal::Zero()) << fz.a;
    } else {
      EXPECT_EQ(as, Ideal::Pow(fz.as)) << fz.a;
    }
    const Ideal qd = qb::quad_defect(a).ideal;
    EXPECT_EQ(qd, fz.quad == INT_MAX ? Ideal::Zero() : Ideal::Pow(fz.quad)) << fz.a;
  }
}

TEST(Defects, ImageLawAndWitnessOptimality) {
  for (int tau : {1, 2, 3}) {
    const GF2Field& f = GF2Field::standard(tau);
    qbtool::InstanceGen gen(f, 100 + static_cast<std::uint64_t>(tau));
    for (int i = 0; i < 1000; ++i) {
      const Series a = gen.poly(-9, 9);
      const qb::DefectResult as = qb::as_defect(a);
      if (!as.ideal.zero) {
        ASSERT_TRUE(as.ideal.val == 0 || (as.ideal.val < 0 && as.ideal.val % 2 != 0)) << a.to_string();
        ASSERT_EQ(p(a, as.witness).val(), as.ideal.val);
      }
      const qb::DefectResult qd = qb::quad_defect(a);
      if (!qd.ideal.zero) {
        ASSERT_NE(qd.ideal.val % 2, 0);
        ASSERT_GE(qd.ideal.val, a.val());
        ASSERT_EQ((a + qd.witness.square()).val(), qd.ideal.val);
      } else {
        ASSERT_TRUE((a + qd.witness.square()).is_zero());
      }
    }
  }
}

TEST(Defects, NoGridPointBeatsTheWitness) {
  qbtool::InstanceGen gen(F1(), 9);
  for (int i = 0; i < 500; ++i) {
    const Series a = gen.poly(-6, 6);
    const oracle::Bits b = oracle::Bits::from(a);
    const Ideal as = qb::as_defect(a).ideal;
    const int bas = oracle::brute_defect(b, -4, 8, true);
    if (as.zero) {
      ASSERT_GE(bas, 1) << a.to_string();
    } else {
      ASSERT_EQ(bas, as.val) << a.to_string();
    }
    const Ideal qd = qb::quad_defect(a).ideal;
    const int bqd = oracle::brute_defect(b, -4, 8, false);
    ASSERT_EQ(bqd, qd.zero ? INT_MAX : qd.val) << a.to_string();
  }
}

TEST(Defects, TranslationInvarianceAndSubadditivity) {
  for (int tau : {1, 2}) {
    qbtool::InstanceGen gen(GF2Field::standard(tau), 21);
    for (int i = 0; i < 300; ++i) {
      const Series a = gen.poly(-7, 5);
      const Series b = gen.poly(-7, 5);
      const Series c = gen.poly(-4, 4);
      ASSERT_EQ(qb::as_defect(a).ideal, qb::as_defect(a + c.square() + c).ideal);
      ASSERT_GE(qb::as_defect(a + b).ideal.ord(),
                std::min(qb::as_defect(a).ideal.ord(), qb::as_defect(b).ideal.ord()));
    }
  }
}

TEST(Defects, ClassifyExamples) {
  EXPECT_EQ(qb::classify(S("1"), S("t")).cls, PolyClass::ReducibleSep);
  const qb::QuadPoly m = qb::classify(S("0"), S("t"));
  EXPECT_EQ(m.cls, PolyClass::RamInsep);
  EXPECT_EQ(m.t, 0);
  const qb::QuadPoly r = qb::classify(S("t"), S("t"));
  EXPECT_EQ(r.cls, PolyClass::RamSep);
  EXPECT_EQ(r.t, 1);
  EXPECT_EQ(qb::classify(S("1"), S("1")).cls, PolyClass::UnramSep);
  EXPECT_EQ(qb::classify(S("0"), S("1 + t^2")).cls, PolyClass::ReducibleInsep);
  EXPECT_EQ(qb::classify(S("0"), S("t^3")).t, 1);
}

TEST(Defects, GroupsFollowClasses) {
  EXPECT_EQ(qb::classify(S("1"), S("0")).group(), qb::Group::As);
  EXPECT_EQ(qb::classify(S("1"), S("1")).group(), qb::Group::As);
  EXPECT_EQ(qb::classify(S("0"), S("1")).group(), qb::Group::Ai);
  EXPECT_EQ(qb::classify(S("t"), S("t")).group(), qb::Group::Bs);
  EXPECT_EQ(qb::classify(S("0"), S("t")).group(), qb::Group::Bi);
}

TEST(Defects, HenselRoot) {
  EXPECT_EQ(qb::solve_artin_schreier(S("0")).val() >= 0, true);
  const Series r = qb::solve_artin_schreier(S("t"));
  EXPECT_TRUE(r.equal_mod(S("t + t^2"), 3));
  EXPECT_GE(p(S("t"), r).val(), 3);
  qbtool::InstanceGen gen(F1(), 4);
  for (int i = 0; i < 50; ++i) {
    const Series c = gen.poly(1, 6);
    const Series root = qb::solve_artin_schreier(c.square() + c);
    EXPECT_TRUE(root.equal_mod(c, root.prec()) || root.equal_mod(c + Series::one(F1()), root.prec()));
  }
}

TEST(Defects, SolveQuadraticExamples) {
  const auto roots = qb::solve_quadratic(S("1"), S("t"));
  ASSERT_TRUE(roots.has_value());
  for (const Series& x : {roots->first, roots->second}) {
    EXPECT_GE((x * x + x + S("t")).val(), 32);
  }
  const auto dbl = qb::solve_quadratic(S("0"), S("t^2"));
  ASSERT_TRUE(dbl.has_value());
  EXPECT_EQ(dbl->first, S("t"));
  EXPECT_EQ(dbl->second, S("t"));
  EXPECT_FALSE(qb::solve_quadratic(S("t"), S("t")).has_value());
}

TEST(Defects, IrreducibleIffNoRoots) {
  qbtool::InstanceGen gen(F1(), 8);
  for (int i = 0; i < 300; ++i) {
    const Series a = gen.poly(0, 4);
    const Series b = gen.poly(0, 4);
    const qb::QuadPoly m = qb::classify(a, b);
    const bool irreducible = m.cls == PolyClass::UnramSep || m.cls == PolyClass::RamSep ||
                             m.cls == PolyClass::RamInsep;
    ASSERT_EQ(irreducible, !qb::solve_quadratic(a, b).has_value());
  }
}

TEST(Defects, TruncatedInputWithoutVisibleAnswer) {
  EXPECT_THROW(qb::quad_defect(S("1 + t^2 (mod t^3)")), qb::PrecisionError);
}

}  // namespace
