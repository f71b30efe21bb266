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
#include "quatbranch/field.hpp"

namespace {

using qb::GF2Field;

TEST(Field, PrimeFieldTraceIsIdentity) {
  const GF2Field& f = GF2Field::standard(1);
  EXPECT_EQ(f.trace(0), 0);
  EXPECT_EQ(f.trace(1), 1);
}

TEST(Field, SqrtFixesZeroAndOne) {
  for (int tau = 1; tau <= 8; ++tau) {
    const GF2Field& f = GF2Field::standard(tau);
    EXPECT_EQ(f.sqrt(0), 0u);
    EXPECT_EQ(f.sqrt(1), 1u);
  }
}

TEST(Field, GeneratorOfF4HasTraceOne) {
  const GF2Field& f = GF2Field::get(2, 0b111);
  EXPECT_EQ(f.trace(f.generator()), 1);
}

// Frozen from the naive shift-and-add field.
TEST(Field, FrozenTraces) {
  const GF2Field& f2 = GF2Field::get(2, 0b111);
  const int tr2[] = {0, 0, 1, 1};
  for (unsigned a = 0; a < 4; ++a) EXPECT_EQ(f2.trace(a), tr2[a]) << a;
  const GF2Field& f3 = GF2Field::get(3, 0b1011);
  const int tr3[] = {0, 1, 0, 1, 0, 1, 0, 1};
  for (unsigned a = 0; a < 8; ++a) EXPECT_EQ(f3.trace(a), tr3[a]) << a;
}

TEST(Field, AgreesWithNaiveArithmetic) {
  for (int tau = 1; tau <= 6; ++tau) {
    const GF2Field& f = GF2Field::standard(tau);
    const oracle::NaiveField n{tau, f.modulus()};
    for (qb::FieldElem a = 0; a < f.size(); ++a) {
      EXPECT_EQ(f.trace(a), n.trace(a));
      if (a != 0) EXPECT_EQ(f.inv(a), n.inv(a));
      EXPECT_EQ(n.mul(f.sqrt(a), f.sqrt(a)), a);
      for (qb::FieldElem b = 0; b < f.size(); ++b) ASSERT_EQ(f.mul(a, b), n.mul(a, b)) << tau;
    }
  }
}

TEST(Field, ArtinSchreierSolvableIffTraceZero) {
  for (int tau = 1; tau <= 6; ++tau) {
    const GF2Field& f = GF2Field::standard(tau);
    for (qb::FieldElem a = 0; a < f.size(); ++a) {
      qb::FieldElem r = 0;
      const bool ok = f.solve_as(a, &r);
      EXPECT_EQ(ok, f.trace(a) == 0);
      if (ok) EXPECT_EQ(f.mul(r, r) ^ r, a);
    }
  }
}

TEST(Field, RejectsReducibleModulus) {
  EXPECT_THROW(GF2Field::get(2, 0b101), qb::FieldError);
  EXPECT_THROW(GF2Field::get(0, 0b11), qb::FieldError);
  EXPECT_TRUE(qb::is_irreducible_gf2(0b1011));
  EXPECT_FALSE(qb::is_irreducible_gf2(0b1111));
}

}  // namespace
