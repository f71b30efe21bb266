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

// Canonical split pairs with closed-form symmetric product and discriminant.

#ifndef QB_TESTS_CANONICAL_HPP_
#define QB_TESTS_CANONICAL_HPP_

#include <string>
#include <vector>

#include "qbtool/generators.hpp"
#include "quatbranch/quaternion.hpp"

namespace canonical {

using qb::Mat2;
using qb::Series;

inline Mat2 A(const Series& a, const Series& alpha) {
  const Series z = Series::zero(a.field());
  return {a + alpha, z, z, alpha};
}
inline Mat2 A1(const Series& a, const Series& alpha) {
  return {alpha, a, Series::zero(a.field()), alpha};
}
inline Mat2 A2(const Series& a, const Series& alpha) {
  return {alpha, Series::zero(a.field()), a, alpha};
}

struct Row {
  std::string name;
  Mat2 q1, q2;
  Series lambda, delta;  // closed forms
};

// One random instance of each of the six rows.
inline std::vector<Row> rows(qbtool::InstanceGen& gen) {
  const qb::GF2Field& f = gen.field();
  auto unit = [&] { return gen.unit(3); };
  auto nz = [&] {
    Series s = gen.poly(-3, 3);
    return s.is_zero() ? Series::one(f) : s;
  };
  std::vector<Row> out;
  {
    const Series a1 = nz(), a2 = nz(), al1 = gen.poly(-3, 3), al2 = gen.poly(-3, 3);
    int k = gen.uniform(-3, 2);
    if (k >= 0) ++k;
    const Series one_theta = Series::monomial(f, gen.nonzero_coeff(), k);
    const Series theta = one_theta + Series::one(f);
    const Series inv = one_theta.inv();
    const Mat2 q2{a2 * theta * inv + al2, a2 * theta * inv, a2 * inv, a2 * inv + al2};
    out.push_back({"sep/sep crossing", A(a1, al1), q2, a1 * al2 + a2 * al1 + a1 * a2 * inv,
                   a1.square() * a2.square() * theta * inv.square()});
  }
  {
    const Series a1 = nz(), a2 = nz(), al1 = gen.poly(-3, 3), al2 = gen.poly(-3, 3);
    out.push_back({"sep/sep shared", A(a1, al1), A(a2, al2), a1 * al2 + a2 * al1, Series::zero(f)});
  }
  {
    const Series u = unit(), v = unit(), al1 = gen.poly(-3, 3), al2 = gen.poly(-3, 3);
    const int s = gen.uniform(-4, 4);
    const Series vs = v.shift(-s);
    out.push_back({"insep/insep opposite", A1(u, al1), A2(vs, al2), u * vs, (u * vs).square()});
  }
  {
    const Series u = unit(), v = unit(), al1 = gen.poly(-3, 3), al2 = gen.poly(-3, 3);
    const int s = gen.uniform(-4, 4);
    out.push_back({"insep/insep same end", A1(u, al1), A1(v.shift(s), al2), Series::zero(f), Series::zero(f)});
  }
  {
    const Series a1 = nz(), u = unit(), al1 = gen.poly(-3, 3), al2 = gen.poly(-3, 3);
    const int r = gen.uniform(-4, 4);
    const Mat2 q1{al1, Series::zero(f), a1, a1 + al1};
    out.push_back({"sep/insep crossing", q1, A1(u.shift(r), al2), a1 * (al2 + u.shift(r)),
                   (a1 * u.shift(r)).square()});
  }
  {
    const Series a1 = nz(), u = unit(), al1 = gen.poly(-3, 3), al2 = gen.poly(-3, 3);
    const int r = gen.uniform(-4, 4);
    out.push_back({"sep/insep shared end", A(a1, al1), A1(u.shift(r), al2), a1 * al2, Series::zero(f)});
  }
  return out;
}

inline Series row_discriminant(const Row& row) {
  return qb::discriminant(qb::sym_product(row.q1, row.q2), row.q1.trace(), row.q1.det(), row.q2.trace(),
                          row.q2.det());
}

}  // namespace canonical

#endif  // QB_TESTS_CANONICAL_HPP_
