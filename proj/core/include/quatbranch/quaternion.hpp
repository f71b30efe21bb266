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

#ifndef QUATBRANCH_QUATERNION_HPP_
#define QUATBRANCH_QUATERNION_HPP_

#include <stdexcept>
#include <string>

#include "quatbranch/defects.hpp"
#include "quatbranch/series.hpp"

namespace qb {

class ScalarMatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// 2x2 matrix [[a, b], [c, d]] over K.
struct Mat2 {
  Series a, b, c, d;

  static Mat2 identity(const GF2Field& f);
  static Mat2 scalar(const Series& s);
  static Mat2 zero(const GF2Field& f);

  const GF2Field& field() const { return a.field(); }
  Mat2 operator+(const Mat2& o) const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator*(const Series& s) const;
  Mat2 operator+(const Series& s) const;
  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const Mat2& o) const { return !(*this == o); }

  Series trace() const { return a + d; }
  Series det() const { return a * d + b * c; }
  bool is_exact() const;
  // Throws PrecisionError if scalarity cannot be decided from the entries.
  bool is_scalar() const;
  bool commutes_with(const Mat2& o) const;
  // Inverse; requires det != 0.
  Mat2 inverse() const;

  std::string to_string() const;
};

// "[[e11, e12],[e21, e22]]" with entries in the series grammar.
Mat2 parse_mat2(const GF2Field& f, const std::string& text);

// Quaternion involution [[a,b],[c,d]] -> [[d,b],[c,a]].
Mat2 bar(const Mat2& q);
// g q g^{-1}.
Mat2 conjugate(const Mat2& g, const Mat2& q);

// ad' + bc' + cb' + da'.
Series sym_product(const Mat2& q1, const Mat2& q2);
Series discriminant(const Series& lambda, const QuadPoly& m1, const QuadPoly& m2);
// Same formula on raw coefficients.
Series discriminant(const Series& lambda, const Series& a1, const Series& b1,
                    const Series& a2, const Series& b2);

// X^2 + tr(q) X + det(q), classified. Throws ScalarMatrixError,
// NonIntegralError.
QuadPoly min_poly(const Mat2& q);

struct PairConfig {
  Mat2 q1, q2;
  QuadPoly m1, m2;
  Series lambda;
  Series delta;
};

PairConfig make_pair(const Mat2& q1, const Mat2& q2);

}  // namespace qb

#endif  // QUATBRANCH_QUATERNION_HPP_
