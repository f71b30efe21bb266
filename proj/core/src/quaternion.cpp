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

#include "quatbranch/quaternion.hpp"

#include <cctype>
#include <vector>

namespace qb {

Mat2 Mat2::identity(const GF2Field& f) { return scalar(Series::one(f)); }

Mat2 Mat2::scalar(const Series& s) {
  const Series z = Series::zero(s.field());
  return {s, z, z, s};
}

Mat2 Mat2::zero(const GF2Field& f) { return scalar(Series::zero(f)); }

Mat2 Mat2::operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::operator*(const Series& s) const { return {a * s, b * s, c * s, d * s}; }

Mat2 Mat2::operator+(const Series& s) const { return {a + s, b, c, d + s}; }

bool Mat2::is_exact() const {
  return a.is_exact() && b.is_exact() && c.is_exact() && d.is_exact();
}

bool Mat2::is_scalar() const {
  const Series diff = a + d;
  if (!b.is_zero() || !c.is_zero() || !diff.is_zero()) return false;
  if (b.is_exact() && c.is_exact() && diff.is_exact()) return true;
  throw PrecisionError("cannot decide whether " + to_string() + " is scalar");
}

bool Mat2::commutes_with(const Mat2& o) const {
  const Mat2 comm = (*this) * o + o * (*this);
  return comm.a.is_zero() && comm.b.is_zero() && comm.c.is_zero() && comm.d.is_zero();
}

Mat2 Mat2::inverse() const {
  const Series di = det().inv();
  return {d * di, b * di, c * di, a * di};
}

std::string Mat2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "],[" + c.to_string() + ", " +
         d.to_string() + "]]";
}

Mat2 parse_mat2(const GF2Field& f, const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != '\n' && ch != '\r') s += ch;
  }
  // Strip outer brackets, then split rows and entries on top-level commas.
  std::size_t b = s.find('[');
  std::size_t e = s.rfind(']');
  if (b == std::string::npos || e == std::string::npos || e <= b)
    throw ParseError("matrix must look like [[a, b],[c, d]]");
  const std::string inner = s.substr(b + 1, e - b - 1);
  std::vector<std::string> rows;
  int depth = 0;
  std::string cur;
  for (char ch : inner) {
    if (ch == '[') {
      if (depth == 0) {
        cur.clear();
        ++depth;
        continue;
      }
      ++depth;
    } else if (ch == ']') {
      --depth;
      if (depth == 0) {
        rows.push_back(cur);
        continue;
      }
    } else if (depth == 0) {
      if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) continue;
      throw ParseError("unexpected character in matrix: " + std::string(1, ch));
    }
    cur += ch;
  }
  if (rows.size() != 2) throw ParseError("matrix must have two rows");
  std::vector<Series> entries;
  for (const std::string& row : rows) {
    int d2 = 0;
    std::string item;
    std::vector<std::string> items;
    for (char ch : row) {
      if (ch == '(') ++d2;
      if (ch == ')') --d2;
      if (ch == ',' && d2 == 0) {
        items.push_back(item);
        item.clear();
      } else {
        item += ch;
      }
    }
    items.push_back(item);
    if (items.size() != 2) throw ParseError("each matrix row needs two entries");
    for (const auto& it : items) entries.push_back(parse_series(f, it));
  }
  return {entries[0], entries[1], entries[2], entries[3]};
}

Mat2 bar(const Mat2& q) { return {q.d, q.b, q.c, q.a}; }

Mat2 conjugate(const Mat2& g, const Mat2& q) { return g * q * g.inverse(); }

Series sym_product(const Mat2& q1, const Mat2& q2) {
  return q1.a * q2.d + q1.b * q2.c + q1.c * q2.b + q1.d * q2.a;
}

Series discriminant(const Series& lambda, const Series& a1, const Series& b1, const Series& a2,
                    const Series& b2) {
  return lambda.square() + a1 * a2 * lambda + a1.square() * b2 + a2.square() * b1;
}

Series discriminant(const Series& lambda, const QuadPoly& m1, const QuadPoly& m2) {
  return discriminant(lambda, m1.a, m1.b, m2.a, m2.b);
}

QuadPoly min_poly(const Mat2& q) {
  if (q.is_scalar()) throw ScalarMatrixError("scalar matrix: " + q.to_string());
  const Series tr = q.trace();
  const Series dt = q.det();
  if (tr.val() < 0 || dt.val() < 0)
    throw NonIntegralError("matrix is not integral over O: " + q.to_string());
  return classify(tr, dt);
}

PairConfig make_pair(const Mat2& q1, const Mat2& q2) {
  PairConfig cfg;
  cfg.q1 = q1;
  cfg.q2 = q2;
  cfg.m1 = min_poly(q1);
  cfg.m2 = min_poly(q2);
  cfg.lambda = sym_product(q1, q2);
  const Mat2 full = q1 * bar(q2) + q2 * bar(q1);
  if (!full.b.is_zero() || !full.c.is_zero() || !(full.a + cfg.lambda).is_zero() ||
      !(full.d + cfg.lambda).is_zero())
    throw std::logic_error("symmetric product is not scalar");
  cfg.delta = discriminant(cfg.lambda, cfg.m1, cfg.m2);
  return cfg;
}

}  // namespace qb
