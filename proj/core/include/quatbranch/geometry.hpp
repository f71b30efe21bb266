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

#ifndef QUATBRANCH_GEOMETRY_HPP_
#define QUATBRANCH_GEOMETRY_HPP_

#include <compare>
#include <optional>
#include <string>

#include "quatbranch/defects.hpp"
#include "quatbranch/quaternion.hpp"
#include "quatbranch/tree.hpp"

namespace qb {

// Half-integer stored as twice its value, or one of -inf < +inf < 2inf.
class HalfInt {
 public:
  enum class Kind { NegInf, Finite, PosInf, TwoInf };

  HalfInt() = default;
  static HalfInt of(int n) { return from_twice(2LL * n); }
  static HalfInt from_twice(long long twice) { return HalfInt(Kind::Finite, twice); }
  static HalfInt neg_inf() { return HalfInt(Kind::NegInf, 0); }
  static HalfInt pos_inf() { return HalfInt(Kind::PosInf, 0); }
  static HalfInt two_inf() { return HalfInt(Kind::TwoInf, 0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_integer() const { return is_finite() && twice_ % 2 == 0; }
  long long twice() const { return twice_; }

  HalfInt operator+(const HalfInt& o) const;
  HalfInt operator-() const;  // -(-inf) is 2inf, the bi-infinite length
  bool operator==(const HalfInt& o) const { return kind_ == o.kind_ && twice_ == o.twice_; }
  std::strong_ordering operator<=>(const HalfInt& o) const;

  // "3", "-1/2", "-inf", "inf", "2inf".
  std::string to_string() const;
  static std::optional<HalfInt> parse(const std::string& s);

 private:
  HalfInt(Kind k, long long t) : kind_(k), twice_(t) {}
  Kind kind_ = Kind::Finite;
  long long twice_ = 0;
};

// Point of P^1(K).
struct ProjPoint {
  bool inf = false;
  Series x;

  static ProjPoint infinity() { return {true, Series()}; }
  static ProjPoint at(const Series& s) { return {false, s}; }
  // Equality as points, with inexact coordinates compared up to the common
  // precision.
  bool same_point(const ProjPoint& o) const;
  std::string to_string() const { return inf ? "inf" : x.to_string(); }
};

enum class StemKind { Vertex, Edge, BiInfinitePath };
std::string to_string(StemKind k);

struct BranchShape {
  enum class Kind { ThickLine, InfiniteFoliage };
  Kind kind = Kind::ThickLine;
  PolyClass cls = PolyClass::ReducibleSep;

  // Thick lines.
  StemKind stem_kind = StemKind::Vertex;
  Vertex v0, v1;    // Vertex stem: v0; Edge stem: v0 above v1
  ProjPoint end1, end2;  // path ends; end1 is the foliage end
  int depth = 0;
  HalfInt stem_length;

  // Infinite foliage.
  int leaf_level = 0;

  bool is_foliage() const { return kind == Kind::InfiniteFoliage; }
  // Distance from v to the stem (thick lines only).
  int distance_to_stem(const Vertex& v) const;
  bool contains(const Vertex& v) const;
  // Vertex of the stem; for a foliage the stem is the whole branch.
  bool stem_contains(const Vertex& v) const;
  std::string to_string() const;
};

// Throws ScalarMatrixError, NonIntegralError, PrecisionError.
BranchShape branch_shape(const Mat2& q);

// Stem length convention: 0, 1, inf (foliage) or 2inf.
HalfInt stem_length(const BranchShape& s);

// Table of fake distances; -inf when the discriminant vanishes.
HalfInt fake_distance(const Series& lambda, const QuadPoly& m1, const QuadPoly& m2);

enum class RelKind { Disjoint, Overlap, SharedRay, SharedMaxPath, FoliageMeet, FoliageContained };
std::string to_string(RelKind k);

struct RelPos {
  RelKind kind = RelKind::Overlap;
  HalfInt value;          // Disjoint distance or Overlap length
  int diameter = 0;       // FoliageMeet
  int depth = 0;          // FoliageMeet
  bool stem_is_edge = false;
  HalfInt df;             // fake distance behind the prediction
  std::string cell;       // e.g. "A^s/B^i"

  bool operator==(const RelPos& o) const;
  std::string to_string() const;
};

RelPos predict_relpos(const PairConfig& cfg);

// Verdict of a prediction against a measurement.
enum class Verdict { Match, Mismatch, Skip };
std::string to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::Skip;
  std::string reason;
};

Comparison compare_relpos(const RelPos& pred, const IntersectionMeasurement& m);

// Predicted shape against the measured branch over the same window: the
// member sets must agree everywhere, and stems and depths must agree when the
// measurement is boundary safe.
Comparison compare_shape(const BranchShape& pred, const MeasuredShape& m, const Window& w);

}  // namespace qb

#endif  // QUATBRANCH_GEOMETRY_HPP_
