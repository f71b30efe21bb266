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

#include "quatbranch/geometry.hpp"

#include <algorithm>
#include <set>

namespace qb {

HalfInt HalfInt::operator+(const HalfInt& o) const {
  if (is_finite() && o.is_finite()) return from_twice(twice_ + o.twice_);
  if (!is_finite() && !o.is_finite() && kind_ != o.kind_)
    throw std::domain_error("undefined sum of infinities");
  return is_finite() ? o : *this;
}

HalfInt HalfInt::operator-() const {
  switch (kind_) {
    case Kind::Finite: return from_twice(-twice_);
    case Kind::NegInf: return two_inf();
    default: return neg_inf();
  }
}

std::strong_ordering HalfInt::operator<=>(const HalfInt& o) const {
  if (auto c = static_cast<int>(kind_) <=> static_cast<int>(o.kind_); c != 0) {
    // Finite sits between -inf and the positive infinities.
    return c;
  }
  return twice_ <=> o.twice_;
}

std::string HalfInt::to_string() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    case Kind::TwoInf: return "2inf";
    case Kind::Finite: break;
  }
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::optional<HalfInt> HalfInt::parse(const std::string& s) {
  if (s == "-inf") return neg_inf();
  if (s == "inf") return pos_inf();
  if (s == "2inf") return two_inf();
  try {
    std::size_t pos = 0;
    const long long n = std::stoll(s, &pos);
    if (pos == s.size()) return from_twice(2 * n);
    if (s.substr(pos) == "/2") return from_twice(n);
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

bool ProjPoint::same_point(const ProjPoint& o) const {
  if (inf || o.inf) return inf == o.inf;
  const int p = std::min(x.prec(), o.x.prec());
  return (x + o.x).truncate(p).is_zero();
}

std::string to_string(StemKind k) {
  switch (k) {
    case StemKind::Vertex: return "Vertex";
    case StemKind::Edge: return "Edge";
    case StemKind::BiInfinitePath: return "BiInfinitePath";
  }
  return "?";
}

namespace {

// min(r, v(x - e)) for a finite end e.
int meet_level(const Vertex& v, const Series& e) {
  return std::min(v.r, (v.center + e).val());
}

int distance_to_path(const Vertex& v, const ProjPoint& e1, const ProjPoint& e2) {
  if (e1.inf && e2.inf) throw std::logic_error("degenerate path");
  if (e1.inf || e2.inf) {
    const Series& e = e1.inf ? e2.x : e1.x;
    return v.r - meet_level(v, e);
  }
  const int m1 = meet_level(v, e1.x);
  const int m2 = meet_level(v, e2.x);
  const int m12 = (e1.x + e2.x).val();
  const int mm = std::max(m1, m2);
  if (mm >= m12) return v.r - mm;
  return (v.r - mm) + (m12 - mm);
}

}  // namespace

int BranchShape::distance_to_stem(const Vertex& v) const {
  switch (stem_kind) {
    case StemKind::Vertex: return tree_distance(v, v0);
    case StemKind::Edge: return std::min(tree_distance(v, v0), tree_distance(v, v1));
    case StemKind::BiInfinitePath: return distance_to_path(v, end1, end2);
  }
  return 0;
}

bool BranchShape::contains(const Vertex& v) const {
  if (!is_foliage()) return distance_to_stem(v) <= depth;
  if (end1.inf) return v.r <= leaf_level;
  return 2 * meet_level(v, end1.x) - v.r >= leaf_level;
}

bool BranchShape::stem_contains(const Vertex& v) const {
  return is_foliage() ? contains(v) : distance_to_stem(v) == 0;
}

std::string BranchShape::to_string() const {
  if (is_foliage()) {
    return "InfiniteFoliage{end=" + end1.to_string() + ", leaf_level=" + std::to_string(leaf_level) +
           "}";
  }
  std::string stem;
  switch (stem_kind) {
    case StemKind::Vertex: stem = "Vertex(" + v0.to_string() + ")"; break;
    case StemKind::Edge: stem = "Edge(" + v0.to_string() + ", " + v1.to_string() + ")"; break;
    case StemKind::BiInfinitePath:
      stem = "BiInfinitePath(" + end1.to_string() + ", " + end2.to_string() + ")";
      break;
  }
  return "ThickLine{" + stem + ", depth=" + std::to_string(depth) +
         ", stem_length=" + stem_length.to_string() + "}";
}

BranchShape branch_shape(const Mat2& q) {
  const QuadPoly m = min_poly(q);
  const Series tr = q.trace();
  BranchShape s;
  s.cls = m.cls;

  auto edge = [&](const Series& xi, int level, int depth) {
    s.stem_kind = StemKind::Edge;
    s.v0 = Vertex::make(level, xi);
    s.v1 = Vertex::make(level + 1, xi);
    s.depth = depth;
    s.stem_length = HalfInt::of(1);
  };

  if (q.c.is_zero()) {
    if (!q.c.is_exact()) throw PrecisionError("lower-left entry is not decidably zero");
    // Upper triangular: only the reducible classes can occur.
    if (m.cls == PolyClass::ReducibleInsep) {
      s.kind = BranchShape::Kind::InfiniteFoliage;
      s.end1 = ProjPoint::infinity();
      s.leaf_level = q.b.val();
      s.stem_length = HalfInt::pos_inf();
      return s;
    }
    if (m.cls != PolyClass::ReducibleSep) throw std::logic_error("triangular matrix with irreducible polynomial");
    s.stem_kind = StemKind::BiInfinitePath;
    s.end1 = ProjPoint::at(q.b / tr);
    s.end2 = ProjPoint::infinity();
    s.depth = tr.val();
    s.stem_length = HalfInt::two_inf();
    return s;
  }

  const Series y = q.c.inv();
  const int vy = y.val();
  const Series x = y * q.a;  // fixed point of the Moebius action, shifted
  switch (m.cls) {
    case PolyClass::ReducibleSep: {
      auto roots = solve_quadratic(tr, m.b);
      if (!roots) throw std::logic_error("reducible polynomial without roots");
      s.stem_kind = StemKind::BiInfinitePath;
      s.end1 = ProjPoint::at(x + y * roots->first);
      s.end2 = ProjPoint::at(x + y * roots->second);
      s.depth = tr.val();
      s.stem_length = HalfInt::two_inf();
      return s;
    }
    case PolyClass::UnramSep: {
      const Series xi = x + tr * y * m.defect.witness;
      s.stem_kind = StemKind::Vertex;
      s.v0 = Vertex::make(vy + tr.val(), xi);
      s.depth = tr.val();
      s.stem_length = HalfInt::of(0);
      return s;
    }
    case PolyClass::RamSep: {
      const Series xi = x + tr * y * m.defect.witness;
      edge(xi, vy + tr.val() - m.t, tr.val() - m.t);
      return s;
    }
    case PolyClass::RamInsep: {
      const Series xi = x + y * m.defect.witness;
      edge(xi, vy + m.t, m.t);
      return s;
    }
    case PolyClass::ReducibleInsep: {
      auto alpha = q.det().sqrt();
      if (!alpha) throw std::logic_error("inseparable reducible without square root");
      s.kind = BranchShape::Kind::InfiniteFoliage;
      s.end1 = ProjPoint::at((q.a + *alpha) * y);
      s.leaf_level = -q.c.val();
      s.stem_length = HalfInt::pos_inf();
      return s;
    }
  }
  return s;
}

HalfInt stem_length(const BranchShape& s) { return s.stem_length; }

HalfInt fake_distance(const Series& lambda, const QuadPoly& m1, const QuadPoly& m2) {
  const Series delta = discriminant(lambda, m1, m2);
  if (delta.is_zero()) {
    if (!delta.is_exact()) throw PrecisionError("discriminant vanishes to its precision");
    return HalfInt::neg_inf();
  }
  long long v = delta.val();
  if (m1.separable()) v -= 2LL * m1.a.val();
  if (m2.separable()) v -= 2LL * m2.a.val();
  long long twice = -v;
  for (const QuadPoly* m : {&m1, &m2}) {
    if (m->cls == PolyClass::RamSep) twice -= 2LL * m->t;
    if (m->cls == PolyClass::RamInsep) twice += 2LL * m->t;
  }
  return HalfInt::from_twice(twice);
}

std::string to_string(RelKind k) {
  switch (k) {
    case RelKind::Disjoint: return "Disjoint";
    case RelKind::Overlap: return "Overlap";
    case RelKind::SharedRay: return "SharedRay";
    case RelKind::SharedMaxPath: return "SharedMaxPath";
    case RelKind::FoliageMeet: return "FoliageMeet";
    case RelKind::FoliageContained: return "FoliageContained";
  }
  return "?";
}

bool RelPos::operator==(const RelPos& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case RelKind::Disjoint:
    case RelKind::Overlap: return value == o.value;
    case RelKind::FoliageMeet:
      return diameter == o.diameter && depth == o.depth && stem_is_edge == o.stem_is_edge;
    default: return true;
  }
}

std::string RelPos::to_string() const {
  switch (kind) {
    case RelKind::Disjoint: return "Disjoint{distance=" + value.to_string() + "}";
    case RelKind::Overlap: return "Overlap{length=" + value.to_string() + "}";
    case RelKind::FoliageMeet:
      return "FoliageMeet{diameter=" + std::to_string(diameter) + ", depth=" + std::to_string(depth) +
             ", stem_is_edge=" + (stem_is_edge ? "true" : "false") + "}";
    default: return qb::to_string(kind);
  }
}

RelPos predict_relpos(const PairConfig& cfg) {
  RelPos rp;
  rp.cell = qb::to_string(cfg.m1.group()) + "/" + qb::to_string(cfg.m2.group());
  rp.df = fake_distance(cfg.lambda, cfg.m1, cfg.m2);

  const bool insep_pair =
      cfg.m1.cls == PolyClass::ReducibleInsep && cfg.m2.cls == PolyClass::ReducibleInsep;
  if (insep_pair) {
    if (cfg.lambda.is_zero()) {
      if (!cfg.lambda.is_exact()) throw PrecisionError("symmetric product vanishes to its precision");
      rp.kind = RelKind::FoliageContained;
      return rp;
    }
    if (rp.df > HalfInt::of(0)) {
      rp.kind = RelKind::Disjoint;
      rp.value = rp.df;
      return rp;
    }
    const int v = cfg.lambda.val();
    rp.kind = RelKind::FoliageMeet;
    rp.diameter = v;
    rp.depth = v / 2;
    rp.stem_is_edge = v % 2 != 0;
    return rp;
  }

  if (cfg.m1.cls == PolyClass::ReducibleSep && cfg.m2.cls == PolyClass::ReducibleSep &&
      rp.df == HalfInt::neg_inf()) {
    rp.kind = cfg.q1.commutes_with(cfg.q2) ? RelKind::SharedMaxPath : RelKind::SharedRay;
    return rp;
  }

  if (rp.df > HalfInt::of(0)) {
    rp.kind = RelKind::Disjoint;
    rp.value = rp.df;
    return rp;
  }
  const HalfInt l1 = branch_shape(cfg.q1).stem_length;
  const HalfInt l2 = branch_shape(cfg.q2).stem_length;
  rp.kind = RelKind::Overlap;
  // -2 d_f; a vanishing discriminant reads as the bi-infinite length.
  const HalfInt neg2 = rp.df.is_finite() ? HalfInt::from_twice(-2 * rp.df.twice()) : -rp.df;
  rp.value = std::min({neg2, l1, l2});
  return rp;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::Skip: return "SKIP";
  }
  return "?";
}

Comparison compare_relpos(const RelPos& pred, const IntersectionMeasurement& m) {
  auto fail = [&](const std::string& why) {
    return Comparison{Verdict::Mismatch, why + ": predicted " + pred.to_string() + ", measured " +
                                             to_string(m.rel)};
  };
  if (!m.boundary_safe) return {Verdict::Skip, "boundary: " + (m.note.empty() ? "unsafe" : m.note)};

  bool want_ray = pred.kind == RelKind::SharedRay ||
                  (pred.kind == RelKind::Overlap && pred.value == HalfInt::pos_inf());
  bool want_line = pred.kind == RelKind::SharedMaxPath ||
                   (pred.kind == RelKind::Overlap && pred.value == HalfInt::two_inf());
  if (want_ray) {
    if (m.rel == MeasuredRel::Ray) return {Verdict::Match, ""};
    if (m.rel == MeasuredRel::Line) return {Verdict::Skip, "ray origin outside the window"};
    return fail("expected a ray");
  }
  if (want_line) {
    if (m.rel == MeasuredRel::Line) return {Verdict::Match, ""};
    return fail("expected a maximal path");
  }
  switch (pred.kind) {
    case RelKind::Disjoint:
      if (m.rel == MeasuredRel::Disjoint && 2LL * m.distance == pred.value.twice())
        return {Verdict::Match, ""};
      return fail("distance");
    case RelKind::Overlap: {
      if (m.rel == MeasuredRel::Overlap && 2LL * m.length == pred.value.twice())
        return {Verdict::Match, ""};
      if ((m.rel == MeasuredRel::Ray || m.rel == MeasuredRel::Line) &&
          pred.value.twice() > 2LL * m.length)
        return {Verdict::Skip, "overlap longer than the window"};
      return fail("overlap length");
    }
    case RelKind::FoliageMeet:
      if (m.rel == MeasuredRel::FoliageMeet && m.length == pred.diameter && m.depth == pred.depth &&
          m.stem_is_edge == pred.stem_is_edge)
        return {Verdict::Match, ""};
      return fail("foliage intersection");
    case RelKind::FoliageContained:
      if (m.rel == MeasuredRel::FoliageContained) return {Verdict::Match, ""};
      return fail("containment");
    default: break;
  }
  return fail("unhandled");
}

Comparison compare_shape(const BranchShape& pred, const MeasuredShape& m, const Window& w) {
  std::set<int> measured;
  for (const Vertex& v : m.vertex_set) measured.insert(w.index(v));
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Vertex& v = w.vertex(static_cast<int>(i));
    const bool p = pred.contains(v);
    if (p != (measured.count(static_cast<int>(i)) > 0)) {
      return {Verdict::Mismatch, std::string("membership differs at ") + v.to_string() +
                                     (p ? " (predicted in)" : " (predicted out)")};
    }
  }
  if (pred.is_foliage()) {
    if (m.kind != MeasuredKind::Foliage && m.kind != MeasuredKind::Empty)
      return m.boundary_safe ? Comparison{Verdict::Mismatch, "expected a foliage, measured " + to_string(m.kind)}
                             : Comparison{Verdict::Skip, "boundary"};
    return {Verdict::Match, ""};
  }
  if (!m.boundary_safe || m.kind != MeasuredKind::Thick)
    return {Verdict::Skip, "boundary: " + (m.note.empty() ? to_string(m.kind) : m.note)};
  if (m.depth != pred.depth)
    return {Verdict::Mismatch, "depth: predicted " + std::to_string(pred.depth) + ", measured " +
                                   std::to_string(m.depth)};
  std::set<int> stem;
  for (const Vertex& v : m.stem) stem.insert(w.index(v));
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Vertex& v = w.vertex(static_cast<int>(i));
    if (pred.stem_contains(v) != (stem.count(static_cast<int>(i)) > 0))
      return {Verdict::Mismatch, "stem differs at " + v.to_string()};
  }
  return {Verdict::Match, ""};
}

}  // namespace qb
