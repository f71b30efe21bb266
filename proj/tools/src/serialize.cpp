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

#include "qbtool/serialize.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace qbtool {

using qb::ParseError;

namespace {

template <typename E>
E parse_enum(const std::string& s, std::initializer_list<E> all, const char* what) {
  for (E e : all) {
    if (qb::to_string(e) == s) return e;
  }
  throw ParseError(std::string("unknown ") + what + ": " + s);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field ") + key);
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field ") + key + ": " + e.what());
  }
}

std::string kind_name(qb::BranchShape::Kind k) {
  return k == qb::BranchShape::Kind::ThickLine ? "ThickLine" : "InfiniteFoliage";
}

json vertices(const std::vector<qb::Vertex>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

std::vector<qb::Vertex> vertices_from(const qb::GF2Field& f, const json& j) {
  if (!j.is_array()) throw ParseError("expected a vertex list");
  std::vector<qb::Vertex> out;
  for (const auto& e : j) out.push_back(vertex_from_json(f, e));
  return out;
}

}  // namespace

qb::StemKind parse_stem_kind(const std::string& s) {
  using K = qb::StemKind;
  return parse_enum(s, {K::Vertex, K::Edge, K::BiInfinitePath}, "stem kind");
}

qb::RelKind parse_rel_kind(const std::string& s) {
  using K = qb::RelKind;
  return parse_enum(s,
                    {K::Disjoint, K::Overlap, K::SharedRay, K::SharedMaxPath, K::FoliageMeet,
                     K::FoliageContained},
                    "relative position");
}

qb::MeasuredKind parse_measured_kind(const std::string& s) {
  using K = qb::MeasuredKind;
  return parse_enum(s, {K::Empty, K::Thick, K::Foliage, K::Irregular}, "measured kind");
}

qb::MeasuredRel parse_measured_rel(const std::string& s) {
  using K = qb::MeasuredRel;
  return parse_enum(s,
                    {K::Disjoint, K::Overlap, K::Ray, K::Line, K::FoliageMeet,
                     K::FoliageContained, K::Irregular},
                    "measured relation");
}

json to_json(const qb::Series& s) { return s.to_string(); }
json to_json(const qb::Mat2& m) { return m.to_string(); }
json to_json(const qb::Vertex& v) { return json{{"r", v.r}, {"center", to_json(v.center)}}; }
json to_json(const qb::HalfInt& h) { return h.to_string(); }
json to_json(const qb::ProjPoint& p) { return p.to_string(); }

json to_json(const qb::DefectResult& d) {
  return json{{"ideal_val", d.ideal.zero ? json(nullptr) : json(d.ideal.val)},
              {"ideal", d.ideal.to_string()},
              {"witness", to_json(d.witness)}};
}

json to_json(const qb::QuadPoly& p) {
  return json{{"a", to_json(p.a)},
              {"b", to_json(p.b)},
              {"class", qb::to_string(p.cls)},
              {"group", qb::to_string(p.group())},
              {"t", p.t},
              {"defect", to_json(p.defect)}};
}

json to_json(const qb::BranchShape& s) {
  json j{{"kind", kind_name(s.kind)}, {"class", qb::to_string(s.cls)}};
  if (s.is_foliage()) {
    j["end"] = to_json(s.end1);
    j["leaf_level"] = s.leaf_level;
  } else {
    j["stem_kind"] = qb::to_string(s.stem_kind);
    j["v0"] = to_json(s.v0);
    if (s.stem_kind == qb::StemKind::Edge) j["v1"] = to_json(s.v1);
    if (s.stem_kind == qb::StemKind::BiInfinitePath) {
      j["end1"] = to_json(s.end1);
      j["end2"] = to_json(s.end2);
    }
    j["depth"] = s.depth;
  }
  j["stem_length"] = to_json(s.stem_length);
  return j;
}

json to_json(const qb::RelPos& r) {
  json j{{"kind", qb::to_string(r.kind)}, {"df", to_json(r.df)}, {"cell", r.cell}};
  switch (r.kind) {
    case qb::RelKind::Disjoint:
    case qb::RelKind::Overlap:
      j["value"] = to_json(r.value);
      break;
    case qb::RelKind::FoliageMeet:
      j["diameter"] = r.diameter;
      j["depth"] = r.depth;
      j["stem_is_edge"] = r.stem_is_edge;
      break;
    default:
      break;
  }
  return j;
}

json to_json(const qb::MeasuredShape& m) {
  return json{{"kind", qb::to_string(m.kind)},   {"vertex_set", vertices(m.vertex_set)},
              {"stem", vertices(m.stem)},         {"depth", m.depth},
              {"diameter", m.diameter},           {"open_ends", m.open_ends},
              {"boundary_safe", m.boundary_safe}, {"note", m.note}};
}

json to_json(const qb::IntersectionMeasurement& m) {
  return json{{"first", to_json(m.first)},
              {"second", to_json(m.second)},
              {"intersection", to_json(m.intersection)},
              {"rel", qb::to_string(m.rel)},
              {"distance", m.distance},
              {"length", m.length},
              {"depth", m.depth},
              {"stem_is_edge", m.stem_is_edge},
              {"boundary_safe", m.boundary_safe},
              {"note", m.note}};
}

json to_json(const qb::ExistenceVerdict& v) {
  json j{{"exists", v.exists},
         {"condition", qb::to_string(v.matched)},
         {"commutative_note", v.commutative_note},
         {"note", v.note}};
  if (v.witness) {
    j["witness"] = json::array({to_json(v.witness->first), to_json(v.witness->second)});
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

qb::Series series_from_json(const qb::GF2Field& f, const json& j) {
  if (!j.is_string()) throw ParseError("expected an element string");
  return qb::parse_series(f, j.get<std::string>());
}

qb::Mat2 mat2_from_json(const qb::GF2Field& f, const json& j) {
  if (!j.is_string()) throw ParseError("expected a matrix string");
  return qb::parse_mat2(f, j.get<std::string>());
}

qb::Vertex vertex_from_json(const qb::GF2Field& f, const json& j) {
  return qb::Vertex::make(get<int>(j, "r"), series_from_json(f, field(j, "center")));
}

qb::HalfInt halfint_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("expected a half-integer string");
  const auto h = qb::HalfInt::parse(j.get<std::string>());
  if (!h) throw ParseError("bad half-integer: " + j.get<std::string>());
  return *h;
}

qb::ProjPoint projpoint_from_json(const qb::GF2Field& f, const json& j) {
  if (j == "inf") return qb::ProjPoint::infinity();
  return qb::ProjPoint::at(series_from_json(f, j));
}

qb::DefectResult defect_from_json(const qb::GF2Field& f, const json& j) {
  qb::DefectResult d;
  const json& v = field(j, "ideal_val");
  d.ideal = v.is_null() ? qb::Ideal::Zero() : qb::Ideal::Pow(get<int>(j, "ideal_val"));
  d.witness = series_from_json(f, field(j, "witness"));
  return d;
}

qb::QuadPoly quadpoly_from_json(const qb::GF2Field& f, const json& j) {
  qb::QuadPoly p;
  p.a = series_from_json(f, field(j, "a"));
  p.b = series_from_json(f, field(j, "b"));
  const auto cls = qb::parse_poly_class(get<std::string>(j, "class"));
  if (!cls) throw ParseError("bad class");
  p.cls = *cls;
  p.t = get<int>(j, "t");
  p.defect = defect_from_json(f, field(j, "defect"));
  return p;
}

qb::BranchShape branch_shape_from_json(const qb::GF2Field& f, const json& j) {
  qb::BranchShape s;
  const std::string kind = get<std::string>(j, "kind");
  if (kind == "ThickLine") {
    s.kind = qb::BranchShape::Kind::ThickLine;
  } else if (kind == "InfiniteFoliage") {
    s.kind = qb::BranchShape::Kind::InfiniteFoliage;
  } else {
    throw ParseError("bad branch kind: " + kind);
  }
  const auto cls = qb::parse_poly_class(get<std::string>(j, "class"));
  if (!cls) throw ParseError("bad class");
  s.cls = *cls;
  if (s.is_foliage()) {
    s.end1 = projpoint_from_json(f, field(j, "end"));
    s.leaf_level = get<int>(j, "leaf_level");
  } else {
    s.stem_kind = parse_stem_kind(get<std::string>(j, "stem_kind"));
    s.v0 = vertex_from_json(f, field(j, "v0"));
    if (s.stem_kind == qb::StemKind::Edge) s.v1 = vertex_from_json(f, field(j, "v1"));
    if (s.stem_kind == qb::StemKind::BiInfinitePath) {
      s.end1 = projpoint_from_json(f, field(j, "end1"));
      s.end2 = projpoint_from_json(f, field(j, "end2"));
    }
    s.depth = get<int>(j, "depth");
  }
  s.stem_length = halfint_from_json(field(j, "stem_length"));
  return s;
}

qb::RelPos relpos_from_json(const json& j) {
  qb::RelPos r;
  r.kind = parse_rel_kind(get<std::string>(j, "kind"));
  r.df = halfint_from_json(field(j, "df"));
  r.cell = get<std::string>(j, "cell");
  if (j.contains("value")) r.value = halfint_from_json(j.at("value"));
  if (r.kind == qb::RelKind::FoliageMeet) {
    r.diameter = get<int>(j, "diameter");
    r.depth = get<int>(j, "depth");
    r.stem_is_edge = get<bool>(j, "stem_is_edge");
  }
  return r;
}

qb::MeasuredShape measured_shape_from_json(const qb::GF2Field& f, const json& j) {
  qb::MeasuredShape m;
  m.kind = parse_measured_kind(get<std::string>(j, "kind"));
  m.vertex_set = vertices_from(f, field(j, "vertex_set"));
  m.stem = vertices_from(f, field(j, "stem"));
  m.depth = get<int>(j, "depth");
  m.diameter = get<int>(j, "diameter");
  m.open_ends = get<int>(j, "open_ends");
  m.boundary_safe = get<bool>(j, "boundary_safe");
  m.note = get<std::string>(j, "note");
  return m;
}

qb::IntersectionMeasurement intersection_from_json(const qb::GF2Field& f, const json& j) {
  qb::IntersectionMeasurement m;
  m.first = measured_shape_from_json(f, field(j, "first"));
  m.second = measured_shape_from_json(f, field(j, "second"));
  m.intersection = measured_shape_from_json(f, field(j, "intersection"));
  m.rel = parse_measured_rel(get<std::string>(j, "rel"));
  m.distance = get<int>(j, "distance");
  m.length = get<int>(j, "length");
  m.depth = get<int>(j, "depth");
  m.stem_is_edge = get<bool>(j, "stem_is_edge");
  m.boundary_safe = get<bool>(j, "boundary_safe");
  m.note = get<std::string>(j, "note");
  return m;
}

qb::ExistenceVerdict verdict_from_json(const qb::GF2Field& f, const json& j) {
  qb::ExistenceVerdict v;
  v.exists = get<bool>(j, "exists");
  const auto c = qb::parse_condition(get<std::string>(j, "condition"));
  if (!c) throw ParseError("bad condition");
  v.matched = *c;
  v.commutative_note = get<bool>(j, "commutative_note");
  v.note = get<std::string>(j, "note");
  const json& w = field(j, "witness");
  if (!w.is_null()) {
    if (!w.is_array() || w.size() != 2) throw ParseError("witness must be a pair");
    v.witness = std::make_pair(mat2_from_json(f, w[0]), mat2_from_json(f, w[1]));
  }
  return v;
}

}  // namespace qbtool
