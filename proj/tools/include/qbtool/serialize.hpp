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

#ifndef QBTOOL_SERIALIZE_HPP_
#define QBTOOL_SERIALIZE_HPP_

#include "json.hpp"

#include "quatbranch/existence.hpp"
#include "quatbranch/geometry.hpp"
#include "quatbranch/tree.hpp"

// JSON records. Elements and matrices are stored in their text grammar, so
// every record reads back through the same parsers as the command line.
namespace qbtool {

using nlohmann::json;

json to_json(const qb::Series& s);
json to_json(const qb::Mat2& m);
json to_json(const qb::Vertex& v);
json to_json(const qb::HalfInt& h);
json to_json(const qb::ProjPoint& p);
json to_json(const qb::DefectResult& d);
json to_json(const qb::QuadPoly& p);
json to_json(const qb::BranchShape& s);
json to_json(const qb::RelPos& r);
json to_json(const qb::MeasuredShape& m);
json to_json(const qb::IntersectionMeasurement& m);
json to_json(const qb::ExistenceVerdict& v);

// Readers throw qb::ParseError on malformed input.
qb::Series series_from_json(const qb::GF2Field& f, const json& j);
qb::Mat2 mat2_from_json(const qb::GF2Field& f, const json& j);
qb::Vertex vertex_from_json(const qb::GF2Field& f, const json& j);
qb::HalfInt halfint_from_json(const json& j);
qb::ProjPoint projpoint_from_json(const qb::GF2Field& f, const json& j);
qb::DefectResult defect_from_json(const qb::GF2Field& f, const json& j);
qb::QuadPoly quadpoly_from_json(const qb::GF2Field& f, const json& j);
qb::BranchShape branch_shape_from_json(const qb::GF2Field& f, const json& j);
qb::RelPos relpos_from_json(const json& j);
qb::MeasuredShape measured_shape_from_json(const qb::GF2Field& f, const json& j);
qb::IntersectionMeasurement intersection_from_json(const qb::GF2Field& f, const json& j);
qb::ExistenceVerdict verdict_from_json(const qb::GF2Field& f, const json& j);

// Enum names, the inverse of the library's to_string overloads.
qb::StemKind parse_stem_kind(const std::string& s);
qb::RelKind parse_rel_kind(const std::string& s);
qb::MeasuredKind parse_measured_kind(const std::string& s);
qb::MeasuredRel parse_measured_rel(const std::string& s);

}  // namespace qbtool

#endif  // QBTOOL_SERIALIZE_HPP_
