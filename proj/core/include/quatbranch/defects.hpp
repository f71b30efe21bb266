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

#ifndef QUATBRANCH_DEFECTS_HPP_
#define QUATBRANCH_DEFECTS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "quatbranch/series.hpp"

namespace qb {

// Truncated inputs must carry this many slots beyond their valuation.
inline constexpr int kGuardSlots = 8;

class NonIntegralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DefectResult {
  Ideal ideal;
  // Artin-Schreier: h with (h^2+h+a) = ideal. Quadratic: xi with (a+xi^2) = ideal.
  Series witness;
};

enum class PolyClass { ReducibleSep, UnramSep, RamSep, ReducibleInsep, RamInsep };
enum class Group { As, Ai, Bs, Bi };

std::string to_string(PolyClass c);
std::string to_string(Group g);
std::optional<PolyClass> parse_poly_class(const std::string& s);

// Monic integral quadratic X^2 + aX + b with its class. `t` is positive for
// RamSep and nonnegative for RamInsep; zero otherwise.
struct QuadPoly {
  Series a;
  Series b;
  PolyClass cls = PolyClass::ReducibleSep;
  int t = 0;
  // Defect of b/a^2 (separable) or of b (inseparable), with its witness.
  DefectResult defect;

  bool separable() const { return !a.is_zero(); }
  Group group() const;
};

DefectResult as_defect(const Series& a);
DefectResult quad_defect(const Series& a);

// Requires a, b in O. An inexact a that is zero at its precision cannot be
// classified and raises PrecisionError.
QuadPoly classify(const Series& a, const Series& b);

// Root r of r^2 + r + a, to absolute precision `prec`. The other root is r+1.
// Throws std::domain_error when a is not in the image of r^2+r.
Series solve_artin_schreier(const Series& a, int prec = kDefaultPrec);

// Roots of X^2 + cX + d in K, or nullopt when irreducible.
std::optional<std::pair<Series, Series>> solve_quadratic(const Series& c, const Series& d);

}  // namespace qb

#endif  // QUATBRANCH_DEFECTS_HPP_
