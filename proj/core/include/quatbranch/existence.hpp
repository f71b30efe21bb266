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

#ifndef QUATBRANCH_EXISTENCE_HPP_
#define QUATBRANCH_EXISTENCE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "quatbranch/quaternion.hpp"

namespace qb {

// The algebra K[q1, q2 | m1(q1) = m2(q2) = 0, q1 bar(q2) + q2 bar(q1) = lambda].
struct AlgebraSpec {
  Series lambda;
  QuadPoly m1, m2;
  Series delta;

  static AlgebraSpec make(const Series& lambda, const QuadPoly& m1, const QuadPoly& m2);
  bool is_quaternion() const { return !delta.is_zero(); }
};

enum class Condition { I, II, III, IV, V, None };
std::string to_string(Condition c);
std::optional<Condition> parse_condition(const std::string& s);

struct ExistenceVerdict {
  bool exists = false;
  Condition matched = Condition::None;
  std::optional<std::pair<Mat2, Mat2>> witness;
  bool commutative_note = false;
  std::string note;
};

// [a, b): u^2 + u = a, w^2 = b, wu = (u+1)w. Requires a nonzero discriminant.
std::pair<Series, Series> cyclic_presentation(const AlgebraSpec& spec);

// Trace of the residue of a * b'/b, i.e. the additive symbol of [a, b).
// Throws PrecisionError when the residue is not visible.
int cyclic_symbol(const Series& a, const Series& b);
inline bool splits(const Series& a, const Series& b) { return cyclic_symbol(a, b) == 0; }

// Laurent polynomials with support in [lo, hi].
struct SearchBox {
  int lo = -4;
  int hi = 8;
  int samples = 4096;
  std::uint64_t seed = 1;
};

// y^2 m1(x/y) + w^2 m2(z/w) + a1 z y + a2 x w, divided by y w.
Series pair_form(const AlgebraSpec& spec, const Series& x, const Series& y, const Series& z,
                 const Series& w);

// Exhaustive search over monomials of the box (and 0 for x, z) for an exact
// solution of pair_form = lambda with y, w nonzero.
std::optional<std::array<Series, 4>> search_pair(const AlgebraSpec& spec, const SearchBox& box);

// Reduced norm of s + y q1 + w q2 in the algebra.
Series norm_form(const AlgebraSpec& spec, const Series& s, const Series& y, const Series& w);

// Randomized search for (s, y, w) whose norm vanishes after one certified
// Newton step in a single coordinate. A hit proves a zero divisor exists.
struct ZeroDivisorHit {
  std::array<Series, 3> point;  // approximate zero
  int coordinate = 0;           // coordinate adjusted by the Newton step
};
std::optional<ZeroDivisorHit> search_zero_divisor(const AlgebraSpec& spec, const SearchBox& box);

ExistenceVerdict decide(const AlgebraSpec& spec);

}  // namespace qb

#endif  // QUATBRANCH_EXISTENCE_HPP_
