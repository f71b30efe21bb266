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

#ifndef QBTOOL_GENERATORS_HPP_
#define QBTOOL_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "quatbranch/existence.hpp"
#include "quatbranch/quaternion.hpp"

namespace qbtool {

// Mixes a seed with an instance index, so every instance has its own stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Random exact instances over a fixed residue field.
class InstanceGen {
 public:
  InstanceGen(const qb::GF2Field& f, std::uint64_t seed) : f_(&f), rng_(seed) {}

  const qb::GF2Field& field() const { return *f_; }
  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi);
  qb::FieldElem nonzero_coeff();

  // Laurent polynomial with support in [lo, hi].
  qb::Series poly(int lo, int hi, double density = 0.5);
  // Unit of O: nonzero constant term plus a random tail in [1, hi].
  qb::Series unit(int hi = 2);

  // Element of GL2(O) with polynomial inverse.
  qb::Mat2 conjugator();
  // Random integral non-scalar matrix with entries supported in [lo, hi],
  // by rejection.
  qb::Mat2 integral(int lo = -3, int hi = 3);
  // Matrix whose minimal polynomial has the requested class.
  qb::Mat2 with_class(qb::PolyClass cls);

  // Pair drawn from one of several families; `family` receives its name.
  std::pair<qb::Mat2, qb::Mat2> pair(std::string* family = nullptr);

  // Random specification for the existence suite. `irreducible_bias` makes
  // both polynomials irreducible, where the symbol decides.
  qb::AlgebraSpec spec(bool irreducible_bias);

 private:
  const qb::GF2Field* f_;
  std::mt19937_64 rng_;
};

}  // namespace qbtool

#endif  // QBTOOL_GENERATORS_HPP_
