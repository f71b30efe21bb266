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

#ifndef QUATBRANCH_FIELD_HPP_
#define QUATBRANCH_FIELD_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qb {

// Element of F_{2^tau}: bit i is the coefficient of g^i in the modulus basis.
using FieldElem = std::uint32_t;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// True iff the polynomial with bit pattern `poly` (bit i = coeff of x^i)
// is irreducible over F_2. Exhaustive trial division.
bool is_irreducible_gf2(std::uint32_t poly);

// Lowest-valued irreducible polynomial of degree tau.
std::uint32_t default_modulus(int tau);

// The residue field F_{2^tau}. Instances are interned and live for the whole
// program, so raw pointers to them are stable.
class GF2Field {
 public:
  static constexpr int kMaxTau = 16;

  // Throws FieldError on a bad degree or a reducible modulus.
  static const GF2Field& get(int tau, std::uint32_t modulus);
  static const GF2Field& standard(int tau) { return get(tau, default_modulus(tau)); }

  int tau() const { return tau_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return 1u << tau_; }
  FieldElem generator() const { return tau_ == 1 ? 1u : 2u; }

  FieldElem add(FieldElem a, FieldElem b) const { return a ^ b; }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a == 0 || b == 0) return 0;
    if (tau_ == 1) return 1;
    return exp_[log_[a] + log_[b]];
  }
  FieldElem inv(FieldElem a) const;
  FieldElem sqrt(FieldElem a) const { return sqrt_[a]; }
  FieldElem square(FieldElem a) const { return mul(a, a); }
  int trace(FieldElem a) const { return __builtin_parity(a & trace_mask_); }

  // Some x with x^2 + x = a, or nothing when trace(a) == 1.
  bool solve_as(FieldElem a, FieldElem* root) const;

  bool operator==(const GF2Field& o) const {
    return tau_ == o.tau_ && modulus_ == o.modulus_;
  }

 private:
  GF2Field(int tau, std::uint32_t modulus);
  FieldElem mul_slow(FieldElem a, FieldElem b) const;

  int tau_;
  std::uint32_t modulus_;
  std::uint32_t trace_mask_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<FieldElem> exp_;
  std::vector<FieldElem> sqrt_;
  std::vector<FieldElem> as_root_;  // as_root_[a] valid when trace(a)==0
};

// Free-function spellings used throughout the tests.
inline FieldElem ff_add(const GF2Field&, FieldElem a, FieldElem b) { return a ^ b; }
inline FieldElem ff_mul(const GF2Field& f, FieldElem a, FieldElem b) { return f.mul(a, b); }
inline FieldElem ff_inv(const GF2Field& f, FieldElem a) { return f.inv(a); }
inline FieldElem ff_sqrt(const GF2Field& f, FieldElem a) { return f.sqrt(a); }
inline int ff_trace(const GF2Field& f, FieldElem a) { return f.trace(a); }

// Residue-field coefficient grammar: polynomial in g, e.g. "g^2+1".
std::string render_coeff(FieldElem c);
FieldElem parse_coeff(const GF2Field& f, const std::string& text);

}  // namespace qb

#endif  // QUATBRANCH_FIELD_HPP_
