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

#ifndef QUATBRANCH_SERIES_HPP_
#define QUATBRANCH_SERIES_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quatbranch/field.hpp"

namespace qb {

// Default number of significant coefficient slots produced by inversion.
inline constexpr int kDefaultPrec = 64;
// Absolute precision used to mark exact Laurent polynomials.
inline constexpr int kInfPrec = 1 << 28;

// Raised when a result cannot be certified from the visible coefficients.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what)
      : std::runtime_error("UndeterminedAtPrecision: " + what) {}
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fractional ideal (pi^val) of K, or the zero ideal.
struct Ideal {
  bool zero = true;
  int val = 0;

  static Ideal Zero() { return {true, 0}; }
  static Ideal Pow(int v) { return {false, v}; }
  static Ideal Unit() { return {false, 0}; }

  // Valuation with the zero ideal sent to kInfPrec.
  int ord() const { return zero ? kInfPrec : val; }
  // I contains J iff ord(I) <= ord(J).
  bool contains(const Ideal& j) const { return ord() <= j.ord(); }
  bool operator==(const Ideal& o) const { return ord() == o.ord(); }
  std::string to_string() const;
};

// Element of F_{2^tau}((pi)) known modulo pi^prec, or exactly.
class Series {
 public:
  Series();  // exact zero over F_2

  static Series zero(const GF2Field& f, int prec = kInfPrec);
  static Series one(const GF2Field& f) { return monomial(f, 1, 0); }
  static Series monomial(const GF2Field& f, FieldElem c, int e, int prec = kInfPrec);
  // Coefficients for exponents lo, lo+1, ...; trailing exponents up to prec
  // that are not listed are zero.
  static Series from_coeffs(const GF2Field& f, int lo, std::vector<FieldElem> c,
                            int prec = kInfPrec);

  const GF2Field& field() const { return *f_; }
  bool is_exact() const { return prec_ >= kInfPrec; }
  int prec() const { return prec_; }
  // Zero modulo pi^prec (or exactly zero when exact).
  bool is_zero() const { return coeffs_.empty(); }
  // Valuation; for a zero element, its precision.
  int val() const { return coeffs_.empty() ? prec_ : lead_; }
  FieldElem lead_coeff() const { return coeffs_.empty() ? 0 : coeffs_[0]; }
  // Largest exponent carrying a nonzero coefficient; requires !is_zero().
  int last_exp() const { return lead_ + static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of pi^e. Throws PrecisionError when e >= prec.
  FieldElem coeff(int e) const;
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  bool is_monomial() const { return coeffs_.size() == 1; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const { return *this + o; }
  Series operator*(const Series& o) const;
  Series operator/(const Series& o) const;
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series scale(FieldElem c) const;
  Series shift(int k) const;  // multiply by pi^k
  Series square() const;      // Frobenius, precision doubles
  // Multiplicative inverse to `rel_prec` significant slots (exact inputs) or
  // to the available relative precision (truncated inputs).
  Series inv(int rel_prec = kDefaultPrec) const;
  // Square root by even/odd split; nullopt when a visible odd coefficient is
  // nonzero. Throws PrecisionError for a truncated input with no visible
  // obstruction.
  std::optional<Series> sqrt() const;
  // Even/odd split x = e^2 + pi*o^2 (both parts returned as roots).
  void split_even_odd(Series* e, Series* o) const;
  Series derivative() const;
  // Reduce the absolute precision to min(prec, p).
  Series truncate(int p) const;
  // Drop all terms of exponent >= p and mark exact (center reduction).
  Series reduce_mod(int p) const;

  // Structural equality: same precision and same coefficients.
  bool operator==(const Series& o) const;
  bool operator!=(const Series& o) const { return !(*this == o); }
  // Agreement modulo pi^p (p must not exceed either precision).
  bool equal_mod(const Series& o, int p) const;
  // Ordering for use as a map key (exact elements).
  std::strong_ordering compare(const Series& o) const;
  std::size_t hash() const;

  std::string to_string() const;

 private:
  void normalize();

  const GF2Field* f_;
  int lead_ = 0;
  int prec_ = kInfPrec;
  std::vector<FieldElem> coeffs_;
};

// Parse the element grammar, e.g. "t^-3 + 1 + g*t^2 (mod t^5)".
Series parse_series(const GF2Field& f, const std::string& text);

// Function spellings.
inline Series s_add(const Series& a, const Series& b) { return a + b; }
inline Series s_mul(const Series& a, const Series& b) { return a * b; }
inline Series s_inv(const Series& a, int rel_prec = kDefaultPrec) { return a.inv(rel_prec); }
inline int s_val(const Series& a) { return a.val(); }
inline Series s_truncate(const Series& a, int p) { return a.truncate(p); }
inline std::optional<Series> s_sqrt(const Series& a) { return a.sqrt(); }

}  // namespace qb

#endif  // QUATBRANCH_SERIES_HPP_
