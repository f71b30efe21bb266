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

#include "quatbranch/field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace qb {
namespace {

int degree(std::uint32_t p) { return p == 0 ? -1 : 31 - __builtin_clz(p); }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = degree(m);
  for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
  return a;
}

}  // namespace

bool is_irreducible_gf2(std::uint32_t poly) {
  const int n = degree(poly);
  if (n < 1) return false;
  for (std::uint32_t d = 2; degree(d) <= n / 2; ++d) {
    if (poly_mod(poly, d) == 0) return false;
  }
  return true;
}

std::uint32_t default_modulus(int tau) {
  if (tau < 1 || tau > GF2Field::kMaxTau) throw FieldError("tau out of range");
  for (std::uint32_t p = 1u << tau;; ++p) {
    if (is_irreducible_gf2(p)) return p;
  }
}

const GF2Field& GF2Field::get(int tau, std::uint32_t modulus) {
  static std::mutex mu;
  static std::map<std::pair<int, std::uint32_t>, std::unique_ptr<GF2Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(tau, modulus);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  std::unique_ptr<GF2Field> f(new GF2Field(tau, modulus));
  const GF2Field& ref = *f;
  cache.emplace(key, std::move(f));
  return ref;
}

GF2Field::GF2Field(int tau, std::uint32_t modulus) : tau_(tau), modulus_(modulus) {
  if (tau < 1 || tau > kMaxTau) throw FieldError("tau must be in [1,16]");
  if (degree(modulus) != tau) throw FieldError("modulus degree must equal tau");
  if (!is_irreducible_gf2(modulus)) throw FieldError("modulus is reducible over F_2");

  const std::uint32_t q = size();
  log_.assign(q, 0);
  exp_.assign(2 * q, 0);
  if (tau_ > 1) {
    // Find a primitive element by brute force.
    for (FieldElem cand = 2; cand < q; ++cand) {
      FieldElem x = 1;
      std::uint32_t order = 0;
      do {
        x = mul_slow(x, cand);
        ++order;
      } while (x != 1);
      if (order != q - 1) continue;
      x = 1;
      for (std::uint32_t i = 0; i < q - 1; ++i) {
        exp_[i] = x;
        exp_[i + q - 1] = x;
        log_[x] = i;
        x = mul_slow(x, cand);
      }
      break;
    }
  } else {
    exp_[0] = exp_[1] = 1;
  }

  sqrt_.assign(q, 0);
  for (FieldElem x = 0; x < q; ++x) sqrt_[mul(x, x)] = x;

  for (int i = 0; i < tau_; ++i) {
    FieldElem x = 1u << i, acc = 0;
    for (int k = 0; k < tau_; ++k) {
      acc ^= x;
      x = mul(x, x);
    }
    if (acc & 1u) trace_mask_ |= 1u << i;
  }

  as_root_.assign(q, 0);
  for (FieldElem x = 0; x < q; ++x) as_root_[mul(x, x) ^ x] = x;
}

FieldElem GF2Field::mul_slow(FieldElem a, FieldElem b) const {
  std::uint32_t acc = 0;
  for (int i = 0; i < tau_; ++i) {
    if (b & (1u << i)) acc ^= a << i;
  }
  return poly_mod(acc, modulus_);
}

FieldElem GF2Field::inv(FieldElem a) const {
  if (a == 0) throw FieldError("inverse of zero in residue field");
  if (tau_ == 1) return 1;
  const std::uint32_t n = size() - 1;
  return exp_[(n - log_[a]) % n];
}

bool GF2Field::solve_as(FieldElem a, FieldElem* root) const {
  if (trace(a) != 0) return false;
  *root = as_root_[a];
  return true;
}

std::string render_coeff(FieldElem c) {
  if (c == 0) return "0";
  std::string out;
  for (int i = 31; i >= 0; --i) {
    if (!(c & (1u << i))) continue;
    if (!out.empty()) out += "+";
    if (i == 0) out += "1";
    else if (i == 1) out += "g";
    else out += "g^" + std::to_string(i);
  }
  return out;
}

FieldElem parse_coeff(const GF2Field& f, const std::string& text) {
  std::uint64_t acc = 0;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool expect_term = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    if (!expect_term) {
      if (text[i] != '+') throw FieldError("bad coefficient: " + text);
      ++i;
      expect_term = true;
      continue;
    }
    if (text[i] == '0' || text[i] == '1') {
      if (text[i] == '1') acc ^= 1;
      ++i;
    } else if (text[i] == 'g') {
      ++i;
      int e = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t used = 0;
        e = std::stoi(text.substr(i), &used);
        i += used;
        if (e < 0 || e > 62) throw FieldError("bad exponent in coefficient");
      }
      acc ^= std::uint64_t{1} << e;
    } else {
      throw FieldError("bad coefficient: " + text);
    }
    expect_term = false;
  }
  if (expect_term) throw FieldError("bad coefficient: " + text);
  // Reduce modulo the field modulus.
  const int dm = degree(f.modulus());
  for (int d = 63; d >= dm; --d) {
    if (acc & (std::uint64_t{1} << d)) acc ^= std::uint64_t{f.modulus()} << (d - dm);
  }
  return static_cast<FieldElem>(acc);
}

}  // namespace qb
