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

#include "quatbranch/existence.hpp"

#include <random>
#include <vector>

namespace qb {

AlgebraSpec AlgebraSpec::make(const Series& lambda, const QuadPoly& m1, const QuadPoly& m2) {
  return {lambda, m1, m2, discriminant(lambda, m1, m2)};
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::I: return "i";
    case Condition::II: return "ii";
    case Condition::III: return "iii";
    case Condition::IV: return "iv";
    case Condition::V: return "v";
    case Condition::None: return "none";
  }
  return "?";
}

std::optional<Condition> parse_condition(const std::string& s) {
  for (Condition c : {Condition::I, Condition::II, Condition::III, Condition::IV, Condition::V,
                      Condition::None}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::pair<Series, Series> cyclic_presentation(const AlgebraSpec& spec) {
  if (spec.delta.is_zero()) throw std::domain_error("discriminant vanishes: not a quaternion algebra");
  const QuadPoly& m1 = spec.m1;
  const QuadPoly& m2 = spec.m2;
  if (!m1.a.is_zero()) return {m1.b / m1.a.square(), spec.delta};
  if (!m2.a.is_zero()) return {m2.b / m2.a.square(), spec.delta};
  // Both inseparable, so delta = lambda^2. Shifting q2 by 1 turns b2 = 0
  // into b2 = 1 without changing lambda.
  const Series b2 = m2.b.is_zero() ? Series::one(m2.b.field()) : m2.b;
  return {m1.b * b2 / spec.lambda.square(), b2};
}

int cyclic_symbol(const Series& a, const Series& b) {
  if (b.is_zero()) throw std::domain_error("symbol needs b != 0");
  if (a.is_zero() && a.is_exact()) return 0;
  const Series r = a * (b.derivative() / b);
  if (r.prec() <= -1) throw PrecisionError("residue of " + r.to_string() + " is not visible");
  const FieldElem res = r.is_zero() ? 0 : (r.val() > -1 ? 0 : r.coeff(-1));
  return a.field().trace(res);
}

Series pair_form(const AlgebraSpec& spec, const Series& x, const Series& y, const Series& z,
                 const Series& w) {
  const QuadPoly& m1 = spec.m1;
  const QuadPoly& m2 = spec.m2;
  const Series num = x.square() + m1.a * x * y + m1.b * y.square() + z.square() + m2.a * z * w +
                     m2.b * w.square() + m1.a * z * y + m2.a * x * w;
  return num / (y * w);
}

std::optional<std::array<Series, 4>> search_pair(const AlgebraSpec& spec, const SearchBox& box) {
  const GF2Field& f = spec.lambda.field();
  std::vector<Series> mono;
  for (int e = box.lo; e <= box.hi; ++e) {
    for (FieldElem c = 1; c < f.size(); ++c) mono.push_back(Series::monomial(f, c, e));
  }
  std::vector<Series> with_zero = mono;
  with_zero.insert(with_zero.begin(), Series::zero(f));
  for (const Series& y : mono) {
    for (const Series& w : mono) {
      const Series yw = y * w;
      const Series target = spec.lambda * yw;
      for (const Series& x : with_zero) {
        for (const Series& z : with_zero) {
          const QuadPoly& m1 = spec.m1;
          const QuadPoly& m2 = spec.m2;
          const Series num = x.square() + m1.a * x * y + m1.b * y.square() + z.square() +
                             m2.a * z * w + m2.b * w.square() + m1.a * z * y + m2.a * x * w;
          const Series diff = num + target;
          if (diff.is_zero() && diff.is_exact()) return std::array<Series, 4>{x, y, z, w};
        }
      }
    }
  }
  return std::nullopt;
}

Series norm_form(const AlgebraSpec& spec, const Series& s, const Series& y, const Series& w) {
  return s.square() + spec.m1.a * s * y + spec.m2.a * s * w + spec.m1.b * y.square() +
         spec.m2.b * w.square() + spec.lambda * y * w;
}

namespace {

// Polar form B(v, e_j) = dN/dv_j at v.
Series polar(const AlgebraSpec& spec, const std::array<Series, 3>& v, int j) {
  const Series& s = v[0];
  const Series& y = v[1];
  const Series& w = v[2];
  switch (j) {
    case 0: return spec.m1.a * y + spec.m2.a * w;
    case 1: return spec.m1.a * s + spec.lambda * w;
    default: return spec.m2.a * s + spec.lambda * y;
  }
}

Series norm_of_basis(const AlgebraSpec& spec, int j) {
  switch (j) {
    case 0: return Series::one(spec.lambda.field());
    case 1: return spec.m1.b;
    default: return spec.m2.b;
  }
}

Series random_poly(const GF2Field& f, const SearchBox& box, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> exp(box.lo, box.hi);
  std::uniform_int_distribution<FieldElem> coef(0, f.size() - 1);
  const int k = kind(rng);
  if (k == 0) return Series::zero(f);
  if (k == 1) {
    FieldElem c = 0;
    while (c == 0) c = coef(rng);
    return Series::monomial(f, c, exp(rng));
  }
  std::uniform_int_distribution<int> width(0, std::min(4, box.hi - box.lo));
  const int lo = exp(rng);
  const int hi = std::min(box.hi, lo + width(rng));
  std::vector<FieldElem> c;
  for (int e = lo; e <= hi; ++e) c.push_back(coef(rng));
  return Series::from_coeffs(f, lo, c);
}

}  // namespace

std::optional<ZeroDivisorHit> search_zero_divisor(const AlgebraSpec& spec, const SearchBox& box) {
  const GF2Field& f = spec.lambda.field();
  std::mt19937_64 rng(box.seed);
  // A basis vector of norm zero is already a zero divisor.
  for (int j = 0; j < 3; ++j) {
    const Series nj = norm_of_basis(spec, j);
    if (nj.is_zero() && nj.is_exact()) {
      std::array<Series, 3> v{Series::zero(f), Series::zero(f), Series::zero(f)};
      v[static_cast<std::size_t>(j)] = Series::one(f);
      return ZeroDivisorHit{v, j};
    }
  }
  for (int n = 0; n < box.samples; ++n) {
    std::array<Series, 3> v{random_poly(f, box, rng), random_poly(f, box, rng),
                            random_poly(f, box, rng)};
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
    const Series nv = norm_form(spec, v[0], v[1], v[2]);
    if (nv.is_zero() && nv.is_exact()) return ZeroDivisorHit{v, -1};
    for (int j = 0; j < 3; ++j) {
      const Series b = polar(spec, v, j);
      if (b.is_zero()) continue;
      // N(v + d e_j) = N(v) + d B + d^2 N(e_j); with d = (B / N(e_j)) h this
      // is h^2 + h = N(v) N(e_j) / B^2.
      const Series c = nv * norm_of_basis(spec, j) / b.square();
      try {
        if (as_defect(c).ideal.zero) return ZeroDivisorHit{v, j};
      } catch (const PrecisionError&) {
      }
    }
  }
  return std::nullopt;
}

namespace {

bool reducible(const QuadPoly& m) {
  return m.cls == PolyClass::ReducibleSep || m.cls == PolyClass::ReducibleInsep;
}

Series root_of(const QuadPoly& m) {
  auto r = solve_quadratic(m.a, m.b);
  if (!r) throw std::logic_error("reducible polynomial without a root");
  return r->first;
}

// Witness for condition (i) with m1 reducible.
std::pair<Mat2, Mat2> witness_i(const AlgebraSpec& spec) {
  const GF2Field& f = spec.lambda.field();
  const Series one = Series::one(f);
  const Series zero = Series::zero(f);
  const Series alpha = root_of(spec.m1);
  const Mat2 q1{alpha, zero, one, alpha + spec.m1.a};
  // q2 = [[x, y],[z, x + a2]] with lambda = a1 x + alpha a2 + y.
  Series x = zero;
  Series y = spec.lambda + alpha * spec.m2.a;
  if (y.is_zero()) {
    x = one;
    y = y + spec.m1.a;
  }
  const Series z = (spec.m2.b + x * (x + spec.m2.a)) / y;
  return {q1, Mat2{x, y, z, x + spec.m2.a}};
}

// Witness for condition (iii): triangular pair built from a root of m1.
std::pair<Mat2, Mat2> witness_iii(const AlgebraSpec& spec) {
  const GF2Field& f = spec.lambda.field();
  const Series zero = Series::zero(f);
  const Series& a1 = spec.m1.a;
  const Series& a2 = spec.m2.a;
  const Series alpha = root_of(spec.m1);
  const Mat2 q1{a1 + alpha, zero, zero, alpha};
  const Series ia = Series::one(f) / a1;
  const Mat2 q2{(spec.lambda + a1 * a2 + a2 * alpha) * ia, zero, ia, (spec.lambda + a2 * alpha) * ia};
  return {q1, q2};
}

std::pair<Mat2, Mat2> swap(const std::pair<Mat2, Mat2>& p) { return {p.second, p.first}; }

AlgebraSpec swapped(const AlgebraSpec& s) { return {s.lambda, s.m2, s.m1, s.delta}; }

// Condition (v): both traces vanish, so the pair commutes.
ExistenceVerdict decide_v(const AlgebraSpec& spec) {
  const GF2Field& f = spec.lambda.field();
  const Series one = Series::one(f);
  const Series zero = Series::zero(f);
  ExistenceVerdict out;
  out.matched = Condition::V;
  out.commutative_note = true;
  const auto r1 = spec.m1.b.sqrt();
  const auto r2 = spec.m2.b.sqrt();
  if (r1 && r2) {
    if (r1->is_zero() && r2->is_zero()) {
      out.note = "both polynomials are X^2: any two roots in M2(K) are proportional nilpotents";
      out.matched = Condition::None;
      return out;
    }
    // q_i = alpha_i + c_i N with N nilpotent; pick c2 so the pair is independent.
    const Series c2 = (*r1 == *r2) ? Series::monomial(f, 1, 1) : one;
    const Mat2 q1{*r1, one, zero, *r1};
    const Mat2 q2{*r2, c2, zero, *r2};
    out.exists = true;
    out.witness = std::make_pair(q1, q2);
    return out;
  }
  if (!r1 && !r2) {
    // Both generate the unique inseparable quadratic extension; write
    // sqrt(b2) = k0 + k1 sqrt(b1).
    Series e1, o1, e2, o2;
    spec.m1.b.split_even_odd(&e1, &o1);
    spec.m2.b.split_even_odd(&e2, &o2);
    const Series k1 = o2 / o1;
    const Series k0 = e2 + k1 * e1;
    if (k0.is_zero()) {
      out.note = "sqrt(b2) is a multiple of sqrt(b1): no linearly independent pair";
      out.matched = Condition::None;
      return out;
    }
    const Mat2 q1{zero, spec.m1.b, one, zero};
    const Mat2 q2{k0, k1 * spec.m1.b, k1, k0};
    out.exists = true;
    out.witness = std::make_pair(q1, q2);
    return out;
  }
  out.note =
      "exactly one of b1, b2 is a square: the commuting partner of the field generator is a scalar";
  out.matched = Condition::None;
  return out;
}

}  // namespace

ExistenceVerdict decide(const AlgebraSpec& spec) {
  ExistenceVerdict out;
  const bool delta_zero = spec.delta.is_zero();
  if (delta_zero && !spec.delta.is_exact())
    throw PrecisionError("discriminant vanishes to its precision");

  if (!delta_zero) {
    if (reducible(spec.m1)) {
      out.exists = true;
      out.matched = Condition::I;
      out.witness = witness_i(spec);
      return out;
    }
    if (reducible(spec.m2)) {
      out.exists = true;
      out.matched = Condition::I;
      out.witness = swap(witness_i(swapped(spec)));
      return out;
    }
    const auto [a, b] = cyclic_presentation(spec);
    out.exists = splits(a, b);
    out.matched = out.exists ? Condition::II : Condition::None;
    return out;
  }

  if (!spec.m1.a.is_zero() && reducible(spec.m1)) {
    out.exists = true;
    out.matched = Condition::III;
    out.witness = witness_iii(spec);
    return out;
  }
  if (!spec.m2.a.is_zero() && reducible(spec.m2)) {
    out.exists = true;
    out.matched = Condition::IV;
    out.witness = swap(witness_iii(swapped(spec)));
    return out;
  }
  if (spec.m1.a.is_zero() && spec.m2.a.is_zero()) return decide_v(spec);
  return out;
}

}  // namespace qb
