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

#include "qbtool/generators.hpp"

#include <vector>

namespace qbtool {

using qb::FieldElem;
using qb::Mat2;
using qb::PolyClass;
using qb::Series;

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over the pair
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + index + 0x632be59bd9b4e019ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int InstanceGen::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

FieldElem InstanceGen::nonzero_coeff() {
  return static_cast<FieldElem>(uniform(1, static_cast<int>(f_->size()) - 1));
}

Series InstanceGen::poly(int lo, int hi, double density) {
  std::bernoulli_distribution on(density);
  std::vector<FieldElem> c;
  for (int e = lo; e <= hi; ++e) c.push_back(on(rng_) ? nonzero_coeff() : 0);
  return Series::from_coeffs(*f_, lo, std::move(c));
}

Series InstanceGen::unit(int hi) {
  Series u = Series::monomial(*f_, nonzero_coeff(), 0);
  if (hi >= 1) u += poly(1, hi, 0.4);
  return u;
}

Mat2 InstanceGen::conjugator() {
  const Series one = Series::one(*f_);
  const Series zero = Series::zero(*f_);
  Mat2 g = Mat2::identity(*f_);
  for (int k = 0; k < 3; ++k) {
    const Series p = poly(0, 2);
    g = g * ((rng_() & 1) ? Mat2{one, p, zero, one} : Mat2{one, zero, p, one});
    if (rng_() % 3 == 0) g = g * Mat2{zero, one, one, zero};
  }
  if (f_->tau() > 1) g = g * Mat2{one, zero, zero, Series::monomial(*f_, nonzero_coeff(), 0)};
  return g;
}

Mat2 InstanceGen::integral(int lo, int hi) {
  for (;;) {
    Mat2 q{poly(lo, hi, 0.3), poly(lo, hi, 0.3), poly(lo, hi, 0.3), poly(lo, hi, 0.3)};
    if (q.trace().val() < 0 || q.det().val() < 0) continue;
    if (q.is_scalar()) continue;
    return q;
  }
}

namespace {

// Companion matrix of X^2 + aX + b.
Mat2 companion(const Series& a, const Series& b) {
  const qb::GF2Field& f = a.field();
  return Mat2{Series::zero(f), b, Series::one(f), a};
}

}  // namespace

Mat2 InstanceGen::with_class(PolyClass cls) {
  const qb::GF2Field& f = *f_;
  Mat2 q;
  switch (cls) {
    case PolyClass::ReducibleSep: {
      const Series alpha = poly(0, 2);
      const Series a = unit(2).shift(uniform(0, 2));
      q = (rng_() & 1) ? Mat2{alpha + a, Series::zero(f), Series::zero(f), alpha}
                       : companion(a, alpha * (alpha + a));
      break;
    }
    case PolyClass::UnramSep: {
      FieldElem w = 1;
      while (f.trace(w) != 1) w = nonzero_coeff();
      const Series a = unit(2).shift(uniform(0, 2));
      q = companion(a, a.square() * (Series::monomial(f, w, 0) + poly(1, 3)));
      break;
    }
    case PolyClass::RamSep: {
      const int k = uniform(1, 3);
      const int t = uniform(1, k);
      const Series a = unit(2).shift(k);
      q = companion(a, a.square() * unit(2).shift(1 - 2 * t));
      break;
    }
    case PolyClass::ReducibleInsep: {
      const Series alpha = poly(0, 2);
      q = (rng_() & 1) ? Mat2{alpha, unit(2).shift(uniform(-2, 2)), Series::zero(f), alpha}
                       : companion(Series::zero(f), alpha.square());
      if (q.is_scalar()) q.b = Series::one(f);
      break;
    }
    case PolyClass::RamInsep: {
      const int t = uniform(0, 2);
      const Series e = poly(0, 2);
      q = companion(Series::zero(f), e.square() + unit(1).square().shift(2 * t + 1));
      break;
    }
  }
  return qb::conjugate(conjugator(), q);
}

std::pair<Mat2, Mat2> InstanceGen::pair(std::string* family) {
  const qb::GF2Field& f = *f_;
  const Series zero = Series::zero(f);
  auto diag = [&](const Series& a, const Series& alpha) { return Mat2{a + alpha, zero, zero, alpha}; };
  auto upper = [&](const Series& a, const Series& alpha) { return Mat2{alpha, a, zero, alpha}; };
  auto lower = [&](const Series& a, const Series& alpha) { return Mat2{alpha, zero, a, alpha}; };
  auto sep = [&] { return unit(2).shift(uniform(0, 3)); };

  std::string name;
  Mat2 q1, q2;
  const int pick = uniform(0, 9);
  if (pick <= 2) {
    name = "random";
    q1 = integral();
    q2 = integral();
  } else if (pick == 3) {
    name = "diagonal";
    q1 = diag(sep(), poly(0, 2));
    q2 = diag(sep(), poly(0, 2));
  } else if (pick == 4) {
    name = "triangular";
    const Series a2 = sep();
    const Series alpha2 = poly(0, 2);
    q1 = diag(sep(), poly(0, 2));
    q2 = Mat2{alpha2 + a2, unit(2).shift(uniform(-3, 3)), zero, alpha2};
  } else if (pick == 5) {
    name = "rotated";
    // theta = 1 + pi^k, so 1 + theta is a monomial and q2 stays exact
    int k = uniform(-3, 2);
    if (k >= 0) ++k;
    const Series theta = Series::one(f) + Series::monomial(f, 1, k);
    const Series inv = Series::monomial(f, 1, -k);
    const Series a2 = sep();
    const Series alpha2 = poly(0, 2);
    q1 = diag(sep(), poly(0, 2));
    q2 = Mat2{a2 * theta * inv + alpha2, a2 * theta * inv, a2 * inv, a2 * inv + alpha2};
    if (q2.trace().val() < 0 || q2.det().val() < 0) q2 = diag(a2, alpha2);
  } else if (pick == 6) {
    name = "foliage";
    q1 = upper(unit(2), poly(0, 2));
    q2 = (rng_() & 1) ? lower(unit(2).shift(-uniform(0, 3)), poly(0, 2))
                      : upper(unit(2).shift(uniform(0, 3)), poly(0, 2));
  } else if (pick == 7) {
    name = "mixed";
    const Series a1 = sep();
    const Series alpha1 = poly(0, 2);
    q1 = (rng_() & 1) ? Mat2{alpha1, zero, a1, a1 + alpha1} : diag(a1, alpha1);
    q2 = upper(unit(2).shift(uniform(0, 3)), poly(0, 2));
  } else {
    name = "classes";
    const PolyClass c1 = static_cast<PolyClass>(uniform(0, 4));
    const PolyClass c2 = static_cast<PolyClass>(uniform(0, 4));
    q1 = with_class(c1);
    q2 = with_class(c2);
  }
  if (family) *family = name;
  const Mat2 g = conjugator();
  return {qb::conjugate(g, q1), qb::conjugate(g, q2)};
}

qb::AlgebraSpec InstanceGen::spec(bool irreducible_bias) {
  for (;;) {
    auto draw = [&]() {
      if (!irreducible_bias) return qb::classify(poly(0, 3), poly(0, 3));
      static constexpr PolyClass kIrreducible[] = {PolyClass::UnramSep, PolyClass::RamSep,
                                                   PolyClass::RamInsep};
      const Mat2 q = with_class(kIrreducible[uniform(0, 2)]);
      return qb::min_poly(q);
    };
    const qb::QuadPoly m1 = draw();
    const qb::QuadPoly m2 = draw();
    const qb::AlgebraSpec s = qb::AlgebraSpec::make(poly(-3, 3), m1, m2);
    if (s.is_quaternion()) return s;
  }
}

}  // namespace qbtool
