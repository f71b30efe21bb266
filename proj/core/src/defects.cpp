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

#include "quatbranch/defects.hpp"

#include <algorithm>
#include <array>

namespace qb {
namespace {

void check_guard(const Series& a) {
  if (a.is_exact()) return;
  if (a.is_zero() || static_cast<long long>(a.prec()) < static_cast<long long>(a.val()) + kGuardSlots)
    throw PrecisionError("need " + std::to_string(kGuardSlots) +
                         " guard slots beyond the valuation, got " + a.to_string());
}

// Reduces a by elements of r^2+r until the answer is visible. On return
// x = a + h^2 + h. The ideal is (0) when x has positive valuation (or is
// exactly zero), O when x has valuation 0, else (pi^val(x)).
Ideal reduce_as(const Series& a, Series* h_out, Series* x_out) {
  const GF2Field& f = a.field();
  Series x = a;
  Series h = Series::zero(f);
  while (true) {
    if (x.is_zero()) {
      if (x.is_exact() || x.prec() >= 1) break;
      throw PrecisionError("Artin-Schreier reduction ran out of coefficients");
    }
    const int v = x.val();
    if (v > 0) break;
    const FieldElem u = x.lead_coeff();
    if (v < 0 && (v % 2 != 0)) {
      *h_out = h;
      *x_out = x;
      return Ideal::Pow(v);
    }
    Series k;
    if (v < 0) {
      k = Series::monomial(f, f.sqrt(u), v / 2);
    } else {
      FieldElem r = 0;
      if (!f.solve_as(u, &r)) {
        *h_out = h;
        *x_out = x;
        return Ideal::Unit();
      }
      k = Series::monomial(f, r, 0);
    }
    x = x + k.square() + k;
    h = h + k;
  }
  *h_out = h;
  *x_out = x;
  return Ideal::Zero();
}

// Sum x + x^2 + x^4 + ... for val(x) > 0, truncated at absolute precision p.
Series hensel_root(const Series& x, int p) {
  Series term = x.truncate(p);
  Series acc = Series::zero(x.field(), std::min(p, x.prec()));
  for (int guard = 0; guard < 64 && !term.is_zero(); ++guard) {
    acc = acc + term;
    if (term.val() >= p) break;
    term = term.square().truncate(p);
  }
  return acc.truncate(std::min(p, x.prec()));
}

}  // namespace

std::string to_string(PolyClass c) {
  switch (c) {
    case PolyClass::ReducibleSep: return "ReducibleSep";
    case PolyClass::UnramSep: return "UnramSep";
    case PolyClass::RamSep: return "RamSep";
    case PolyClass::ReducibleInsep: return "ReducibleInsep";
    case PolyClass::RamInsep: return "RamInsep";
  }
  return "?";
}

std::string to_string(Group g) {
  switch (g) {
    case Group::As: return "A^s";
    case Group::Ai: return "A^i";
    case Group::Bs: return "B^s";
    case Group::Bi: return "B^i";
  }
  return "?";
}

std::optional<PolyClass> parse_poly_class(const std::string& s) {
  static const std::array<PolyClass, 5> all = {PolyClass::ReducibleSep, PolyClass::UnramSep,
                                               PolyClass::RamSep, PolyClass::ReducibleInsep,
                                               PolyClass::RamInsep};
  for (PolyClass c : all) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

Group QuadPoly::group() const {
  switch (cls) {
    case PolyClass::ReducibleSep:
    case PolyClass::UnramSep: return Group::As;
    case PolyClass::RamSep: return Group::Bs;
    case PolyClass::ReducibleInsep: return Group::Ai;
    case PolyClass::RamInsep: return Group::Bi;
  }
  return Group::As;
}

DefectResult as_defect(const Series& a) {
  if (a.is_exact() && a.is_zero()) return {Ideal::Zero(), Series::zero(a.field())};
  check_guard(a);
  Series h, x;
  Ideal id = reduce_as(a, &h, &x);
  if (id.zero && !(x.is_exact() && x.is_zero())) {
    // Complete the witness to an actual root.
    const int p = x.is_exact() ? kDefaultPrec : x.prec();
    h = h + hensel_root(x, p);
  }
  return {id, h};
}

DefectResult quad_defect(const Series& a) {
  if (a.is_exact() && a.is_zero()) return {Ideal::Zero(), Series::zero(a.field())};
  check_guard(a);
  Series ev, od;
  a.split_even_odd(&ev, &od);
  if (od.is_zero()) {
    if (!a.is_exact()) throw PrecisionError("no odd coefficient visible in " + a.to_string());
    return {Ideal::Zero(), ev};
  }
  return {Ideal::Pow(2 * od.val() + 1), ev};
}

QuadPoly classify(const Series& a, const Series& b) {
  if (a.val() < 0 || b.val() < 0) throw NonIntegralError("quadratic coefficients must lie in O");
  QuadPoly m;
  m.a = a;
  m.b = b;
  if (a.is_zero()) {
    if (!a.is_exact()) throw PrecisionError("cannot decide separability of " + a.to_string());
    m.defect = quad_defect(b);
    if (m.defect.ideal.zero) {
      m.cls = PolyClass::ReducibleInsep;
    } else {
      m.cls = PolyClass::RamInsep;
      m.t = (m.defect.ideal.val - 1) / 2;
    }
    return m;
  }
  m.defect = as_defect(b / a.square());
  if (m.defect.ideal.zero) {
    m.cls = PolyClass::ReducibleSep;
  } else if (m.defect.ideal.val == 0) {
    m.cls = PolyClass::UnramSep;
  } else {
    m.cls = PolyClass::RamSep;
    m.t = (1 - m.defect.ideal.val) / 2;
  }
  return m;
}

Series solve_artin_schreier(const Series& a, int prec) {
  if (a.is_exact() && a.is_zero()) return a;
  check_guard(a);
  Series h, x;
  Ideal id = reduce_as(a, &h, &x);
  if (!id.zero) throw std::domain_error("r^2 + r = a has no root in K");
  return (h + hensel_root(x, prec)).truncate(std::min(prec, x.prec()));
}

std::optional<std::pair<Series, Series>> solve_quadratic(const Series& c, const Series& d) {
  if (c.is_zero()) {
    if (!c.is_exact()) throw PrecisionError("cannot decide separability of " + c.to_string());
    auto s = d.sqrt();
    if (!s) return std::nullopt;
    return std::make_pair(*s, *s);
  }
  const Series e = d / c.square();
  if (!as_defect(e).ideal.zero) return std::nullopt;
  const int p = e.is_exact() ? kDefaultPrec : e.prec();
  const Series r = c * solve_artin_schreier(e, p);
  return std::make_pair(r, r + c);
}

}  // namespace qb
