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

#include "quatbranch/series.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <stdexcept>

namespace qb {
namespace {

int clamp_prec(long long p) {
  if (p >= kInfPrec) return kInfPrec;
  if (p <= -kInfPrec) throw PrecisionError("precision underflow");
  return static_cast<int>(p);
}

int floor_div2(int p) { return p >= 0 ? p / 2 : -((-p + 1) / 2); }

void same_field(const Series& a, const Series& b) {
  if (!(a.field() == b.field())) throw FieldError("mixing series over different residue fields");
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::string Ideal::to_string() const {
  if (zero) return "(0)";
  if (val == 0) return "O";
  return "(t^" + std::to_string(val) + ")";
}

Series::Series() : f_(&GF2Field::standard(1)) {}

Series Series::zero(const GF2Field& f, int prec) {
  Series s;
  s.f_ = &f;
  s.prec_ = std::min(prec, kInfPrec);
  s.lead_ = s.prec_;
  return s;
}

Series Series::monomial(const GF2Field& f, FieldElem c, int e, int prec) {
  return from_coeffs(f, e, {c}, prec);
}

Series Series::from_coeffs(const GF2Field& f, int lo, std::vector<FieldElem> c, int prec) {
  for (FieldElem x : c) {
    if (x >= f.size()) throw FieldError("coefficient outside residue field");
  }
  Series s;
  s.f_ = &f;
  s.lead_ = lo;
  s.prec_ = std::min(prec, kInfPrec);
  s.coeffs_ = std::move(c);
  s.normalize();
  return s;
}

void Series::normalize() {
  if (!is_exact()) {
    long long keep = static_cast<long long>(prec_) - lead_;
    if (keep < static_cast<long long>(coeffs_.size()))
      coeffs_.resize(static_cast<std::size_t>(std::max(0LL, keep)));
  }
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    lead_ = prec_;
    return;
  }
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    lead_ += static_cast<int>(first);
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

FieldElem Series::coeff(int e) const {
  if (e >= prec_) throw PrecisionError("coefficient of t^" + std::to_string(e) + " not known");
  if (coeffs_.empty() || e < lead_ || e > last_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(e - lead_)];
}

Series Series::operator+(const Series& o) const {
  same_field(*this, o);
  const int p = std::min(prec_, o.prec_);
  if (o.is_zero()) return truncate(p);
  if (is_zero()) return o.truncate(p);
  const int lo = std::min(lead_, o.lead_);
  int hi = std::max(last_exp(), o.last_exp());
  if (p < kInfPrec) hi = std::min(hi, p - 1);
  Series r = zero(*f_, p);
  if (hi < lo) return r;
  r.lead_ = lo;
  r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = lead_ + static_cast<int>(i);
    if (e > hi) break;
    r.coeffs_[static_cast<std::size_t>(e - lo)] ^= coeffs_[i];
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    const int e = o.lead_ + static_cast<int>(i);
    if (e > hi) break;
    r.coeffs_[static_cast<std::size_t>(e - lo)] ^= o.coeffs_[i];
  }
  r.normalize();
  return r;
}

Series Series::operator*(const Series& o) const {
  same_field(*this, o);
  // An exact factor contributes no precision bound of its own.
  const long long pa = is_exact() ? kInfPrec : static_cast<long long>(prec_) + o.val();
  const long long pb = o.is_exact() ? kInfPrec : static_cast<long long>(o.prec_) + val();
  const int p = clamp_prec(std::min(pa, pb));
  if (is_zero() || o.is_zero()) return zero(*f_, p);
  const int lo = lead_ + o.lead_;
  int hi = last_exp() + o.last_exp();
  if (p < kInfPrec) hi = std::min(hi, p - 1);
  Series r = zero(*f_, p);
  if (hi < lo) return r;
  r.lead_ = lo;
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  r.coeffs_.assign(n, 0);
  const bool binary = f_->tau() == 1;
  for (std::size_t i = 0; i < coeffs_.size() && i < n; ++i) {
    const FieldElem a = coeffs_[i];
    if (a == 0) continue;
    const std::size_t lim = std::min(o.coeffs_.size(), n - i);
    if (binary) {
      for (std::size_t j = 0; j < lim; ++j) r.coeffs_[i + j] ^= o.coeffs_[j];
    } else {
      for (std::size_t j = 0; j < lim; ++j) r.coeffs_[i + j] ^= f_->mul(a, o.coeffs_[j]);
    }
  }
  r.normalize();
  return r;
}

Series Series::operator/(const Series& o) const {
  same_field(*this, o);
  if (o.is_exact() && o.is_monomial()) {
    return shift(-o.lead_).scale(f_->inv(o.coeffs_[0]));
  }
  return *this * o.inv();
}

Series Series::scale(FieldElem c) const {
  if (c == 0) return zero(*f_, prec_);
  Series r = *this;
  if (c != 1) {
    for (auto& x : r.coeffs_) x = f_->mul(x, c);
  }
  return r;
}

Series Series::shift(int k) const {
  Series r = *this;
  if (!is_exact()) r.prec_ = clamp_prec(static_cast<long long>(prec_) + k);
  r.lead_ = coeffs_.empty() ? r.prec_ : lead_ + k;
  return r;
}

Series Series::square() const {
  Series r = zero(*f_, is_exact() ? kInfPrec : clamp_prec(2LL * prec_));
  if (is_zero()) return r;
  r.lead_ = 2 * lead_;
  r.coeffs_.assign(2 * coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[2 * i] = f_->square(coeffs_[i]);
  r.normalize();
  return r;
}

Series Series::inv(int rel_prec) const {
  if (is_zero()) {
    if (is_exact()) throw std::domain_error("division by exact zero");
    throw PrecisionError("inverting an element indistinguishable from zero");
  }
  const FieldElem u0inv = f_->inv(coeffs_[0]);
  if (is_exact() && is_monomial()) return monomial(*f_, u0inv, -lead_);
  const int r = is_exact() ? rel_prec : prec_ - lead_;
  std::vector<FieldElem> w(static_cast<std::size_t>(r), 0);
  for (int n = 0; n < r; ++n) {
    FieldElem acc = n == 0 ? 1 : 0;
    const int kmax = std::min<int>(n, static_cast<int>(coeffs_.size()) - 1);
    for (int k = 1; k <= kmax; ++k) acc ^= f_->mul(coeffs_[static_cast<std::size_t>(k)],
                                                   w[static_cast<std::size_t>(n - k)]);
    w[static_cast<std::size_t>(n)] = f_->mul(acc, u0inv);
  }
  return from_coeffs(*f_, -lead_, std::move(w), -lead_ + r);
}

std::optional<Series> Series::sqrt() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = lead_ + static_cast<int>(i);
    if ((e & 1) && coeffs_[i] != 0) return std::nullopt;
  }
  if (!is_exact()) throw PrecisionError("square root of a truncated element");
  Series e, o;
  split_even_odd(&e, &o);
  return e;
}

void Series::split_even_odd(Series* ev, Series* od) const {
  const int pe = is_exact() ? kInfPrec : floor_div2(prec_ + 1);
  const int po = is_exact() ? kInfPrec : floor_div2(prec_);
  *ev = zero(*f_, pe);
  *od = zero(*f_, po);
  if (is_zero()) return;
  std::vector<FieldElem> ce, co;
  const int lo = floor_div2(lead_);
  const int hi = floor_div2(last_exp());
  ce.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  co.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = lead_ + static_cast<int>(i);
    const int h = floor_div2(e);
    auto& dst = (e & 1) ? co : ce;
    dst[static_cast<std::size_t>(h - lo)] = f_->sqrt(coeffs_[i]);
  }
  *ev = from_coeffs(*f_, lo, std::move(ce), pe);
  *od = from_coeffs(*f_, lo, std::move(co), po);
}

Series Series::derivative() const {
  const int p = is_exact() ? kInfPrec : prec_ - 1;
  if (is_zero()) return zero(*f_, p);
  std::vector<FieldElem> c(coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if ((lead_ + static_cast<int>(i)) & 1) c[i] = coeffs_[i];
  }
  return from_coeffs(*f_, lead_ - 1, std::move(c), p);
}

Series Series::truncate(int p) const {
  if (p >= prec_) return *this;
  Series r = *this;
  r.prec_ = p;
  r.normalize();
  return r;
}

Series Series::reduce_mod(int p) const {
  if (p > prec_) throw PrecisionError("reduction below the known precision");
  Series r = *this;
  r.prec_ = p;
  r.normalize();
  r.prec_ = kInfPrec;
  if (r.coeffs_.empty()) r.lead_ = kInfPrec;
  return r;
}

bool Series::operator==(const Series& o) const {
  return *f_ == *o.f_ && prec_ == o.prec_ && coeffs_ == o.coeffs_ &&
         (coeffs_.empty() || lead_ == o.lead_);
}

bool Series::equal_mod(const Series& o, int p) const {
  if (p > prec_ || p > o.prec_) throw PrecisionError("comparison beyond known precision");
  return (*this + o).truncate(p).is_zero();
}

std::strong_ordering Series::compare(const Series& o) const {
  if (auto c = prec_ <=> o.prec_; c != 0) return c;
  if (auto c = coeffs_.empty() <=> o.coeffs_.empty(); c != 0) return c;
  if (!coeffs_.empty()) {
    if (auto c = lead_ <=> o.lead_; c != 0) return c;
  }
  return coeffs_ <=> o.coeffs_;
}

std::size_t Series::hash() const {
  std::size_t h = static_cast<std::size_t>(prec_) * 0x9e3779b97f4a7c15ULL;
  if (!coeffs_.empty()) h ^= static_cast<std::size_t>(lead_ + 0x1234567) * 0xff51afd7ed558ccdULL;
  for (FieldElem c : coeffs_) h = (h ^ c) * 0x100000001b3ULL + 0x9e37;
  return h;
}

std::string Series::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const FieldElem c = coeffs_[i];
    if (c == 0) continue;
    const int e = lead_ + static_cast<int>(i);
    std::string cs = render_coeff(c);
    if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
    std::string term;
    if (e == 0) {
      term = cs;
    } else {
      if (c != 1) term = cs + "*";
      term += e == 1 ? "t" : "t^" + std::to_string(e);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  if (out.empty()) out = "0";
  if (!is_exact()) out += " (mod t^" + std::to_string(prec_) + ")";
  return out;
}

Series parse_series(const GF2Field& f, const std::string& input) {
  std::string text = trim(input);
  int prec = kInfPrec;
  static const std::regex mod_re(R"(\(\s*mod\s+t(?:\s*\^\s*(-?\d+))?\s*\)\s*$)");
  std::smatch m;
  if (std::regex_search(text, m, mod_re)) {
    prec = m[1].matched ? std::stoi(m[1].str()) : 1;
    text = trim(text.substr(0, static_cast<std::size_t>(m.position(0))));
  }
  if (text.empty()) throw ParseError("empty element");

  std::vector<std::string> terms;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in: " + input);
    if (ch == '+' && depth == 0) {
      terms.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in: " + input);
  terms.push_back(trim(cur));

  auto parse_texp = [&](const std::string& s) -> int {
    std::string t = trim(s);
    if (t.empty() || t[0] != 't') throw ParseError("bad term: " + s);
    t = trim(t.substr(1));
    if (t.empty()) return 1;
    if (t[0] != '^') throw ParseError("bad term: " + s);
    t = trim(t.substr(1));
    if (!t.empty() && t.front() == '(' && t.back() == ')') t = trim(t.substr(1, t.size() - 2));
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw ParseError("bad exponent: " + s);
    }
    if (used != t.size()) throw ParseError("bad exponent: " + s);
    return e;
  };

  std::map<int, FieldElem> acc;
  for (const std::string& term : terms) {
    if (term.empty()) throw ParseError("empty term in: " + input);
    std::string coeff_txt, t_txt;
    if (term[0] == '(') {
      const std::size_t close = term.find(')');
      coeff_txt = term.substr(1, close - 1);
      std::string rest = trim(term.substr(close + 1));
      if (!rest.empty() && rest[0] == '*') rest = trim(rest.substr(1));
      t_txt = rest;
    } else if (term[0] == 't') {
      coeff_txt = "1";
      t_txt = term;
    } else {
      const std::size_t star = term.find('*');
      if (star == std::string::npos) {
        coeff_txt = term;
      } else {
        coeff_txt = term.substr(0, star);
        t_txt = trim(term.substr(star + 1));
        if (t_txt.empty()) throw ParseError("dangling '*' in: " + term);
      }
    }
    FieldElem c = 0;
    try {
      c = parse_coeff(f, coeff_txt);
    } catch (const FieldError& e) {
      throw ParseError(e.what());
    }
    const int e = t_txt.empty() ? 0 : parse_texp(t_txt);
    if (c != 0 && e >= prec) throw ParseError("term t^" + std::to_string(e) + " beyond precision");
    acc[e] ^= c;
  }
  if (acc.empty()) return Series::zero(f, prec);
  const int lo = acc.begin()->first;
  const int hi = acc.rbegin()->first;
  std::vector<FieldElem> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [e, v] : acc) c[static_cast<std::size_t>(e - lo)] = v;
  return Series::from_coeffs(f, lo, std::move(c), prec);
}

}  // namespace qb
