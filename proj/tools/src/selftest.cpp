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

#include "qbtool/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qbtool/generators.hpp"

namespace qbtool {

using qb::Comparison;
using qb::HalfInt;
using qb::Mat2;
using qb::PolyClass;
using qb::Series;
using qb::Verdict;

void RunConfig::validate() const {
  if (tau < 1 || tau > qb::GF2Field::kMaxTau) throw std::invalid_argument("--tau out of range");
  if (prec < 1) throw std::invalid_argument("--prec must be positive");
  if (radius < 0) throw std::invalid_argument("--radius must be nonnegative");
  if (margin < 0 || margin > radius) throw std::invalid_argument("--margin must lie in [0, radius]");
  if (count < 0) throw std::invalid_argument("--count must be nonnegative");
  if (format != "text" && format != "json") throw std::invalid_argument("--format is text or json");
  if (modulus != 0 && !qb::is_irreducible_gf2(modulus))
    throw std::invalid_argument("--modulus is not irreducible");
  if (modulus != 0 && (31 - __builtin_clz(modulus)) != tau)
    throw std::invalid_argument("--modulus degree differs from --tau");
}

const qb::GF2Field& RunConfig::field() const {
  return qb::GF2Field::get(tau, modulus == 0 ? qb::default_modulus(tau) : modulus);
}

namespace {

// Odometer over all coefficient vectors of support [lo, hi].
void for_each_poly(const qb::GF2Field& f, int lo, int hi, const std::function<void(const Series&)>& fn) {
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  std::vector<qb::FieldElem> c(n, 0);
  for (;;) {
    fn(Series::from_coeffs(f, lo, c));
    std::size_t i = 0;
    while (i < n && ++c[i] == f.size()) c[i++] = 0;
    if (i == n) return;
  }
}

int brute_max(const Series& a, int lo, int hi, bool artin_schreier) {
  int best = -qb::kInfPrec;
  for_each_poly(a.field(), lo, hi, [&](const Series& h) {
    Series r = h.square() + a;
    if (artin_schreier) r += h;
    best = std::max(best, r.is_zero() ? qb::kInfPrec : r.val());
  });
  return best;
}

}  // namespace

int brute_as_defect(const Series& a, int lo, int hi) { return brute_max(a, lo, hi, true); }
int brute_quad_defect(const Series& a, int lo, int hi) { return brute_max(a, lo, hi, false); }

namespace {

std::string cell_key(const qb::RelPos& rp) { return rp.cell + " " + qb::to_string(rp.kind); }

// Element support and brute-force grid per residue field size.
struct DefectGrid {
  int elem_lo, elem_hi, grid_lo, grid_hi;
};
DefectGrid defect_grid(int tau) {
  if (tau == 1) return {-6, 6, -4, 8};
  if (tau == 2) return {-4, 4, -2, 4};
  return {-2, 2, -1, 2};
}

bool defect_agrees(const Series& a, const DefectGrid& g, std::string* why) {
  const qb::DefectResult as = qb::as_defect(a);
  const int bas = brute_as_defect(a, g.grid_lo, g.grid_hi);
  const bool as_ok = as.ideal.zero ? bas >= 1 : bas == as.ideal.val;
  const qb::DefectResult qd = qb::quad_defect(a);
  const int bqd = brute_quad_defect(a, g.grid_lo, g.grid_hi);
  const bool qd_ok = qd.ideal.zero ? bqd == qb::kInfPrec : bqd == qd.ideal.val;
  if (!as_ok || !qd_ok) {
    *why = "defects of " + a.to_string() + ": as " + as.ideal.to_string() + " vs brute " +
           std::to_string(bas) + ", quad " + qd.ideal.to_string() + " vs brute " + std::to_string(bqd);
  }
  return as_ok && qd_ok;
}

// The prediction under the other reading of t for separable ramified factors.
qb::RelPos floor_convention(const qb::PairConfig& pc, const qb::RelPos& rp) {
  long long shift = 0;
  for (const qb::QuadPoly* m : {&pc.m1, &pc.m2}) {
    if (m->cls == PolyClass::RamSep) shift += 4LL * m->t;
  }
  qb::RelPos alt = rp;
  alt.df = rp.df + HalfInt::from_twice(shift);
  if (alt.df > HalfInt::of(0)) {
    alt.kind = qb::RelKind::Disjoint;
    alt.value = alt.df;
  } else {
    const HalfInt l1 = qb::stem_length(qb::branch_shape(pc.q1));
    const HalfInt l2 = qb::stem_length(qb::branch_shape(pc.q2));
    alt.kind = qb::RelKind::Overlap;
    alt.value = std::min({HalfInt::from_twice(-2 * alt.df.twice()), l1, l2});
  }
  return alt;
}

struct Outcome {
  std::string key;
  Verdict verdict = Verdict::Skip;
  std::string reason;
  std::string error;
  bool tsign = false;
  bool tsign_positive = false;
  bool tsign_floor = false;
  bool agreed = false;
  bool inconclusive = false;
};

Outcome run_pair(const qb::GF2Field& f, const qb::TreeOracle& oracle, std::uint64_t seed) {
  Outcome o;
  InstanceGen gen(f, seed);
  std::string family;
  const auto [q1, q2] = gen.pair(&family);
  o.key = "?";
  try {
    const qb::PairConfig pc = qb::make_pair(q1, q2);
    const qb::RelPos rp = qb::predict_relpos(pc);
    o.key = cell_key(rp);
    const qb::IntersectionMeasurement im = oracle.measure_intersection(q1, q2);
    const Comparison c = qb::compare_relpos(rp, im);
    o.verdict = c.verdict;
    o.reason = c.reason;
    if (c.verdict == Verdict::Mismatch) {
      o.reason += " [" + q1.to_string() + " | " + q2.to_string() + "; predicted " + rp.to_string() + "]";
    }
    const bool bs = pc.m1.cls == PolyClass::RamSep || pc.m2.cls == PolyClass::RamSep;
    if (bs && c.verdict != Verdict::Skip) {
      o.tsign = true;
      o.tsign_positive = c.verdict == Verdict::Match;
      o.tsign_floor = qb::compare_relpos(floor_convention(pc, rp), im).verdict == Verdict::Match;
    }
  } catch (const std::exception& e) {
    o.error = std::string(e.what()) + " [" + q1.to_string() + " | " + q2.to_string() + "]";
  }
  return o;
}

Outcome run_shape(const qb::GF2Field& f, const qb::TreeOracle& oracle, std::uint64_t seed,
                  std::size_t index) {
  Outcome o;
  InstanceGen gen(f, seed);
  const Mat2 q = index % 2 == 0 ? gen.with_class(static_cast<PolyClass>((index / 2) % 5))
                                : qb::conjugate(gen.conjugator(), gen.integral());
  o.key = "?";
  try {
    const qb::BranchShape s = qb::branch_shape(q);
    o.key = qb::to_string(s.cls);
    const Comparison c = qb::compare_shape(s, oracle.measure_branch(q), oracle.window());
    o.verdict = c.verdict;
    o.reason = c.reason;
    if (c.verdict == Verdict::Mismatch) o.reason += " [" + q.to_string() + "; " + s.to_string() + "]";
  } catch (const std::exception& e) {
    o.error = std::string(e.what()) + " [" + q.to_string() + "]";
  }
  return o;
}

Outcome run_defect(const qb::GF2Field& f, std::uint64_t seed) {
  Outcome o;
  InstanceGen gen(f, seed);
  const DefectGrid g = defect_grid(f.tau());
  const Series a = gen.poly(g.elem_lo, g.elem_hi);
  try {
    o.agreed = defect_agrees(a, g, &o.reason);
  } catch (const std::exception& e) {
    o.error = std::string(e.what()) + " [" + a.to_string() + "]";
  }
  return o;
}

Outcome run_symbol(const qb::GF2Field& f, std::uint64_t seed, std::size_t index) {
  Outcome o;
  InstanceGen gen(f, seed);
  const qb::AlgebraSpec spec = gen.spec(index % 2 == 0);
  try {
    const auto [a, b] = qb::cyclic_presentation(spec);
    const bool split = qb::splits(a, b);
    qb::SearchBox box;
    box.samples = 2000;
    box.seed = seed;
    const bool hit = qb::search_zero_divisor(spec, box).has_value();
    if (hit == split) {
      o.agreed = true;
    } else if (split) {
      o.inconclusive = true;
    } else {
      o.reason = "symbol says nonsplit, search found a zero divisor: lambda=" + spec.lambda.to_string() +
                 " m1=(" + spec.m1.a.to_string() + ", " + spec.m1.b.to_string() + ") m2=(" +
                 spec.m2.a.to_string() + ", " + spec.m2.b.to_string() + ")";
    }
  } catch (const std::exception& e) {
    o.error = e.what();
  }
  return o;
}

// Runs fn(i) for i in [0, n) on a pool; results land by index, so the
// aggregate is independent of scheduling.
std::vector<Outcome> run_all(std::size_t n, int threads, const std::function<Outcome(std::size_t)>& fn) {
  std::vector<Outcome> out(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
  };
  int k = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  k = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(k), std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < k; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

void tally(std::map<std::string, CellStats>& cells, const std::string& suite, std::size_t i,
           const Outcome& o, SelfTestReport& r) {
  const std::string tag = suite + " #" + std::to_string(i) + " " + o.key;
  if (!o.error.empty()) {
    r.errors.push_back(tag + ": " + o.error);
    return;
  }
  CellStats& c = cells[o.key];
  ++c.attempted;
  switch (o.verdict) {
    case Verdict::Skip:
      ++c.skipped;
      r.skipped.push_back(tag + ": " + o.reason);
      break;
    case Verdict::Match: ++c.matched; break;
    case Verdict::Mismatch:
      ++c.mismatched;
      r.mismatches.push_back(tag + ": " + o.reason);
      break;
  }
}

// Suite salts keep the instance streams of different suites apart.
constexpr std::uint64_t kPairSalt = 0;
constexpr std::uint64_t kShapeSalt = 1ULL << 40;
constexpr std::uint64_t kDefectSalt = 2ULL << 40;
constexpr std::uint64_t kSymbolSalt = 3ULL << 40;

}  // namespace

SelfTestReport selftest(const RunConfig& cfg) {
  cfg.validate();
  const qb::GF2Field& f = cfg.field();
  SelfTestReport r;
  r.tau = cfg.tau;
  r.radius = cfg.radius;
  r.margin = cfg.margin;
  r.seed = cfg.seed;
  r.count = cfg.count;
  if (cfg.count == 0) return r;

  const qb::TreeOracle oracle(f, cfg.radius, cfg.margin);
  const auto n = static_cast<std::size_t>(cfg.count);
  const std::size_t n_shapes = std::max<std::size_t>(1, n / 2);
  const std::size_t n_defects = std::max<std::size_t>(1, n / 5);
  const std::size_t n_symbols = std::max<std::size_t>(1, n / 5);

  const auto pairs = run_all(n, cfg.threads, [&](std::size_t i) {
    return run_pair(f, oracle, derive_seed(cfg.seed, kPairSalt + i));
  });
  const auto shapes = run_all(n_shapes, cfg.threads, [&](std::size_t i) {
    return run_shape(f, oracle, derive_seed(cfg.seed, kShapeSalt + i), i);
  });
  const auto defects = run_all(n_defects, cfg.threads, [&](std::size_t i) {
    return run_defect(f, derive_seed(cfg.seed, kDefectSalt + i));
  });
  const auto symbols = run_all(n_symbols, cfg.threads, [&](std::size_t i) {
    return run_symbol(f, derive_seed(cfg.seed, kSymbolSalt + i), i);
  });

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Outcome& o = pairs[i];
    tally(r.relpos, "pair", i, o, r);
    if (o.tsign) {
      ++r.tsign_instances;
      r.tsign_positive_matched += o.tsign_positive;
      r.tsign_floor_matched += o.tsign_floor;
    }
  }
  for (std::size_t i = 0; i < shapes.size(); ++i) tally(r.shapes, "branch", i, shapes[i], r);
  for (std::size_t i = 0; i < defects.size(); ++i) {
    const Outcome& o = defects[i];
    if (!o.error.empty()) {
      r.errors.push_back("defect #" + std::to_string(i) + ": " + o.error);
      continue;
    }
    ++r.defect_checked;
    if (o.agreed) {
      ++r.defect_agreed;
    } else {
      r.mismatches.push_back("defect #" + std::to_string(i) + ": " + o.reason);
    }
  }
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const Outcome& o = symbols[i];
    if (!o.error.empty()) {
      r.errors.push_back("symbol #" + std::to_string(i) + ": " + o.error);
      continue;
    }
    ++r.symbol_checked;
    if (o.agreed) {
      ++r.symbol_agreed;
    } else if (o.inconclusive) {
      ++r.symbol_inconclusive;
    } else {
      ++r.symbol_disagreed;
      r.mismatches.push_back("symbol #" + std::to_string(i) + ": " + o.reason);
    }
  }
  return r;
}

std::map<std::string, bool> SelfTestReport::coverage() const {
  auto hit = [&](const std::function<bool(const std::string&)>& pred) {
    for (const auto& [key, c] : relpos) {
      if (c.matched > 0 && pred(key)) return true;
    }
    return false;
  };
  auto cell_of = [](const std::string& k) { return k.substr(0, k.find(' ')); };
  std::map<std::string, bool> out;
  out["A^i/A^i FoliageMeet"] = hit([&](const std::string& k) { return k == "A^i/A^i FoliageMeet"; });
  out["A^i/A^i FoliageContained"] =
      hit([&](const std::string& k) { return k == "A^i/A^i FoliageContained"; });
  out["A^s/A^s SharedRay"] = hit([&](const std::string& k) { return k == "A^s/A^s SharedRay"; });
  out["A^s/A^s SharedMaxPath"] = hit([&](const std::string& k) { return k == "A^s/A^s SharedMaxPath"; });
  out["B^s cell"] = hit([&](const std::string& k) { return cell_of(k).find("B^s") != std::string::npos; });
  out["B^i cell"] = hit([&](const std::string& k) { return cell_of(k).find("B^i") != std::string::npos; });
  out["mixed cell"] = hit([&](const std::string& k) {
    const std::string c = cell_of(k);
    const auto slash = c.find('/');
    return slash != std::string::npos && c.substr(0, slash) != c.substr(slash + 1);
  });
  return out;
}

std::string SelfTestReport::tsign_finding() const {
  std::ostringstream s;
  s << "separable ramified factors enter the fake distance as -t with t > 0: " << tsign_positive_matched
    << "/" << tsign_instances << " boundary-safe B^s instances match; the floor formula reading ("
    << "+t) matches " << tsign_floor_matched << "/" << tsign_instances;
  return s.str();
}

std::string SelfTestReport::to_text() const {
  std::ostringstream s;
  s << "selftest tau=" << tau << " radius=" << radius << " margin=" << margin << " seed=" << seed
    << " count=" << count << "\n";
  auto table = [&](const char* title, const std::map<std::string, CellStats>& cells) {
    s << title << "\n";
    for (const auto& [key, c] : cells) {
      s << "  " << key << ": attempted " << c.attempted << ", skipped " << c.skipped << ", matched "
        << c.matched << ", mismatched " << c.mismatched << "\n";
    }
  };
  table("relative positions", relpos);
  table("single branches", shapes);
  s << "coverage\n";
  for (const auto& [key, ok] : coverage()) s << "  " << key << ": " << (ok ? "yes" : "no") << "\n";
  s << "defects: " << defect_agreed << "/" << defect_checked << " agree with brute force\n";
  s << "symbol: " << symbol_agreed << "/" << symbol_checked << " agree with search, "
    << symbol_inconclusive << " inconclusive, " << symbol_disagreed << " disagree\n";
  s << "t sign: " << tsign_finding() << "\n";
  auto list = [&](const char* title, const std::vector<std::string>& v) {
    s << title << " (" << v.size() << ")\n";
    for (const auto& e : v) s << "  " << e << "\n";
  };
  list("mismatches", mismatches);
  list("errors", errors);
  list("skipped", skipped);
  s << (passed() ? "PASS" : "FAIL") << "\n";
  return s.str();
}

json to_json(const CellStats& c) {
  return json{{"attempted", c.attempted},
              {"skipped", c.skipped},
              {"matched", c.matched},
              {"mismatched", c.mismatched}};
}

json to_json(const SelfTestReport& r) {
  json rel = json::object();
  for (const auto& [k, c] : r.relpos) rel[k] = to_json(c);
  json sh = json::object();
  for (const auto& [k, c] : r.shapes) sh[k] = to_json(c);
  return json{{"tau", r.tau},
              {"radius", r.radius},
              {"margin", r.margin},
              {"seed", r.seed},
              {"count", r.count},
              {"relpos", rel},
              {"shapes", sh},
              {"coverage", r.coverage()},
              {"skipped", r.skipped},
              {"mismatches", r.mismatches},
              {"errors", r.errors},
              {"defects", {{"checked", r.defect_checked}, {"agreed", r.defect_agreed}}},
              {"symbol",
               {{"checked", r.symbol_checked},
                {"agreed", r.symbol_agreed},
                {"inconclusive", r.symbol_inconclusive},
                {"disagreed", r.symbol_disagreed}}},
              {"tsign",
               {{"instances", r.tsign_instances},
                {"positive_matched", r.tsign_positive_matched},
                {"floor_matched", r.tsign_floor_matched},
                {"finding", r.tsign_finding()}}},
              {"passed", r.passed()}};
}

SelfTestReport report_from_json(const json& j) {
  try {
    SelfTestReport r;
    r.tau = j.at("tau").get<int>();
    r.radius = j.at("radius").get<int>();
    r.margin = j.at("margin").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.count = j.at("count").get<int>();
    auto cells = [](const json& o) {
      std::map<std::string, CellStats> m;
      for (const auto& [k, c] : o.items()) {
        m[k] = CellStats{c.at("attempted").get<int>(), c.at("skipped").get<int>(),
                         c.at("matched").get<int>(), c.at("mismatched").get<int>()};
      }
      return m;
    };
    r.relpos = cells(j.at("relpos"));
    r.shapes = cells(j.at("shapes"));
    r.skipped = j.at("skipped").get<std::vector<std::string>>();
    r.mismatches = j.at("mismatches").get<std::vector<std::string>>();
    r.errors = j.at("errors").get<std::vector<std::string>>();
    r.defect_checked = j.at("defects").at("checked").get<int>();
    r.defect_agreed = j.at("defects").at("agreed").get<int>();
    const json& sy = j.at("symbol");
    r.symbol_checked = sy.at("checked").get<int>();
    r.symbol_agreed = sy.at("agreed").get<int>();
    r.symbol_inconclusive = sy.at("inconclusive").get<int>();
    r.symbol_disagreed = sy.at("disagreed").get<int>();
    const json& ts = j.at("tsign");
    r.tsign_instances = ts.at("instances").get<int>();
    r.tsign_positive_matched = ts.at("positive_matched").get<int>();
    r.tsign_floor_matched = ts.at("floor_matched").get<int>();
    return r;
  } catch (const json::exception& e) {
    throw qb::ParseError(std::string("bad selftest report: ") + e.what());
  }
}

}  // namespace qbtool
