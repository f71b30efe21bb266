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

#include "qbtool/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qbtool/selftest.hpp"
#include "qbtool/serialize.hpp"

namespace qbtool {

namespace {

using qb::Mat2;
using qb::Series;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::uint32_t parse_modulus(const std::string& s) {
  try {
    std::size_t used = 0;
    unsigned long v = 0;
    if (s.rfind("0b", 0) == 0 || s.rfind("0B", 0) == 0) {
      v = std::stoul(s.substr(2), &used, 2);
      used += 2;
    } else {
      v = std::stoul(s, &used, 0);
    }
    if (used != s.size()) throw UsageError("bad --modulus: " + s);
    return static_cast<std::uint32_t>(v);
  } catch (const std::logic_error&) {
    throw UsageError("bad --modulus: " + s);
  }
}

// Inline text, or the contents of a file when the argument names one.
std::string inline_or_file(const std::string& arg) {
  std::error_code ec;
  if (arg.find('[') == std::string::npos && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return text;
  }
  return arg;
}

Mat2 read_matrix(const qb::GF2Field& f, const std::string& arg) {
  return qb::parse_mat2(f, inline_or_file(arg));
}

qb::QuadPoly read_poly(const qb::GF2Field& f, const std::string& arg) {
  const auto comma = arg.find(',');
  if (comma == std::string::npos) throw UsageError("expected a,b for a polynomial, got " + arg);
  return qb::classify(qb::parse_series(f, arg.substr(0, comma)), qb::parse_series(f, arg.substr(comma + 1)));
}

std::string describe(const qb::IntersectionMeasurement& m) {
  using R = qb::MeasuredRel;
  std::string s = qb::to_string(m.rel);
  switch (m.rel) {
    case R::Disjoint: s += "{distance=" + std::to_string(m.distance) + "}"; break;
    case R::Overlap: s += "{length=" + std::to_string(m.length) + "}"; break;
    case R::Ray:
    case R::Line: s += "{in-window length=" + std::to_string(m.length) + "}"; break;
    case R::FoliageMeet:
      s += "{diameter=" + std::to_string(m.length) + ", depth=" + std::to_string(m.depth) +
           ", stem=" + (m.stem_is_edge ? "edge" : "vertex") + "}";
      break;
    default: break;
  }
  if (!m.boundary_safe) s += " (boundary unsafe)";
  if (!m.note.empty()) s += " [" + m.note + "]";
  return s;
}

void write_dot(const std::string& path, const qb::Window& w, const std::vector<bool>& in1,
               const std::vector<bool>& in2) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << qb::window_to_dot(w, in1, in2);
}

int defect_t(bool artin_schreier, const qb::Ideal& I) {
  if (I.zero) return 0;
  if (artin_schreier) return I.val < 0 ? (1 - I.val) / 2 : 0;
  return (I.val - 1) / 2;
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string modulus;
  CLI::App app{"Branches of quaternion orders over F_2^tau((t))", "qbranch"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--tau", cfg.tau, "residue field degree")->capture_default_str();
  app.add_option("--modulus", modulus, "residue field modulus, e.g. 0b111");
  app.add_option("--prec", cfg.prec, "series precision for computed roots")->capture_default_str();
  app.add_option("--radius", cfg.radius, "oracle window radius")->capture_default_str();
  app.add_option("--margin", cfg.margin, "oracle boundary margin")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--format", cfg.format, "text or json")->capture_default_str();
  std::string dot;
  app.add_option("--dot", dot, "write the window as a DOT graph");

  std::string defect_kind, elem;
  auto* defect = app.add_subcommand("defect", "Artin-Schreier or quadratic defect");
  defect->add_option("kind", defect_kind, "as or quad")->required()->check(CLI::IsMember({"as", "quad"}));
  defect->add_option("element", elem)->required();

  std::string ca, cb;
  auto* classify = app.add_subcommand("classify", "class of X^2 + aX + b");
  classify->add_option("a", ca)->required();
  classify->add_option("b", cb)->required();

  std::string lambda, m1, m2;
  auto* df = app.add_subcommand("df", "fake distance");
  df->add_option("--lambda", lambda)->required();
  df->add_option("--m1", m1, "a,b")->required();
  df->add_option("--m2", m2, "a,b")->required();

  std::string q1s, q2s;
  auto* branch = app.add_subcommand("branch", "predicted branch of a matrix");
  branch->add_option("q", q1s)->required();

  auto* relpos = app.add_subcommand("relpos", "predicted relative position of two branches");
  relpos->add_option("q1", q1s)->required();
  relpos->add_option("q2", q2s)->required();

  auto* oracle = app.add_subcommand("oracle", "prediction against the tree oracle");
  oracle->add_option("q1", q1s)->required();
  oracle->add_option("q2", q2s)->required();

  bool witness = false;
  std::string box_text;
  auto* exists = app.add_subcommand("exists", "existence of a pair with the given invariants");
  exists->add_option("--lambda", lambda)->required();
  exists->add_option("--m1", m1, "a,b")->required();
  exists->add_option("--m2", m2, "a,b")->required();
  exists->add_flag("--witness", witness, "print a witness pair");
  exists->add_option("--search-box", box_text, "LO,HI exponent support for the search");

  auto* st = app.add_subcommand("selftest", "differential self-test");
  st->add_option("--count", cfg.count)->capture_default_str();
  st->add_option("--threads", cfg.threads, "worker threads, 0 for all cores");

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool json_out = cfg.format == "json";
  try {
    if (!modulus.empty()) cfg.modulus = parse_modulus(modulus);
    if (!dot.empty()) cfg.dot = dot;
    cfg.validate();
    const qb::GF2Field& f = cfg.field();

    if (*defect) {
      const Series a = qb::parse_series(f, elem);
      const bool as = defect_kind == "as";
      qb::DefectResult d = as ? qb::as_defect(a) : qb::quad_defect(a);
      if (as && d.ideal.zero) d.witness = qb::solve_artin_schreier(a, cfg.prec);
      json j = to_json(d);
      j["kind"] = defect_kind;
      j["t"] = defect_t(as, d.ideal);
      if (json_out) {
        out << j.dump(2) << "\n";
      } else {
        out << "ideal_val = " << (d.ideal.zero ? std::string("inf") : std::to_string(d.ideal.val)) << "\n"
            << "ideal = " << d.ideal.to_string() << "\n"
            << "witness = " << d.witness.to_string() << "\n"
            << "t = " << j["t"].get<int>() << "\n";
      }
      return kExitOk;
    }
    if (*classify) {
      const qb::QuadPoly p = qb::classify(qb::parse_series(f, ca), qb::parse_series(f, cb));
      if (json_out) {
        out << to_json(p).dump(2) << "\n";
      } else {
        out << "class = " << qb::to_string(p.cls) << "\n"
            << "t = " << p.t << "\n"
            << "group = " << qb::to_string(p.group()) << "\n"
            << "ideal = " << p.defect.ideal.to_string() << "\n";
      }
      return kExitOk;
    }
    if (*df) {
      const qb::HalfInt d = qb::fake_distance(qb::parse_series(f, lambda), read_poly(f, m1), read_poly(f, m2));
      if (json_out) {
        out << json{{"df", to_json(d)}}.dump(2) << "\n";
      } else {
        out << "df = " << d.to_string() << "\n";
      }
      return kExitOk;
    }
    if (*branch) {
      const Mat2 q = read_matrix(f, q1s);
      const qb::BranchShape s = qb::branch_shape(q);
      if (cfg.dot) {
        const qb::TreeOracle orc(f, cfg.radius, cfg.margin);
        write_dot(*cfg.dot, orc.window(), orc.membership(q), std::vector<bool>(orc.window().size(), false));
      }
      out << (json_out ? to_json(s).dump(2) : s.to_string()) << "\n";
      return kExitOk;
    }
    if (*relpos) {
      const qb::RelPos rp = qb::predict_relpos(qb::make_pair(read_matrix(f, q1s), read_matrix(f, q2s)));
      out << (json_out ? to_json(rp).dump(2) : rp.to_string() + " df=" + rp.df.to_string() + " cell=" + rp.cell)
          << "\n";
      return kExitOk;
    }
    if (*oracle) {
      const Mat2 q1 = read_matrix(f, q1s);
      const Mat2 q2 = read_matrix(f, q2s);
      const qb::TreeOracle orc(f, cfg.radius, cfg.margin);
      const qb::RelPos rp = qb::predict_relpos(qb::make_pair(q1, q2));
      const qb::IntersectionMeasurement im = orc.measure_intersection(q1, q2);
      const qb::Comparison c = qb::compare_relpos(rp, im);
      const qb::BranchShape s1 = qb::branch_shape(q1);
      const qb::BranchShape s2 = qb::branch_shape(q2);
      const qb::Comparison c1 = qb::compare_shape(s1, im.first, orc.window());
      const qb::Comparison c2 = qb::compare_shape(s2, im.second, orc.window());
      if (cfg.dot) write_dot(*cfg.dot, orc.window(), orc.membership(q1), orc.membership(q2));
      const bool bad = c.verdict == qb::Verdict::Mismatch || c1.verdict == qb::Verdict::Mismatch ||
                       c2.verdict == qb::Verdict::Mismatch;
      if (json_out) {
        auto cmp = [](const qb::Comparison& x) {
          return json{{"verdict", qb::to_string(x.verdict)}, {"reason", x.reason}};
        };
        out << json{{"predicted", to_json(rp)},
                    {"measured", to_json(im)},
                    {"relpos", cmp(c)},
                    {"shape1", {{"predicted", to_json(s1)}, {"comparison", cmp(c1)}}},
                    {"shape2", {{"predicted", to_json(s2)}, {"comparison", cmp(c2)}}}}
                   .dump(2)
            << "\n";
      } else {
        auto line = [&](const std::string& label, const std::string& pred, const std::string& meas,
                        const qb::Comparison& x) {
          out << label << "  predicted " << pred << "  measured " << meas << "  " << qb::to_string(x.verdict);
          if (!x.reason.empty()) out << " (" << x.reason << ")";
          out << "\n";
        };
        line("q1     ", s1.to_string(), qb::to_string(im.first.kind), c1);
        line("q2     ", s2.to_string(), qb::to_string(im.second.kind), c2);
        line("relpos ", rp.to_string(), describe(im), c);
        out << (bad ? "MISMATCH" : "MATCH") << "\n";
      }
      return bad ? kExitMismatch : kExitOk;
    }
    if (*exists) {
      const qb::AlgebraSpec spec =
          qb::AlgebraSpec::make(qb::parse_series(f, lambda), read_poly(f, m1), read_poly(f, m2));
      qb::ExistenceVerdict v = qb::decide(spec);
      json j = to_json(v);
      if (!box_text.empty()) {
        const auto comma = box_text.find(',');
        if (comma == std::string::npos) throw UsageError("--search-box expects LO,HI");
        qb::SearchBox box;
        try {
          box.lo = std::stoi(box_text.substr(0, comma));
          box.hi = std::stoi(box_text.substr(comma + 1));
        } catch (const std::logic_error&) {
          throw UsageError("--search-box expects LO,HI");
        }
        if (box.lo > box.hi) throw UsageError("--search-box needs LO <= HI");
        box.seed = cfg.seed;
        const auto pair = qb::search_pair(spec, box);
        j["search_pair"] = pair ? json::array({to_json((*pair)[0]), to_json((*pair)[1]), to_json((*pair)[2]),
                                               to_json((*pair)[3])})
                                : json(nullptr);
        if (spec.is_quaternion()) {
          const auto hit = qb::search_zero_divisor(spec, box);
          j["zero_divisor"] = hit ? json::array({to_json(hit->point[0]), to_json(hit->point[1]),
                                                 to_json(hit->point[2])})
                                  : json(nullptr);
        }
      }
      if (!witness) j.erase("witness");
      if (json_out) {
        out << j.dump(2) << "\n";
      } else {
        out << "exists = " << (v.exists ? "true" : "false") << "\n"
            << "condition = " << qb::to_string(v.matched) << "\n";
        if (v.commutative_note) out << "commutative = true\n";
        if (!v.note.empty()) out << "note = " << v.note << "\n";
        if (witness && v.witness)
          out << "q1 = " << v.witness->first.to_string() << "\nq2 = " << v.witness->second.to_string() << "\n";
        if (j.contains("search_pair"))
          out << "search_pair = " << (j["search_pair"].is_null() ? "none" : j["search_pair"].dump()) << "\n";
        if (j.contains("zero_divisor"))
          out << "zero_divisor = " << (j["zero_divisor"].is_null() ? "none" : j["zero_divisor"].dump()) << "\n";
      }
      return kExitOk;
    }
    if (*st) {
      const SelfTestReport r = selftest(cfg);
      out << (json_out ? to_json(r).dump(2) + "\n" : r.to_text());
      return r.passed() ? kExitOk : kExitMismatch;
    }
  } catch (const qb::PrecisionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qbtool
