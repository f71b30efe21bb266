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

#ifndef QBTOOL_SELFTEST_HPP_
#define QBTOOL_SELFTEST_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbtool/serialize.hpp"

namespace qbtool {

struct RunConfig {
  int tau = 1;
  std::uint32_t modulus = 0;  // 0 selects the default for tau
  int prec = 64;
  int radius = 8;
  int margin = 2;
  std::uint64_t seed = 1;
  int count = 100;
  int threads = 0;  // 0 uses the hardware concurrency
  std::string format = "text";
  std::optional<std::string> dot;

  // Throws std::invalid_argument.
  void validate() const;
  const qb::GF2Field& field() const;
};

struct CellStats {
  int attempted = 0;
  int skipped = 0;
  int matched = 0;
  int mismatched = 0;
  bool operator==(const CellStats&) const = default;
};

struct SelfTestReport {
  int tau = 1;
  int radius = 8;
  int margin = 2;
  std::uint64_t seed = 1;
  int count = 0;

  // Relative positions, keyed "<cell> <kind>", e.g. "A^s/B^i Overlap".
  std::map<std::string, CellStats> relpos;
  // Single branches, keyed by polynomial class.
  std::map<std::string, CellStats> shapes;
  // Every skipped instance, "<suite> #<index> <key>: <reason>".
  std::vector<std::string> skipped;
  std::vector<std::string> mismatches;
  std::vector<std::string> errors;

  int defect_checked = 0;
  int defect_agreed = 0;

  int symbol_checked = 0;
  int symbol_agreed = 0;  // split with a search hit, or nonsplit without one
  int symbol_inconclusive = 0;  // split, but the search found nothing
  int symbol_disagreed = 0;

  // Boundary-safe pairs with a B^s factor, scored under both t conventions.
  int tsign_instances = 0;
  int tsign_positive_matched = 0;
  int tsign_floor_matched = 0;

  bool passed() const {
    return mismatches.empty() && errors.empty() && defect_agreed == defect_checked &&
           symbol_disagreed == 0;
  }
  // Coverage requirements of the pair suite, each with a hit flag.
  std::map<std::string, bool> coverage() const;
  std::string tsign_finding() const;
  std::string to_text() const;

  bool operator==(const SelfTestReport&) const = default;
};

json to_json(const CellStats& c);
json to_json(const SelfTestReport& r);
SelfTestReport report_from_json(const json& j);

SelfTestReport selftest(const RunConfig& cfg);

// Brute-force defect valuations over a grid of h with support [lo, hi]:
// max over h of v(h^2 + h + a), resp. v(a + h^2); kInfPrec when some h
// gives exactly zero.
int brute_as_defect(const qb::Series& a, int lo, int hi);
int brute_quad_defect(const qb::Series& a, int lo, int hi);

}  // namespace qbtool

#endif  // QBTOOL_SELFTEST_HPP_
