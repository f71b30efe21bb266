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

#ifndef QBTOOL_CLI_HPP_
#define QBTOOL_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace qbtool {

enum ExitCode { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitPrecision = 3 };

// Parses argv (program name first) and runs one subcommand.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace qbtool

#endif  // QBTOOL_CLI_HPP_
