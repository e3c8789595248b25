// Copyright 2026 The xacmlcov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The xacmlcov command line: traces, gen, eval, cover and monitor.

#ifndef XACMLCOV_TOOLS_CLI_H_
#define XACMLCOV_TOOLS_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xacmlcov/model.h"
#include "xacmlcov/monitor.h"
#include "xacmlcov/reqgen.h"
#include "xacmlcov/tracegen.h"

namespace xacmlcov::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseFailure = 2,
  kUnsupported = 3,
  kSuiteTooLarge = 4,
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

struct CoverRun {
  std::size_t suite_size = 0;
  CoverageReport report;
  // Request/response pairs in execution order, as the monitor saw them.
  std::vector<Event> events;
};

// Traces for `criterion` (all four when nullopt), the strategy's suite, the
// PDP and the monitor, all in-process.
CoverRun run_cover(const PolicySet& ps, Strategy strategy,
                   std::optional<Criterion> criterion,
                   const GenerationOptions& options = {});

// "Simple Combinatorial (6)"
std::string column_title(Strategy strategy, std::size_t suite_size);

}  // namespace xacmlcov::cli

#endif  // XACMLCOV_TOOLS_CLI_H_
