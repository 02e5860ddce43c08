// Copyright 2026 The mrcheck Authors.
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

// The mrcheck subcommands as library functions. Each writes its files,
// prints a human-readable summary to `out` and returns the first error.

#ifndef MRCHECK_TOOLS_COMMANDS_H_
#define MRCHECK_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "mrcheck/matcher.h"

namespace mrcheck {

struct CommonOptions {
  std::string config_path;  // empty: the built-in config
  bool ignore_eattype_restaurant = false;
  int jobs = 1;
};

absl::StatusOr<MatcherConfig> LoadMatcher(const CommonOptions& options);

struct AuditOptions {
  CommonOptions common;
  std::string input;
  std::string report;  // JSON report path; empty: none
  bool json = false;   // print the JSON report instead of the table
};
absl::Status RunAudit(const AuditOptions& options, std::ostream& out);

struct CleanOptions {
  CommonOptions common;
  std::string train, dev, test;
  std::string out_dir;
  CleaningMode mode = CleaningMode::kFull;
};
absl::Status RunClean(const CleanOptions& options, std::ostream& out);

struct ScoreOptions {
  CommonOptions common;
  std::string outputs;  // `mr,output` CSV or one output per line
  std::string test;
  std::string report;
  std::string label;  // default: outputs file name
  bool per_item = false;
};
absl::Status RunScore(const ScoreOptions& options, std::ostream& out);

struct RerankOptions {
  CommonOptions common;
  std::string nbest;      // lines of mr<TAB>candidate<TAB>candidate...
  std::string out;        // selections, one per line; empty: stdout
  std::string report;     // per-candidate diagnostics
};
absl::Status RunRerank(const RerankOptions& options, std::ostream& out);

struct SampleOptions {
  CommonOptions common;
  std::string input;
  size_t n = 0;
  std::optional<uint64_t> seed;
  std::string out;       // sheet path; empty: stdout
  std::string evaluate;  // filled sheet to score instead of sampling
  std::string report;
};
absl::Status RunSample(const SampleOptions& options, std::ostream& out);

// 0 for OK, 2 for I/O failures, 1 for everything else.
int ExitCode(const absl::Status& status);

// One-line JSON object describing a failure.
std::string ErrorLine(std::string_view command, const absl::Status& status);

}  // namespace mrcheck

#endif  // MRCHECK_TOOLS_COMMANDS_H_
