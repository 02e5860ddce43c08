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

// Report writers. Every structured report is a JSON object whose "schema"
// member names the report type and its version (for instance
// "mrcheck.audit/1"); the layouts are documented in the README. The table
// writers produce the aligned plain-text form of the same numbers.

#ifndef MRCHECK_REPORT_H_
#define MRCHECK_REPORT_H_

#include <span>
#include <string>

#include "mrcheck/cleaner.h"
#include "mrcheck/corpus.h"
#include "mrcheck/metrics.h"
#include "mrcheck/reranker.h"
#include "mrcheck/ser.h"

namespace mrcheck {

inline constexpr char kAuditSchema[] = "mrcheck.audit/1";
inline constexpr char kManifestSchema[] = "mrcheck.manifest/1";
inline constexpr char kScoreSchema[] = "mrcheck.score/1";
inline constexpr char kRerankSchema[] = "mrcheck.rerank/1";

std::string AuditReportJson(const Corpus& corpus, const CorpusAudit& audit,
                            const MatcherConfig& config);
std::string AuditTable(const std::string& label, const SerReport& report);

std::string ManifestJson(const CleanedSplits& splits, CleaningMode mode,
                         const MatcherConfig& config);
std::string ManifestTable(const CleanedSplits& splits, CleaningMode mode);

// `items` may be empty; when given it must be parallel to `set.items` and
// adds a per-item diagnostics block.
struct ScoreItemInfo {
  std::string mr;
  std::string output;
  SerCounts ser;
};
std::string ScoreReportJson(const std::string& label,
                            const MetricsReport& report, const ScoredSet& set,
                            std::span<const ScoreItemInfo> items);
// Header plus one row with the columns BLEU, NIST, METEOR, ROUGE-L, CIDEr,
// Add, Miss, Wrong, SER (the last four as percentages).
std::string ScoreTable(const std::string& label, const MetricsReport& report);

std::string RerankReportJson(std::span<const NBestList> lists,
                             std::span<const Selection> selections,
                             const MatcherConfig& config);

}  // namespace mrcheck

#endif  // MRCHECK_REPORT_H_
