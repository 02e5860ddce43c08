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

// Corpus-level auditing and cleaning: per-instance matching, corrected
// datasets in the three cleaning modes, test-overlap removal and the
// summary statistics reported per split.

#ifndef MRCHECK_CLEANER_H_
#define MRCHECK_CLEANER_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "mrcheck/corpus.h"
#include "mrcheck/matcher.h"
#include "mrcheck/ser.h"

namespace mrcheck {

struct InstanceAudit {
  DetectedSlots detected;
  SlotDiff diff;
  SerCounts counts;
  // Full-mode correction; nullopt when it would leave an empty MR.
  std::optional<MeaningRepresentation> corrected;
};

struct CorpusAudit {
  std::vector<InstanceAudit> instances;
  SerReport report;
};

// Matches every instance against its MR. Fails with kEmptyInput on an
// empty corpus.
absl::StatusOr<CorpusAudit> AuditCorpus(const Corpus& corpus,
                                        const MatcherConfig& config,
                                        int jobs = 1);

struct Reject {
  std::string split;
  size_t row = 0;
  std::string mr;
  std::string reference;
  std::string reason;
};

struct CleanResult {
  Corpus corpus;
  std::vector<Reject> rejects;  // instances whose correction degenerated
};

// Replaces every MR by its correction in `mode`. References are untouched;
// degenerate instances are dropped and reported in `rejects`.
absl::StatusOr<CleanResult> CleanCorpus(const Corpus& corpus,
                                        const MatcherConfig& config,
                                        CleaningMode mode, int jobs = 1);

struct CorpusStats {
  size_t distinct_mrs = 0;
  size_t references = 0;
  double refs_per_mr_mean = 0;
  // Averaged over distinct MRs.
  double slots_per_mr_mean = 0;
  // Distinct MRs carrying every built-in attribute.
  double saturated_mr_fraction = 0;
};

// Fails with kEmptyInput on an empty corpus.
absl::StatusOr<CorpusStats> ComputeCorpusStats(
    const Corpus& corpus, const Schema& schema = Schema::E2E());

struct SplitManifest {
  std::string split;
  size_t distinct_mrs = 0;
  size_t references = 0;
  size_t removed_by_dedup = 0;
  size_t rejected = 0;
  double ser_before = 0;  // micro SER of the input split
  double ser_after = 0;   // micro SER of the written split
};

struct CleanedSplits {
  Corpus train;
  Corpus dev;
  Corpus test;
  // train, dev, test.
  std::vector<SplitManifest> manifest;
  std::vector<Reject> rejects;
};

// Removes every train/dev instance whose canonical MR also occurs in test.
// Test is returned unchanged. Manifest carries counts only.
CleanedSplits DedupSplits(Corpus train, Corpus dev, Corpus test,
                          const Schema& schema = Schema::E2E());

// Clean all three splits in `mode`, dedup against test, and fill the
// manifest including SER before and after. Empty splits are an error.
absl::StatusOr<CleanedSplits> CleanSplits(const Corpus& train,
                                          const Corpus& dev,
                                          const Corpus& test,
                                          const MatcherConfig& config,
                                          CleaningMode mode, int jobs = 1);

// "cleaned", "cleaned missing" or "cleaned added".
std::string VariantLabel(CleaningMode mode);

}  // namespace mrcheck

#endif  // MRCHECK_CLEANER_H_
