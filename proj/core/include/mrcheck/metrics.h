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

// Corpus-level word-overlap metrics over multi-reference sets. All scores
// consume token lists produced by Tokenize, so candidates and references
// share one normalization.
//
// BLEU and NIST follow the mteval definitions, with corpus-level
// statistics and closest-reference brevity for BLEU. ROUGE-L and CIDEr
// follow the COCO caption evaluation code (the CIDEr variant there is the
// one with clipped n-gram weights and a Gaussian length penalty). METEOR
// uses exact unigram matches only and is not comparable to METEOR scores
// computed with stem and synonym modules.

#ifndef MRCHECK_METRICS_H_
#define MRCHECK_METRICS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "mrcheck/ser.h"

namespace mrcheck {

using Tokens = std::vector<std::string>;

struct ScoredItem {
  Tokens candidate;
  std::vector<Tokens> references;  // at least one
};

struct ScoredSet {
  std::vector<ScoredItem> items;
};

// Tokenizes a candidate and its references.
ScoredItem MakeScoredItem(std::string_view candidate,
                          std::span<const std::string> references);

// Every metric fails with kEmptyInput on an empty set and with kMalformed
// when an item has no reference. `jobs` only affects speed.
absl::StatusOr<double> Bleu(const ScoredSet& set, int max_n = 4,
                            int jobs = 1);
absl::StatusOr<double> Nist(const ScoredSet& set, int max_n = 5,
                            int jobs = 1);
absl::StatusOr<double> RougeL(const ScoredSet& set, double beta = 1.2,
                              int jobs = 1);

struct MeteorParams {
  double alpha = 0.9;
  double beta = 3.0;
  double gamma = 0.5;
};
absl::StatusOr<double> MeteorExact(const ScoredSet& set,
                                   const MeteorParams& params = {},
                                   int jobs = 1);

// `sigma` is the width of the Gaussian length penalty; nullopt disables it.
absl::StatusOr<double> Cider(const ScoredSet& set, int max_n = 4,
                             std::optional<double> sigma = 6.0,
                             int jobs = 1);

// Add-epsilon smoothed sentence BLEU of one item. For per-item diagnostics
// only; it never enters a corpus score.
double SmoothedSentenceBleu(const ScoredItem& item, int max_n = 4,
                            double epsilon = 0.1);

struct MetricsReport {
  double bleu = 0;
  double nist = 0;
  double meteor = 0;
  double rouge_l = 0;
  double cider = 0;
  SerReport ser;
};

// One row of a results table: the five overlap metrics plus the SER block
// computed from `ser_counts`.
absl::StatusOr<MetricsReport> ScoreAll(const ScoredSet& set,
                                       std::span<const SerCounts> ser_counts,
                                       int jobs = 1);

}  // namespace mrcheck

#endif  // MRCHECK_METRICS_H_
