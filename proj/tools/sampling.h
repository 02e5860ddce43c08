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

// Random samples for manual checking of the slot matcher, and scoring of
// the filled-in annotation sheets.

#ifndef MRCHECK_TOOLS_SAMPLING_H_
#define MRCHECK_TOOLS_SAMPLING_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "mrcheck/corpus.h"
#include "mrcheck/matcher.h"
#include "mrcheck/ser.h"

namespace mrcheck {

// Uniform in [0, bound) from a 64-bit Mersenne Twister stream, using
// rejection so the result does not depend on the standard library's
// distribution implementation.
class SampleRng {
 public:
  explicit SampleRng(uint64_t seed);
  uint64_t Below(uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// `n` distinct indices from [0, population), uniformly without replacement,
// in draw order. Fails with kEmptyInput when n > population.
absl::StatusOr<std::vector<size_t>> SampleIndices(size_t population, size_t n,
                                                  uint64_t seed);

// Annotation sheet columns. gold_mr and notes are left blank for the
// annotator, who writes the MR the text actually expresses into gold_mr.
inline constexpr const char* kSheetColumns[] = {
    "id", "split", "row", "mr", "text", "script_mr", "detected", "gold_mr",
    "notes"};

std::string AnnotationSheet(const Corpus& corpus,
                            const std::vector<size_t>& indices,
                            const MatcherConfig& config);

// Errors of `script` measured against `gold`; the denominator is the number
// of gold slots. Values are compared by value class.
SerCounts CompareMrs(const MeaningRepresentation& script,
                     const MeaningRepresentation& gold,
                     const MatcherConfig& config);

struct SheetEvaluation {
  size_t annotated = 0;
  size_t unannotated = 0;  // rows with an empty gold_mr, not scored
  size_t incorrect = 0;    // annotated rows with at least one error
  SerReport ser;
};

// Reads a filled sheet. Fails on a missing column, an unparseable MR or a
// sheet without any annotated row.
absl::StatusOr<SheetEvaluation> EvaluateSheet(std::string_view content,
                                              const MatcherConfig& config);

}  // namespace mrcheck

#endif  // MRCHECK_TOOLS_SAMPLING_H_
