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

#ifndef MRCHECK_RERANKER_H_
#define MRCHECK_RERANKER_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "mrcheck/matcher.h"
#include "mrcheck/mr.h"
#include "mrcheck/ser.h"

namespace mrcheck {

// Candidates in generator beam order.
struct NBestList {
  MeaningRepresentation mr;
  std::vector<std::string> candidates;
};

struct Selection {
  size_t index = 0;
  std::string text;
  std::vector<SerCounts> candidates;  // one per candidate, in input order
};

// Picks the candidate with the lowest slot error rate against the list's
// MR; the earliest candidate wins ties. Fails on an empty list.
absl::StatusOr<Selection> RerankOne(const NBestList& nbest,
                                    const MatcherConfig& config);

// RerankOne over every list, order preserved. The first failure is returned
// with the index of its list.
absl::StatusOr<std::vector<Selection>> RerankBatch(
    std::span<const NBestList> lists, const MatcherConfig& config,
    int jobs = 1);

}  // namespace mrcheck

#endif  // MRCHECK_RERANKER_H_
