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

#include "mrcheck/reranker.h"

#include "absl/strings/str_cat.h"
#include "mrcheck/errors.h"
#include "mrcheck/parallel.h"

namespace mrcheck {

absl::StatusOr<Selection> RerankOne(const NBestList& nbest,
                                    const MatcherConfig& config) {
  if (nbest.candidates.empty()) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     ErrorKind::kEmptyInput, "n-best list has no candidates");
  }
  Selection selection;
  for (const std::string& text : nbest.candidates) {
    const SlotDiff diff =
        DiffSlots(nbest.mr, MatchSlots(text, nbest.mr, config), config);
    absl::StatusOr<SerCounts> counts = SerInstance(diff, nbest.mr);
    if (!counts.ok()) return counts.status();
    selection.candidates.push_back(*counts);
  }
  // All candidates share the denominator, so comparing error counts is
  // exact.
  for (size_t i = 1; i < selection.candidates.size(); ++i) {
    if (selection.candidates[i].errors() <
        selection.candidates[selection.index].errors()) {
      selection.index = i;
    }
  }
  selection.text = nbest.candidates[selection.index];
  return selection;
}

absl::StatusOr<std::vector<Selection>> RerankBatch(
    std::span<const NBestList> lists, const MatcherConfig& config, int jobs) {
  std::vector<absl::StatusOr<Selection>> results =
      ParallelMap(lists.size(), jobs,
                  [&](size_t i) { return RerankOne(lists[i], config); });
  std::vector<Selection> out;
  out.reserve(results.size());
  for (size_t i = 0; i < results.size(); ++i) {
    if (!results[i].ok()) {
      return Annotate(results[i].status(), absl::StrCat("n-best list ", i));
    }
    out.push_back(*std::move(results[i]));
  }
  return out;
}

}  // namespace mrcheck
