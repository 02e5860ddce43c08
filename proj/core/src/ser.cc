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

#include "mrcheck/ser.h"

#include <map>

#include "mrcheck/errors.h"

namespace mrcheck {

absl::StatusOr<SerCounts> SerInstance(const SlotDiff& diff,
                                      const MeaningRepresentation& mr) {
  if (mr.empty()) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     ErrorKind::kEmptyInput,
                     "SER undefined for an MR without slots");
  }
  return SerCounts{diff.added.size(), diff.missing.size(), diff.wrong.size(),
                   mr.size()};
}

absl::StatusOr<SerReport> SerCorpus(std::span<const SerCounts> counts) {
  if (counts.empty()) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     ErrorKind::kEmptyInput, "SER of an empty corpus");
  }
  SerReport report;
  report.per_instance.assign(counts.begin(), counts.end());
  // Errors summed per denominator keep the macro average independent of
  // instance order.
  std::map<size_t, size_t> errors_by_slots;
  for (const SerCounts& c : counts) {
    if (c.slots == 0) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       ErrorKind::kEmptyInput,
                       "SER undefined for an MR without slots");
    }
    report.total_added += c.added;
    report.total_missing += c.missing;
    report.total_wrong += c.wrong;
    report.total_slots += c.slots;
    errors_by_slots[c.slots] += c.errors();
    if (c.errors() == 0) ++report.inst_ok;
  }
  const auto slots = static_cast<double>(report.total_slots);
  report.add_rate = static_cast<double>(report.total_added) / slots;
  report.miss_rate = static_cast<double>(report.total_missing) / slots;
  report.wrong_rate = static_cast<double>(report.total_wrong) / slots;
  report.micro_ser =
      static_cast<double>(report.total_added + report.total_missing +
                          report.total_wrong) /
      slots;
  double ser_sum = 0;
  for (const auto& [denominator, errors] : errors_by_slots) {
    ser_sum += static_cast<double>(errors) / static_cast<double>(denominator);
  }
  report.macro_ser = ser_sum / static_cast<double>(counts.size());
  return report;
}

absl::StatusOr<SerReport> SerCorpus(std::span<const SerInput> inputs) {
  std::vector<SerCounts> counts;
  counts.reserve(inputs.size());
  for (const SerInput& input : inputs) {
    absl::StatusOr<SerCounts> c = SerInstance(input.diff, input.mr);
    if (!c.ok()) return c.status();
    counts.push_back(*c);
  }
  return SerCorpus(std::span<const SerCounts>(counts));
}

}  // namespace mrcheck
