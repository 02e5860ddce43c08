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

// Slot error rate:
//
//   SER = (#added + #missing + #wrong value) / #slots
//
// where #slots counts the slots of the MR the text was checked against.
// Additions can push an instance above 1.

#ifndef MRCHECK_SER_H_
#define MRCHECK_SER_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "mrcheck/matcher.h"
#include "mrcheck/mr.h"

namespace mrcheck {

struct SerCounts {
  size_t added = 0;
  size_t missing = 0;
  size_t wrong = 0;
  size_t slots = 0;

  size_t errors() const { return added + missing + wrong; }
  double ser() const {
    return slots ? static_cast<double>(errors()) / static_cast<double>(slots)
                 : 0.0;
  }

  friend bool operator==(const SerCounts&, const SerCounts&) = default;
};

struct SerReport {
  std::vector<SerCounts> per_instance;
  size_t total_added = 0;
  size_t total_missing = 0;
  size_t total_wrong = 0;
  size_t total_slots = 0;
  double micro_ser = 0;  // sum of errors / sum of slots; the headline number
  double macro_ser = 0;  // mean of per-instance SER
  double add_rate = 0;
  double miss_rate = 0;
  double wrong_rate = 0;
  size_t inst_ok = 0;  // instances without any error
};

// Fails with kEmptyInput when the MR has no slots.
absl::StatusOr<SerCounts> SerInstance(const SlotDiff& diff,
                                      const MeaningRepresentation& mr);

// Fails with kEmptyInput on an empty list. Sums are integer, so the
// aggregate does not depend on instance order.
absl::StatusOr<SerReport> SerCorpus(std::span<const SerCounts> counts);

struct SerInput {
  MeaningRepresentation mr;
  SlotDiff diff;
};
absl::StatusOr<SerReport> SerCorpus(std::span<const SerInput> inputs);

}  // namespace mrcheck

#endif  // MRCHECK_SER_H_
