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

// Meaning representations: sets of attribute[value] slots in the textual
// E2E syntax, e.g.
//
//   name[Cotto], eatType[coffee shop], customer_rating[low]

#ifndef MRCHECK_MR_H_
#define MRCHECK_MR_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "mrcheck/schema.h"

namespace mrcheck {

struct SlotValue {
  std::string attribute;  // canonical attribute name
  std::string value;      // surface value as written in the MR

  friend bool operator==(const SlotValue&, const SlotValue&) = default;
};

// An immutable set of slots. Slots keep their input order for inspection;
// equality and formatting use canonical attribute order, so two MRs listing
// the same slots in different orders compare equal.
class MeaningRepresentation {
 public:
  MeaningRepresentation() = default;

  // Canonicalizes attribute names, trims values and validates: at least
  // one slot, no empty value, no attribute twice, every attribute known to
  // `schema`.
  static absl::StatusOr<MeaningRepresentation> Create(
      std::vector<SlotValue> slots, const Schema& schema = Schema::E2E());

  const std::vector<SlotValue>& slots() const { return slots_; }
  std::vector<SlotValue> CanonicalSlots() const;

  // nullptr when the attribute is absent.
  const SlotValue* Find(std::string_view attribute) const;
  bool Has(std::string_view attribute) const { return Find(attribute); }

  size_t size() const { return slots_.size(); }
  bool empty() const { return slots_.empty(); }

  friend bool operator==(const MeaningRepresentation& a,
                         const MeaningRepresentation& b);

 private:
  std::vector<SlotValue> slots_;
  // Indices into slots_ in canonical order.
  std::vector<size_t> canonical_;
};

// Parses comma-separated attr[value] pairs. Errors carry the byte offset of
// the offending pair (see GetByteOffset) and kind kMalformed,
// kDuplicateSlot, kUnknownAttribute or kEmptyInput.
absl::StatusOr<MeaningRepresentation> ParseMr(
    std::string_view text, const Schema& schema = Schema::E2E());

// Canonical form: schema order, written attribute spellings, ", " between
// pairs. Also used as the grouping and dedup key.
std::string FormatMr(const MeaningRepresentation& mr,
                     const Schema& schema = Schema::E2E());

}  // namespace mrcheck

#endif  // MRCHECK_MR_H_
