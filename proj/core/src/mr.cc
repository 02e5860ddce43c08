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

#include "mrcheck/mr.h"

#include <algorithm>
#include <numeric>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "mrcheck/errors.h"
#include "string_view_util.h"

namespace mrcheck {
namespace {

absl::Status ParseError(ErrorKind kind, size_t offset,
                        std::string_view what) {
  return MakeError(absl::StatusCode::kInvalidArgument, kind,
                   absl::StrCat("MR parse error at byte ", offset, ": ", ToAbsl(what)),
                   offset);
}

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

}  // namespace

absl::StatusOr<MeaningRepresentation> MeaningRepresentation::Create(
    std::vector<SlotValue> slots, const Schema& schema) {
  if (slots.empty()) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     ErrorKind::kEmptyInput, "MR must have at least one slot");
  }
  MeaningRepresentation mr;
  for (SlotValue& slot : slots) {
    std::optional<std::string> canonical = schema.Canonicalize(slot.attribute);
    if (!canonical) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       ErrorKind::kUnknownAttribute,
                       absl::StrCat("unknown attribute '", slot.attribute, "'"));
    }
    slot.attribute = *canonical;
    slot.value = std::string(StripWhitespace(slot.value));
    if (slot.value.empty()) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       ErrorKind::kMalformed,
                       absl::StrCat("empty value for '", slot.attribute, "'"));
    }
    if (mr.Has(slot.attribute)) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       ErrorKind::kDuplicateSlot,
                       absl::StrCat("duplicate slot '", slot.attribute, "'"));
    }
    mr.slots_.push_back(std::move(slot));
  }
  mr.canonical_.resize(mr.slots_.size());
  std::iota(mr.canonical_.begin(), mr.canonical_.end(), 0);
  std::sort(mr.canonical_.begin(), mr.canonical_.end(),
            [&](size_t a, size_t b) {
              const std::string& x = mr.slots_[a].attribute;
              const std::string& y = mr.slots_[b].attribute;
              size_t rx = schema.Rank(x), ry = schema.Rank(y);
              return rx != ry ? rx < ry : x < y;
            });
  return mr;
}

std::vector<SlotValue> MeaningRepresentation::CanonicalSlots() const {
  std::vector<SlotValue> out;
  out.reserve(slots_.size());
  for (size_t i : canonical_) out.push_back(slots_[i]);
  return out;
}

const SlotValue* MeaningRepresentation::Find(std::string_view attribute) const {
  for (const SlotValue& slot : slots_) {
    if (slot.attribute == attribute) return &slot;
  }
  return nullptr;
}

bool operator==(const MeaningRepresentation& a,
                const MeaningRepresentation& b) {
  if (a.slots_.size() != b.slots_.size()) return false;
  for (size_t i = 0; i < a.canonical_.size(); ++i) {
    if (!(a.slots_[a.canonical_[i]] == b.slots_[b.canonical_[i]])) {
      return false;
    }
  }
  return true;
}

absl::StatusOr<MeaningRepresentation> ParseMr(std::string_view text,
                                              const Schema& schema) {
  if (StripWhitespace(text).empty()) {
    return ParseError(ErrorKind::kEmptyInput, 0, "empty MR");
  }
  std::vector<SlotValue> slots;
  std::vector<size_t> offsets;
  size_t pos = 0;
  const size_t n = text.size();
  while (true) {
    while (pos < n && IsSpace(text[pos])) ++pos;
    const size_t start = pos;
    size_t open = text.find('[', pos);
    if (open == std::string_view::npos) {
      return ParseError(ErrorKind::kMalformed, start, "expected '['");
    }
    std::string_view attr =
        StripWhitespace(text.substr(pos, open - pos));
    if (attr.empty()) {
      return ParseError(ErrorKind::kMalformed, start, "missing attribute name");
    }
    if (attr.find_first_of(",]") != std::string_view::npos) {
      return ParseError(ErrorKind::kMalformed, start,
                        "unexpected ',' or ']' in attribute name");
    }
    size_t close = text.find(']', open + 1);
    if (close == std::string_view::npos) {
      return ParseError(ErrorKind::kMalformed, open, "missing ']'");
    }
    std::string_view value =
        StripWhitespace(text.substr(open + 1, close - open - 1));
    if (value.empty()) {
      return ParseError(ErrorKind::kMalformed, start,
                        absl::StrCat("empty value for '", ToAbsl(attr), "'"));
    }
    if (value.find('[') != std::string_view::npos) {
      return ParseError(ErrorKind::kMalformed, open, "nested '['");
    }
    std::optional<std::string> canonical = schema.Canonicalize(attr);
    if (!canonical) {
      return ParseError(ErrorKind::kUnknownAttribute, start,
                        absl::StrCat("unknown attribute '", ToAbsl(attr), "'"));
    }
    for (const SlotValue& seen : slots) {
      if (seen.attribute == *canonical) {
        return ParseError(ErrorKind::kDuplicateSlot, start,
                          absl::StrCat("duplicate slot '", *canonical, "'"));
      }
    }
    slots.push_back({*canonical, std::string(value)});
    offsets.push_back(start);

    pos = close + 1;
    while (pos < n && IsSpace(text[pos])) ++pos;
    if (pos == n) break;
    if (text[pos] != ',') {
      return ParseError(ErrorKind::kMalformed, pos, "expected ',' between slots");
    }
    ++pos;
  }
  return MeaningRepresentation::Create(std::move(slots), schema);
}

std::string FormatMr(const MeaningRepresentation& mr, const Schema& schema) {
  std::string out;
  for (const SlotValue& slot : mr.CanonicalSlots()) {
    if (!out.empty()) out += ", ";
    const AttributeSpec* spec = schema.Find(slot.attribute);
    absl::StrAppend(&out, spec ? spec->written_form : slot.attribute, "[",
                    slot.value, "]");
  }
  return out;
}

}  // namespace mrcheck
