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

#include "mrcheck/schema.h"

#include <algorithm>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "mrcheck/errors.h"

namespace mrcheck {

std::string NormalizeAttributeKey(std::string_view raw) {
  std::string key;
  key.reserve(raw.size());
  for (char c : raw) {
    if (c == ' ' || c == '_' || c == '-' || c == '\t') continue;
    key.push_back(absl::ascii_tolower(static_cast<unsigned char>(c)));
  }
  return key;
}

const Schema& Schema::E2E() {
  static const Schema* schema = [] {
    auto* s = new Schema();
    s->attributes_ = {
        {"name", "name", {}},
        {"eatType", "eatType", {"coffee shop", "pub", "restaurant"}},
        {"food",
         "food",
         {"Chinese", "English", "Fast food", "French", "Indian", "Italian",
          "Japanese"}},
        {"priceRange",
         "priceRange",
         {"cheap", "less than £20", "moderate", "£20-25", "high",
          "more than £30"}},
        {"customerRating",
         "customer_rating",
         {"low", "1 out of 5", "average", "3 out of 5", "high",
          "5 out of 5"}},
        {"area", "area", {"city centre", "riverside"}},
        {"familyFriendly", "familyFriendly", {"yes", "no"}},
        {"near", "near", {}},
    };
    s->builtin_count_ = s->attributes_.size();
    return s;
  }();
  return *schema;
}

absl::Status Schema::AddAttribute(AttributeSpec spec) {
  if (spec.name.empty()) {
    return MakeError(absl::StatusCode::kInvalidArgument, ErrorKind::kConfig,
                     "attribute name must be nonempty");
  }
  if (Canonicalize(spec.name)) {
    return MakeError(absl::StatusCode::kInvalidArgument, ErrorKind::kConfig,
                     absl::StrCat("attribute '", spec.name,
                                  "' is already declared"));
  }
  if (spec.written_form.empty()) spec.written_form = spec.name;
  attributes_.push_back(std::move(spec));
  std::sort(attributes_.begin() + builtin_count_, attributes_.end(),
            [](const AttributeSpec& a, const AttributeSpec& b) {
              return a.name < b.name;
            });
  return absl::OkStatus();
}

std::optional<std::string> Schema::Canonicalize(std::string_view raw) const {
  std::string key = NormalizeAttributeKey(raw);
  if (key.empty()) return std::nullopt;
  for (const AttributeSpec& attr : attributes_) {
    if (NormalizeAttributeKey(attr.name) == key ||
        NormalizeAttributeKey(attr.written_form) == key) {
      return attr.name;
    }
  }
  return std::nullopt;
}

const AttributeSpec* Schema::Find(std::string_view canonical) const {
  for (const AttributeSpec& attr : attributes_) {
    if (attr.name == canonical) return &attr;
  }
  return nullptr;
}

size_t Schema::Rank(std::string_view canonical) const {
  for (size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].name == canonical) return i;
  }
  return attributes_.size();
}

}  // namespace mrcheck
