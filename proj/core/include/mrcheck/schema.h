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

#ifndef MRCHECK_SCHEMA_H_
#define MRCHECK_SCHEMA_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"

namespace mrcheck {

// One attribute of the dataset schema.
struct AttributeSpec {
  // Identifier used throughout the library, e.g. "customerRating".
  std::string name;
  // Spelling emitted by FormatMr, e.g. "customer_rating".
  std::string written_form;
  // Closed value set; empty for open-class attributes (name, near).
  std::vector<std::string> closed_values;
};

// The attribute inventory. Attributes are kept in canonical order: the
// built-in E2E attributes first in their fixed order, then any extension
// attributes sorted alphabetically.
class Schema {
 public:
  // name, eatType, food, priceRange, customerRating, area, familyFriendly,
  // near, with the closed value sets of the E2E restaurant data.
  static const Schema& E2E();

  Schema() = default;

  // Registers an extension attribute. Fails if the name (after
  // normalization) collides with an existing one.
  absl::Status AddAttribute(AttributeSpec spec);

  // Resolves spelling variants ("customer_rating", "customer rating",
  // "CustomerRating") to the canonical name.
  std::optional<std::string> Canonicalize(std::string_view raw) const;

  const AttributeSpec* Find(std::string_view canonical) const;

  // Position in canonical order; attributes not in the schema sort last.
  size_t Rank(std::string_view canonical) const;

  const std::vector<AttributeSpec>& attributes() const { return attributes_; }
  size_t builtin_count() const { return builtin_count_; }

 private:
  std::vector<AttributeSpec> attributes_;
  size_t builtin_count_ = 0;
};

// Lowercases and drops spaces, underscores and hyphens.
std::string NormalizeAttributeKey(std::string_view raw);

}  // namespace mrcheck

#endif  // MRCHECK_SCHEMA_H_
