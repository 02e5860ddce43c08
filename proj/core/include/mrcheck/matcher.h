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

// Pattern-based slot matching.
//
// A reference text is tokenized and searched for realizations of each
// attribute. Open-class attributes listed as lexicon attributes (name,
// near) are searched verbatim, guided by the MR paired with the text; their
// spans are then masked so a restaurant called "Raja Indian Cuisine" does
// not count as food[Indian]. Closed-class attributes are found with regular
// expressions grouped into rules; each rule points at a value class, a set
// of MR surface values with the same meaning ("cheap" and "less than £20").
//
// Comparing the detections with the MR yields added, missing and
// wrong-value slots, and the corrected MR describing what the text says.

#ifndef MRCHECK_MATCHER_H_
#define MRCHECK_MATCHER_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "mrcheck/mr.h"
#include "mrcheck/schema.h"

namespace mrcheck {

struct ValueClass {
  std::string id;
  // MR surface values sharing the meaning. members[0] is the canonical
  // member written when a rule does not name one.
  std::vector<std::string> members;
};

struct PatternRule {
  std::string id;
  std::string attribute;
  std::string value_class;
  // Regular expressions (Perl syntax) over the lowercased, space-joined
  // token stream. Matches must start and end on token boundaries.
  std::vector<std::string> patterns;
  int priority = 0;
  // Surface value written for text matched by this rule when the MR value
  // is not already in the class. Empty means the class's canonical member.
  std::string emit;
};

struct MatcherOptions {
  // When set, an MR eatType[restaurant] that the text does not realize is
  // not counted as missing.
  bool ignore_eattype_restaurant_omission = false;
};

// Immutable, cheap to copy, safe to share across threads.
class MatcherConfig {
 public:
  // Parses and validates a YAML config (see data/default_matcher.yaml for
  // the schema). Errors are kConfig; a pattern that does not compile names
  // its rule id.
  static absl::StatusOr<MatcherConfig> FromYaml(std::string_view yaml);
  static absl::StatusOr<MatcherConfig> Load(const std::string& path);

  // The shipped default config, compiled into the library.
  static const MatcherConfig& Default();
  static std::string_view DefaultYaml();

  MatcherConfig WithOptions(const MatcherOptions& options) const;

  const Schema& schema() const;
  const MatcherOptions& options() const;
  const std::vector<PatternRule>& rules() const;
  const std::vector<std::string>& lexicon_attributes() const;
  bool IsLexicon(std::string_view attribute) const;

  // Value classes declared for an attribute (empty for lexicon ones).
  const std::vector<ValueClass>& ClassesFor(std::string_view attribute) const;
  const ValueClass* FindClass(std::string_view attribute,
                              std::string_view class_id) const;

  // Class id of an MR surface value (case-insensitive member lookup). For
  // values outside every class, and for lexicon attributes, returns the
  // literal class "=<lowercased value>".
  std::string ClassOf(std::string_view attribute,
                      std::string_view value) const;

  // Compiled state; opaque outside the library.
  struct Impl;
  const Impl& impl() const { return *impl_; }

 private:
  explicit MatcherConfig(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct TokenSpan {
  size_t begin = 0;  // first token
  size_t end = 0;    // one past the last token

  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

struct Detection {
  std::string attribute;
  std::string value_class;
  // Surface value to write into a corrected MR for this detection.
  std::string surface;
  TokenSpan span;
  std::string rule_id;  // "lexicon" or "literal" for MR-guided matches

  friend bool operator==(const Detection&, const Detection&) = default;
};

struct DetectedSlots {
  // At most one detection per attribute, in canonical attribute order.
  std::vector<Detection> detections;
  // Attributes for which rules of more than one value class matched; the
  // winner is still a single detection.
  std::vector<std::string> conflicts;
  size_t token_count = 0;

  const Detection* Find(std::string_view attribute) const;
};

// Deterministic; an empty text yields no detections.
DetectedSlots MatchSlots(std::string_view text,
                         const MeaningRepresentation& mr,
                         const MatcherConfig& config);

struct WrongValue {
  SlotValue expected;  // the MR slot
  Detection detected;

  friend bool operator==(const WrongValue&, const WrongValue&) = default;
};

struct SlotDiff {
  std::vector<Detection> added;    // detected, attribute absent from MR
  std::vector<SlotValue> missing;  // MR slot without detection
  std::vector<WrongValue> wrong;   // detected with a different value class

  bool empty() const { return added.empty() && missing.empty() && wrong.empty(); }
  size_t error_count() const {
    return added.size() + missing.size() + wrong.size();
  }
};

SlotDiff DiffSlots(const MeaningRepresentation& mr,
                   const DetectedSlots& detected, const MatcherConfig& config);

enum class CleaningMode {
  kFull,         // MR becomes exactly what the text realizes
  kMissingOnly,  // drop missing slots, fix wrong values, ignore additions
  kAddedOnly,    // add added slots, fix wrong values, keep missing ones
};

std::string_view CleaningModeName(CleaningMode mode);  // "full", ...
std::optional<CleaningMode> ParseCleaningMode(std::string_view name);

// Rewrites `mr` according to the diff against `detected`. Slots whose value
// is confirmed keep their original surface. In kMissingOnly the name slot is
// never dropped. Fails with kDegenerateOutput when no slot is left.
absl::StatusOr<MeaningRepresentation> CorrectMr(
    const MeaningRepresentation& mr, const DetectedSlots& detected,
    CleaningMode mode, const MatcherConfig& config);

}  // namespace mrcheck

#endif  // MRCHECK_MATCHER_H_
