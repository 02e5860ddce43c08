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

#include "mrcheck/matcher.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>

#include <boost/regex.hpp>
#include <yaml-cpp/yaml.h>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "mrcheck/csv.h"
#include "mrcheck/errors.h"
#include "mrcheck/tokenizer.h"
#include "string_view_util.h"

namespace mrcheck {

// Defined in the generated default_config.cc.
extern const char kDefaultMatcherYaml[];

namespace {

constexpr char kLiteralPrefix[] = "=";
// Stands in for masked lexicon tokens: neither a space nor matched by \w.
constexpr char kMaskToken[] = "\x01";

struct AttributeEntry {
  std::string attribute;
  std::vector<ValueClass> classes;
  std::vector<size_t> rules;  // indices into Impl::rules
};

absl::Status ConfigError(std::string_view message) {
  return MakeError(absl::StatusCode::kInvalidArgument, ErrorKind::kConfig,
                   message);
}

std::string LiteralClass(std::string_view value) {
  return absl::StrCat(kLiteralPrefix,
                      absl::AsciiStrToLower(ToAbsl(StripWhitespace(value))));
}

}  // namespace

struct MatcherConfig::Impl {
  Schema schema;
  MatcherOptions options;
  std::vector<std::string> lexicon;
  std::vector<PatternRule> rules;
  std::vector<boost::regex> regexes;  // parallel to rules
  std::vector<AttributeEntry> attributes;

  const AttributeEntry* Entry(std::string_view attribute) const {
    for (const AttributeEntry& entry : attributes) {
      if (entry.attribute == attribute) return &entry;
    }
    return nullptr;
  }
};

namespace {

absl::StatusOr<std::vector<std::string>> ReadStringList(const YAML::Node& node,
                                                        std::string_view what) {
  std::vector<std::string> out;
  if (!node) return out;
  if (!node.IsSequence()) {
    return ConfigError(absl::StrCat(ToAbsl(what), " must be a list"));
  }
  for (const YAML::Node& item : node) {
    if (!item.IsScalar()) {
      return ConfigError(absl::StrCat(ToAbsl(what), " entries must be strings"));
    }
    out.push_back(item.as<std::string>());
  }
  return out;
}

absl::StatusOr<std::shared_ptr<MatcherConfig::Impl>> BuildImpl(
    const YAML::Node& root) {
  auto impl = std::make_shared<MatcherConfig::Impl>();
  impl->schema = Schema::E2E();

  if (!root.IsMap()) return ConfigError("config root must be a mapping");
  if (const YAML::Node version = root["version"]) {
    if (version.as<std::string>() != "1") {
      return ConfigError(absl::StrCat("unsupported config version '",
                                      version.as<std::string>(), "'"));
    }
  }

  if (const YAML::Node extra = root["extra_attributes"]) {
    if (!extra.IsSequence()) {
      return ConfigError("extra_attributes must be a list");
    }
    for (const YAML::Node& item : extra) {
      AttributeSpec spec;
      spec.name = item["name"] ? item["name"].as<std::string>() : "";
      spec.written_form =
          item["written_form"] ? item["written_form"].as<std::string>() : "";
      absl::StatusOr<std::vector<std::string>> values =
          ReadStringList(item["values"], "extra_attributes.values");
      if (!values.ok()) return values.status();
      spec.closed_values = *std::move(values);
      if (absl::Status s = impl->schema.AddAttribute(std::move(spec)); !s.ok()) {
        return s;
      }
    }
  }

  if (const YAML::Node options = root["options"]) {
    if (const YAML::Node flag = options["ignore_eattype_restaurant_omission"]) {
      impl->options.ignore_eattype_restaurant_omission = flag.as<bool>();
    }
  }

  absl::StatusOr<std::vector<std::string>> lexicon =
      ReadStringList(root["lexicon_attributes"], "lexicon_attributes");
  if (!lexicon.ok()) return lexicon.status();
  for (const std::string& raw : *lexicon) {
    std::optional<std::string> name = impl->schema.Canonicalize(raw);
    if (!name) {
      return ConfigError(
          absl::StrCat("unknown lexicon attribute '", raw, "'"));
    }
    impl->lexicon.push_back(*name);
  }

  const YAML::Node attributes = root["attributes"];
  if (attributes && !attributes.IsMap()) {
    return ConfigError("attributes must be a mapping");
  }
  std::vector<AttributeEntry> entries;
  if (attributes) {
    for (const auto& kv : attributes) {
      const std::string raw = kv.first.as<std::string>();
      std::optional<std::string> name = impl->schema.Canonicalize(raw);
      if (!name) {
        return ConfigError(absl::StrCat("unknown attribute '", raw, "'"));
      }
      if (std::find(impl->lexicon.begin(), impl->lexicon.end(), *name) !=
          impl->lexicon.end()) {
        return ConfigError(absl::StrCat(
            "attribute '", *name, "' is a lexicon attribute and takes no rules"));
      }
      for (const AttributeEntry& seen : entries) {
        if (seen.attribute == *name) {
          return ConfigError(
              absl::StrCat("attribute '", *name, "' configured twice"));
        }
      }
      AttributeEntry entry;
      entry.attribute = *name;
      const YAML::Node body = kv.second;

      // Value classes.
      const YAML::Node classes = body["classes"];
      if (!classes || !classes.IsSequence()) {
        return ConfigError(
            absl::StrCat("attribute '", *name, "' needs a classes list"));
      }
      std::set<std::string> seen_members;
      for (const YAML::Node& c : classes) {
        ValueClass vc;
        vc.id = c["id"] ? c["id"].as<std::string>() : "";
        if (vc.id.empty()) {
          return ConfigError(
              absl::StrCat("value class without id in '", *name, "'"));
        }
        for (const ValueClass& other : entry.classes) {
          if (other.id == vc.id) {
            return ConfigError(absl::StrCat("duplicate value class '", vc.id,
                                            "' in '", *name, "'"));
          }
        }
        absl::StatusOr<std::vector<std::string>> members =
            ReadStringList(c["members"], "members");
        if (!members.ok()) return members.status();
        if (members->empty()) {
          return ConfigError(absl::StrCat("value class '", vc.id, "' of '",
                                          *name, "' has no members"));
        }
        for (const std::string& member : *members) {
          std::string key = absl::AsciiStrToLower(member);
          if (!seen_members.insert(key).second) {
            return ConfigError(absl::StrCat("value '", member,
                                            "' belongs to two classes of '",
                                            *name, "'"));
          }
        }
        vc.members = *std::move(members);
        entry.classes.push_back(std::move(vc));
      }

      // Rules.
      const YAML::Node rules = body["rules"];
      if (!rules || !rules.IsSequence()) {
        return ConfigError(
            absl::StrCat("attribute '", *name, "' needs a rules list"));
      }
      size_t ordinal = 0;
      for (const YAML::Node& r : rules) {
        PatternRule rule;
        rule.attribute = *name;
        rule.value_class = r["class"] ? r["class"].as<std::string>() : "";
        rule.id = r["id"] ? r["id"].as<std::string>()
                          : absl::StrCat(*name, ".", rule.value_class, ".",
                                         ordinal);
        ++ordinal;
        rule.priority = r["priority"] ? r["priority"].as<int>() : 0;
        rule.emit = r["emit"] ? r["emit"].as<std::string>() : "";
        absl::StatusOr<std::vector<std::string>> patterns =
            ReadStringList(r["patterns"], "patterns");
        if (!patterns.ok()) return Annotate(patterns.status(), rule.id);
        rule.patterns = *std::move(patterns);
        if (rule.patterns.empty()) {
          return ConfigError(absl::StrCat("rule '", rule.id, "' has no patterns"));
        }
        const ValueClass* target = nullptr;
        for (const ValueClass& vc : entry.classes) {
          if (vc.id == rule.value_class) target = &vc;
        }
        if (!target) {
          return ConfigError(absl::StrCat("rule '", rule.id,
                                          "' refers to unknown value class '",
                                          rule.value_class, "'"));
        }
        if (!rule.emit.empty() &&
            std::none_of(target->members.begin(), target->members.end(),
                         [&](const std::string& m) { return m == rule.emit; })) {
          return ConfigError(absl::StrCat("rule '", rule.id, "' emits '",
                                          rule.emit, "' which is not a member of '",
                                          rule.value_class, "'"));
        }
        std::vector<std::string> wrapped;
        for (size_t i = 0; i < rule.patterns.size(); ++i) {
          try {
            boost::regex check(rule.patterns[i],
                               boost::regex::perl | boost::regex::icase);
          } catch (const boost::regex_error& e) {
            return ConfigError(absl::StrCat("rule '", rule.id, "': pattern ",
                                            i + 1, " does not compile: ",
                                            e.what()));
          }
          wrapped.push_back(absl::StrCat("(?:", rule.patterns[i], ")"));
        }
        // One search per rule; boundaries are a space or either end.
        std::string combined =
            absl::StrCat("(?<![^ ])(?:", absl::StrJoin(wrapped, "|"),
                         ")(?![^ ])");
        try {
          impl->regexes.emplace_back(combined,
                                     boost::regex::perl | boost::regex::icase);
        } catch (const boost::regex_error& e) {
          return ConfigError(absl::StrCat("rule '", rule.id,
                                          "' does not compile: ", e.what()));
        }
        for (const PatternRule& other : impl->rules) {
          if (other.id == rule.id) {
            return ConfigError(absl::StrCat("duplicate rule id '", rule.id, "'"));
          }
        }
        entry.rules.push_back(impl->rules.size());
        impl->rules.push_back(std::move(rule));
      }
      for (const ValueClass& vc : entry.classes) {
        bool covered = std::any_of(
            entry.rules.begin(), entry.rules.end(), [&](size_t i) {
              return impl->rules[i].value_class == vc.id;
            });
        if (!covered) {
          return ConfigError(absl::StrCat("value class '", vc.id, "' of '",
                                          *name, "' has no rule"));
        }
      }
      entries.push_back(std::move(entry));
    }
  }

  // Every closed value of every schema attribute must sit in some class.
  for (const AttributeSpec& spec : impl->schema.attributes()) {
    if (spec.closed_values.empty()) continue;
    const AttributeEntry* entry = nullptr;
    for (const AttributeEntry& e : entries) {
      if (e.attribute == spec.name) entry = &e;
    }
    if (!entry) {
      return ConfigError(absl::StrCat("closed-class attribute '", spec.name,
                                      "' has no value classes"));
    }
    for (const std::string& value : spec.closed_values) {
      bool found = false;
      for (const ValueClass& vc : entry->classes) {
        for (const std::string& m : vc.members) {
          found = found || absl::EqualsIgnoreCase(m, value);
        }
      }
      if (!found) {
        return ConfigError(absl::StrCat("no value class for '", value,
                                        "' of attribute '", spec.name, "'"));
      }
    }
  }

  std::sort(entries.begin(), entries.end(),
            [&](const AttributeEntry& a, const AttributeEntry& b) {
              return impl->schema.Rank(a.attribute) <
                     impl->schema.Rank(b.attribute);
            });
  impl->attributes = std::move(entries);
  return impl;
}

}  // namespace

absl::StatusOr<MatcherConfig> MatcherConfig::FromYaml(std::string_view yaml) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml));
  } catch (const YAML::Exception& e) {
    return ConfigError(absl::StrCat("config does not parse: ", e.what()));
  }
  absl::StatusOr<std::shared_ptr<Impl>> impl;
  try {
    impl = BuildImpl(root);
  } catch (const YAML::Exception& e) {
    return ConfigError(absl::StrCat("bad config value: ", e.what()));
  }
  if (!impl.ok()) return impl.status();
  return MatcherConfig(*std::move(impl));
}

absl::StatusOr<MatcherConfig> MatcherConfig::Load(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<MatcherConfig> config = FromYaml(*text);
  if (!config.ok()) return Annotate(config.status(), path);
  return config;
}

std::string_view MatcherConfig::DefaultYaml() { return kDefaultMatcherYaml; }

const MatcherConfig& MatcherConfig::Default() {
  static const MatcherConfig* config = [] {
    absl::StatusOr<MatcherConfig> parsed = FromYaml(DefaultYaml());
    if (!parsed.ok()) {
      std::fprintf(stderr, "mrcheck: built-in matcher config is invalid: %s\n",
                   std::string(parsed.status().message()).c_str());
      std::abort();
    }
    return new MatcherConfig(*std::move(parsed));
  }();
  return *config;
}

MatcherConfig MatcherConfig::WithOptions(const MatcherOptions& options) const {
  auto copy = std::make_shared<Impl>(*impl_);
  copy->options = options;
  return MatcherConfig(std::move(copy));
}

const Schema& MatcherConfig::schema() const { return impl_->schema; }
const MatcherOptions& MatcherConfig::options() const { return impl_->options; }
const std::vector<PatternRule>& MatcherConfig::rules() const {
  return impl_->rules;
}
const std::vector<std::string>& MatcherConfig::lexicon_attributes() const {
  return impl_->lexicon;
}

bool MatcherConfig::IsLexicon(std::string_view attribute) const {
  return std::find(impl_->lexicon.begin(), impl_->lexicon.end(), attribute) !=
         impl_->lexicon.end();
}

const std::vector<ValueClass>& MatcherConfig::ClassesFor(
    std::string_view attribute) const {
  static const std::vector<ValueClass> kNone;
  const AttributeEntry* entry = impl_->Entry(attribute);
  return entry ? entry->classes : kNone;
}

const ValueClass* MatcherConfig::FindClass(std::string_view attribute,
                                           std::string_view class_id) const {
  for (const ValueClass& vc : ClassesFor(attribute)) {
    if (vc.id == class_id) return &vc;
  }
  return nullptr;
}

std::string MatcherConfig::ClassOf(std::string_view attribute,
                                   std::string_view value) const {
  std::string_view trimmed = StripWhitespace(value);
  for (const ValueClass& vc : ClassesFor(attribute)) {
    for (const std::string& member : vc.members) {
      if (absl::EqualsIgnoreCase(member, ToAbsl(trimmed))) return vc.id;
    }
  }
  return LiteralClass(trimmed);
}

const Detection* DetectedSlots::Find(std::string_view attribute) const {
  for (const Detection& d : detections) {
    if (d.attribute == attribute) return &d;
  }
  return nullptr;
}

namespace {

// Leftmost occurrence of `needle` in `haystack` among unmasked tokens.
std::optional<size_t> FindTokens(const std::vector<std::string>& haystack,
                                 const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return std::nullopt;
  for (size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), haystack.begin() + i)) {
      return i;
    }
  }
  return std::nullopt;
}

// The value's tokens, plus the form without a leading article.
std::vector<std::vector<std::string>> LexiconForms(std::string_view value) {
  std::vector<std::vector<std::string>> forms;
  std::vector<std::string> tokens = Tokenize(value);
  if (tokens.empty()) return forms;
  forms.push_back(tokens);
  if (tokens.size() > 1 && (tokens[0] == "the" || tokens[0] == "a")) {
    forms.emplace_back(tokens.begin() + 1, tokens.end());
  }
  return forms;
}

// Finds the value in `tokens`; on success masks every occurrence of every
// form and returns the span of the first hit.
std::optional<TokenSpan> FindAndMask(std::vector<std::string>& tokens,
                                     std::string_view value) {
  std::optional<TokenSpan> hit;
  for (const std::vector<std::string>& form : LexiconForms(value)) {
    std::optional<size_t> at;
    while ((at = FindTokens(tokens, form))) {
      if (!hit) hit = TokenSpan{*at, *at + form.size()};
      for (size_t k = 0; k < form.size(); ++k) tokens[*at + k] = kMaskToken;
    }
  }
  return hit;
}

}  // namespace

DetectedSlots MatchSlots(std::string_view text,
                         const MeaningRepresentation& mr,
                         const MatcherConfig& config) {
  const MatcherConfig::Impl& impl = config.impl();
  DetectedSlots result;
  std::vector<std::string> tokens = Tokenize(text);
  result.token_count = tokens.size();
  if (tokens.empty()) return result;

  // MR-guided lexicon attributes first, then mask them.
  for (const std::string& attribute : impl.lexicon) {
    const SlotValue* slot = mr.Find(attribute);
    if (!slot) continue;
    if (std::optional<TokenSpan> span = FindAndMask(tokens, slot->value)) {
      result.detections.push_back({attribute, LiteralClass(slot->value),
                                   slot->value, *span, "lexicon"});
    }
  }

  std::string joined;
  std::vector<size_t> starts;
  starts.reserve(tokens.size());
  for (const std::string& token : tokens) {
    if (!joined.empty()) joined.push_back(' ');
    starts.push_back(joined.size());
    joined += token;
  }
  auto token_at = [&](size_t offset) {
    return static_cast<size_t>(
        std::upper_bound(starts.begin(), starts.end(), offset) -
        starts.begin() - 1);
  };

  for (const AttributeEntry& entry : impl.attributes) {
    struct Candidate {
      size_t rule;
      size_t begin;
      size_t end;
    };
    std::vector<Candidate> candidates;
    for (size_t r : entry.rules) {
      boost::smatch m;
      if (boost::regex_search(joined, m, impl.regexes[r])) {
        const auto begin = static_cast<size_t>(m[0].first - joined.cbegin());
        const auto end = begin + static_cast<size_t>(m[0].length());
        if (end == begin) continue;
        candidates.push_back({r, token_at(begin), token_at(end - 1) + 1});
      }
    }
    if (candidates.empty()) continue;
    const Candidate* best = &candidates.front();
    std::set<std::string> classes;
    for (const Candidate& c : candidates) {
      const PatternRule& rule = impl.rules[c.rule];
      const PatternRule& current = impl.rules[best->rule];
      classes.insert(rule.value_class);
      if (rule.priority > current.priority ||
          (rule.priority == current.priority && c.begin < best->begin)) {
        best = &c;
      }
    }
    if (classes.size() > 1) result.conflicts.push_back(entry.attribute);
    const PatternRule& rule = impl.rules[best->rule];
    std::string surface = rule.emit;
    if (surface.empty()) {
      surface = config.FindClass(entry.attribute, rule.value_class)->members[0];
    }
    result.detections.push_back({entry.attribute, rule.value_class,
                                 std::move(surface),
                                 TokenSpan{best->begin, best->end}, rule.id});
  }

  // MR values outside every value class are searched verbatim.
  for (const SlotValue& slot : mr.slots()) {
    if (config.IsLexicon(slot.attribute) || result.Find(slot.attribute)) {
      continue;
    }
    const std::string cls = config.ClassOf(slot.attribute, slot.value);
    if (!cls.starts_with(kLiteralPrefix)) continue;
    if (std::optional<TokenSpan> span = FindAndMask(tokens, slot.value)) {
      result.detections.push_back(
          {slot.attribute, cls, slot.value, *span, "literal"});
    }
  }

  const Schema& schema = impl.schema;
  std::stable_sort(result.detections.begin(), result.detections.end(),
                   [&](const Detection& a, const Detection& b) {
                     return schema.Rank(a.attribute) < schema.Rank(b.attribute);
                   });
  std::sort(result.conflicts.begin(), result.conflicts.end(),
            [&](const std::string& a, const std::string& b) {
              return schema.Rank(a) < schema.Rank(b);
            });
  return result;
}

SlotDiff DiffSlots(const MeaningRepresentation& mr,
                   const DetectedSlots& detected,
                   const MatcherConfig& config) {
  SlotDiff diff;
  for (const SlotValue& slot : mr.CanonicalSlots()) {
    const Detection* found = detected.Find(slot.attribute);
    if (!found) {
      const bool lenient =
          config.options().ignore_eattype_restaurant_omission &&
          slot.attribute == "eatType" &&
          absl::EqualsIgnoreCase(ToAbsl(StripWhitespace(slot.value)),
                                 "restaurant");
      if (!lenient) diff.missing.push_back(slot);
      continue;
    }
    if (config.ClassOf(slot.attribute, slot.value) != found->value_class) {
      diff.wrong.push_back({slot, *found});
    }
  }
  for (const Detection& d : detected.detections) {
    if (!mr.Has(d.attribute)) diff.added.push_back(d);
  }
  return diff;
}

std::string_view CleaningModeName(CleaningMode mode) {
  switch (mode) {
    case CleaningMode::kFull: return "full";
    case CleaningMode::kMissingOnly: return "missing";
    case CleaningMode::kAddedOnly: return "added";
  }
  return "full";
}

std::optional<CleaningMode> ParseCleaningMode(std::string_view name) {
  if (name == "full") return CleaningMode::kFull;
  if (name == "missing" || name == "missing_only") {
    return CleaningMode::kMissingOnly;
  }
  if (name == "added" || name == "added_only") return CleaningMode::kAddedOnly;
  return std::nullopt;
}

absl::StatusOr<MeaningRepresentation> CorrectMr(
    const MeaningRepresentation& mr, const DetectedSlots& detected,
    CleaningMode mode, const MatcherConfig& config) {
  const SlotDiff diff = DiffSlots(mr, detected, config);
  const bool drop_missing = mode != CleaningMode::kAddedOnly;
  const bool add_added = mode != CleaningMode::kMissingOnly;

  std::vector<SlotValue> slots;
  for (const SlotValue& slot : mr.CanonicalSlots()) {
    const bool is_missing =
        std::find(diff.missing.begin(), diff.missing.end(), slot) !=
        diff.missing.end();
    if (is_missing && drop_missing &&
        !(mode == CleaningMode::kMissingOnly && slot.attribute == "name")) {
      continue;
    }
    auto wrong = std::find_if(diff.wrong.begin(), diff.wrong.end(),
                              [&](const WrongValue& w) {
                                return w.expected.attribute == slot.attribute;
                              });
    if (wrong != diff.wrong.end()) {
      slots.push_back({slot.attribute, wrong->detected.surface});
    } else {
      slots.push_back(slot);
    }
  }
  if (add_added) {
    for (const Detection& d : diff.added) {
      slots.push_back({d.attribute, d.surface});
    }
  }
  if (slots.empty()) {
    return MakeError(absl::StatusCode::kFailedPrecondition,
                     ErrorKind::kDegenerateOutput,
                     "correction leaves an empty MR");
  }
  return MeaningRepresentation::Create(std::move(slots), config.schema());
}

}  // namespace mrcheck
