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

#include <string>
#include <vector>

#include "absl/strings/str_replace.h"
#include "gtest/gtest.h"
#include "mrcheck/errors.h"
#include "mrcheck/matcher.h"
#include "mrcheck/mr.h"
#include "synthetic.h"

namespace mrcheck {
namespace {

constexpr char kFig1Mr[] =
    "name[Cotto], eatType[coffee shop], food[English], "
    "priceRange[less than £20], customer_rating[low], area[riverside], "
    "near[The Portland Arms]";

constexpr const char* kFig1Texts[] = {
    "At the riverside near The Portland Arms, Cotto is a coffee shop that "
    "serves English food at less than £20 and has low customer rating.",
    "Located near The Portland Arms in riverside, the Cotto coffee shop "
    "serves English food with a price range of £20 and a low customer "
    "rating.",
    "Cotto is a coffee shop that serves English food in the city centre.  "
    "They are located near the Portland Arms and are low rated.",
    "Cotto is a cheap coffee shop with one-star located near The Portland "
    "Arms.",
};

MeaningRepresentation Mr(const std::string& text) {
  auto mr = ParseMr(text);
  EXPECT_TRUE(mr.ok()) << text << ": " << mr.status();
  return mr.ok() ? *mr : MeaningRepresentation();
}

std::vector<std::string> Attributes(const DetectedSlots& detected) {
  std::vector<std::string> out;
  for (const Detection& d : detected.detections) out.push_back(d.attribute);
  return out;
}

std::string Corrected(const std::string& mr, const std::string& text,
                      CleaningMode mode, const MatcherConfig& config) {
  const MeaningRepresentation original = Mr(mr);
  auto corrected =
      CorrectMr(original, MatchSlots(text, original, config), mode, config);
  if (!corrected.ok()) return "<" + std::string(corrected.status().message()) + ">";
  return FormatMr(*corrected);
}

class MatcherTest : public ::testing::Test {
 protected:
  const MatcherConfig& config_ = MatcherConfig::Default();
};

TEST_F(MatcherTest, DefaultConfigCoversAllAttributes) {
  EXPECT_EQ(config_.schema().builtin_count(), 8u);
  EXPECT_TRUE(config_.IsLexicon("name"));
  EXPECT_TRUE(config_.IsLexicon("near"));
  for (const AttributeSpec& spec : config_.schema().attributes()) {
    if (config_.IsLexicon(spec.name)) continue;
    EXPECT_FALSE(config_.ClassesFor(spec.name).empty()) << spec.name;
    for (const std::string& value : spec.closed_values) {
      EXPECT_NE(config_.ClassOf(spec.name, value)[0], '=')
          << spec.name << " " << value;
    }
  }
}

TEST_F(MatcherTest, ClassOfIsCaseInsensitive) {
  EXPECT_EQ(config_.ClassOf("priceRange", "cheap"),
            config_.ClassOf("priceRange", "Less than £20"));
  EXPECT_NE(config_.ClassOf("priceRange", "cheap"),
            config_.ClassOf("priceRange", "high"));
  EXPECT_EQ(config_.ClassOf("name", "Cotto"), "=cotto");
}

TEST_F(MatcherTest, Hr1AllSevenSlotsDetected) {
  const auto mr = Mr(kFig1Mr);
  const DetectedSlots detected = MatchSlots(kFig1Texts[0], mr, config_);
  EXPECT_EQ(Attributes(detected),
            (std::vector<std::string>{"name", "eatType", "food", "priceRange",
                                      "customerRating", "area", "near"}));
  EXPECT_TRUE(DiffSlots(mr, detected, config_).empty());
}

TEST_F(MatcherTest, Hr4FiveDetections) {
  const auto mr = Mr(kFig1Mr);
  const DetectedSlots detected = MatchSlots(kFig1Texts[3], mr, config_);
  EXPECT_EQ(Attributes(detected),
            (std::vector<std::string>{"name", "eatType", "priceRange",
                                      "customerRating", "near"}));
  EXPECT_EQ(detected.Find("priceRange")->value_class,
            config_.ClassOf("priceRange", "less than £20"));
  EXPECT_EQ(detected.Find("customerRating")->value_class,
            config_.ClassOf("customerRating", "low"));
}

TEST_F(MatcherTest, Hr3Diff) {
  const auto mr = Mr(kFig1Mr);
  const SlotDiff diff =
      DiffSlots(mr, MatchSlots(kFig1Texts[2], mr, config_), config_);
  EXPECT_TRUE(diff.added.empty());
  ASSERT_EQ(diff.missing.size(), 1u);
  EXPECT_EQ(diff.missing[0].attribute, "priceRange");
  ASSERT_EQ(diff.wrong.size(), 1u);
  EXPECT_EQ(diff.wrong[0].expected, (SlotValue{"area", "riverside"}));
  EXPECT_EQ(diff.wrong[0].detected.surface, "city centre");
}

TEST_F(MatcherTest, Fig1FullCorrections) {
  const std::string expected[] = {
      kFig1Mr,
      // HR2: the price phrase is not recognized, so priceRange is dropped.
      "name[Cotto], eatType[coffee shop], food[English], "
      "customer_rating[low], area[riverside], near[The Portland Arms]",
      "name[Cotto], eatType[coffee shop], food[English], "
      "customer_rating[low], area[city centre], near[The Portland Arms]",
      "name[Cotto], eatType[coffee shop], priceRange[less than £20], "
      "customer_rating[low], near[The Portland Arms]",
  };
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(Corrected(kFig1Mr, kFig1Texts[i], CleaningMode::kFull, config_),
              expected[i])
        << "HR" << i + 1;
  }
}

TEST_F(MatcherTest, EmptyTextDetectsNothing) {
  const DetectedSlots detected = MatchSlots("", Mr(kFig1Mr), config_);
  EXPECT_TRUE(detected.detections.empty());
  EXPECT_EQ(detected.token_count, 0u);
  const SlotDiff diff = DiffSlots(Mr(kFig1Mr), detected, config_);
  EXPECT_EQ(diff.missing.size(), 7u);
}

TEST_F(MatcherTest, AddedSlot) {
  const auto mr = Mr("name[X]");
  const SlotDiff diff = DiffSlots(
      mr, MatchSlots("X is by the riverside.", mr, config_), config_);
  ASSERT_EQ(diff.added.size(), 1u);
  EXPECT_EQ(diff.added[0].attribute, "area");
  EXPECT_TRUE(diff.missing.empty());
  EXPECT_TRUE(diff.wrong.empty());
}

TEST_F(MatcherTest, SpansAreTokenIndices) {
  const auto mr = Mr("name[Cotto], eatType[pub]");
  const DetectedSlots detected = MatchSlots("Cotto is a pub.", mr, config_);
  ASSERT_NE(detected.Find("eatType"), nullptr);
  EXPECT_EQ(detected.Find("eatType")->span, (TokenSpan{3, 4}));
  EXPECT_EQ(detected.Find("name")->span, (TokenSpan{0, 1}));
  EXPECT_EQ(detected.token_count, 5u);
}

TEST_F(MatcherTest, MatchesRespectTokenBoundaries) {
  const auto mr = Mr("name[Cotto], eatType[pub]");
  const DetectedSlots detected =
      MatchSlots("Cotto is a republic of flavours.", mr, config_);
  EXPECT_EQ(detected.Find("eatType"), nullptr);
}

TEST_F(MatcherTest, HigherPriorityWinsAndConflictIsFlagged) {
  const auto mr = Mr("name[Z], priceRange[high]");
  const DetectedSlots detected = MatchSlots(
      "Z is not expensive but some say it is expensive.", mr, config_);
  ASSERT_NE(detected.Find("priceRange"), nullptr);
  EXPECT_EQ(detected.Find("priceRange")->value_class,
            config_.ClassOf("priceRange", "cheap"));
  EXPECT_EQ(detected.conflicts, (std::vector<std::string>{"priceRange"}));
  const SlotDiff diff = DiffSlots(mr, detected, config_);
  EXPECT_EQ(diff.wrong.size(), 1u);
  EXPECT_EQ(diff.error_count(), 1u);
}

TEST_F(MatcherTest, EatTypeRestaurantLeniency) {
  const auto mr = Mr("name[Z], eatType[restaurant], food[Indian]");
  const std::string text = "Z serves Indian food.";
  const SlotDiff strict =
      DiffSlots(mr, MatchSlots(text, mr, config_), config_);
  EXPECT_EQ(strict.missing.size(), 1u);

  MatcherOptions options;
  options.ignore_eattype_restaurant_omission = true;
  const MatcherConfig lenient = config_.WithOptions(options);
  const SlotDiff relaxed =
      DiffSlots(mr, MatchSlots(text, mr, lenient), lenient);
  EXPECT_TRUE(relaxed.empty());
  EXPECT_EQ(Corrected(FormatMr(mr), text, CleaningMode::kFull, lenient),
            FormatMr(mr));

  // The leniency covers only the omission; a pub is still a wrong value.
  const SlotDiff wrong =
      DiffSlots(mr, MatchSlots("Z is an Indian pub.", mr, lenient), lenient);
  EXPECT_EQ(wrong.wrong.size(), 1u);
}

TEST_F(MatcherTest, CleaningModes) {
  const std::string mr = "name[X], eatType[pub], area[riverside]";
  // area missing, eatType wrong, food added.
  const std::string text = "X is a coffee shop serving Italian food.";
  EXPECT_EQ(Corrected(mr, text, CleaningMode::kFull, config_),
            "name[X], eatType[coffee shop], food[Italian]");
  EXPECT_EQ(Corrected(mr, text, CleaningMode::kMissingOnly, config_),
            "name[X], eatType[coffee shop]");
  EXPECT_EQ(Corrected(mr, text, CleaningMode::kAddedOnly, config_),
            "name[X], eatType[coffee shop], food[Italian], area[riverside]");
}

TEST_F(MatcherTest, AddedOnlyNeverRemoves) {
  EXPECT_EQ(Corrected("name[X], area[riverside]", "X is great.",
                      CleaningMode::kAddedOnly, config_),
            "name[X], area[riverside]");
}

TEST_F(MatcherTest, EmptyDiffIsIdentityInEveryMode) {
  for (CleaningMode mode : {CleaningMode::kFull, CleaningMode::kMissingOnly,
                            CleaningMode::kAddedOnly}) {
    EXPECT_EQ(Corrected(kFig1Mr, kFig1Texts[0], mode, config_), kFig1Mr);
  }
}

TEST_F(MatcherTest, CorrectionToNothingIsDegenerate) {
  const auto mr = Mr("name[X], area[riverside]");
  auto corrected = CorrectMr(mr, MatchSlots("Nothing here.", mr, config_),
                             CleaningMode::kFull, config_);
  ASSERT_FALSE(corrected.ok());
  EXPECT_EQ(GetErrorKind(corrected.status()), ErrorKind::kDegenerateOutput);
}

TEST_F(MatcherTest, ModeNames) {
  for (CleaningMode mode : {CleaningMode::kFull, CleaningMode::kMissingOnly,
                            CleaningMode::kAddedOnly}) {
    EXPECT_EQ(ParseCleaningMode(CleaningModeName(mode)), mode);
  }
  EXPECT_EQ(ParseCleaningMode("missing"), CleaningMode::kMissingOnly);
  EXPECT_EQ(ParseCleaningMode("added"), CleaningMode::kAddedOnly);
  EXPECT_FALSE(ParseCleaningMode("partial").has_value());
}

// Slot counts move in one direction under the partial modes.
TEST_F(MatcherTest, PartialModesAreMonotone) {
  testing::SyntheticGenerator gen(11);
  for (int i = 0; i < 400; ++i) {
    const MeaningRepresentation mr = gen.RandomMr();
    const std::string text = gen.RealizeNoisy(mr);
    const DetectedSlots detected = MatchSlots(text, mr, config_);
    auto missing =
        CorrectMr(mr, detected, CleaningMode::kMissingOnly, config_);
    if (missing.ok()) {
      EXPECT_LE(missing->size(), mr.size()) << text;
    }
    auto added = CorrectMr(mr, detected, CleaningMode::kAddedOnly, config_);
    ASSERT_TRUE(added.ok());
    EXPECT_GE(added->size(), mr.size()) << text;
  }
}

TEST(MatcherConfigTest, DefaultYamlRoundTrips) {
  auto config = MatcherConfig::FromYaml(MatcherConfig::DefaultYaml());
  ASSERT_TRUE(config.ok()) << config.status();
  EXPECT_EQ(config->rules().size(), MatcherConfig::Default().rules().size());
}

TEST(MatcherConfigTest, MissingValueClassIsRejected) {
  const std::string yaml = absl::StrReplaceAll(
      std::string(MatcherConfig::DefaultYaml()),
      {{"      - {id: moderate, members: [moderate, £20-25]}\n", ""}});
  ASSERT_NE(yaml, MatcherConfig::DefaultYaml());
  auto config = MatcherConfig::FromYaml(yaml);
  ASSERT_FALSE(config.ok());
  EXPECT_EQ(GetErrorKind(config.status()), ErrorKind::kConfig);
  EXPECT_NE(config.status().message().find("moderate"), std::string::npos)
      << config.status();
}

TEST(MatcherConfigTest, BadPatternNamesRule) {
  const std::string yaml = absl::StrReplaceAll(
      std::string(MatcherConfig::DefaultYaml()),
      {{"          - 'pubs?'\n", "          - 'pubs?('\n"}});
  ASSERT_NE(yaml, MatcherConfig::DefaultYaml());
  auto config = MatcherConfig::FromYaml(yaml);
  ASSERT_FALSE(config.ok());
  EXPECT_EQ(GetErrorKind(config.status()), ErrorKind::kConfig);
  EXPECT_NE(config.status().message().find("eattype.pub"), std::string::npos)
      << config.status();
}

TEST(MatcherConfigTest, StructuralErrors) {
  for (const char* yaml :
       {"", "[1, 2]", "version: 9\n", "version: 1\nattributes: [a]\n",
        "version: 1\nattributes:\n  cuisine: {classes: []}\n",
        "version: 1\nlexicon_attributes: [name, near]\n: bad: yaml: ["}) {
    auto config = MatcherConfig::FromYaml(yaml);
    ASSERT_FALSE(config.ok()) << yaml;
    EXPECT_EQ(GetErrorKind(config.status()), ErrorKind::kConfig) << yaml;
  }
}

TEST(MatcherConfigTest, MissingFileIsIoError) {
  auto config = MatcherConfig::Load("/nonexistent/mrcheck.yaml");
  ASSERT_FALSE(config.ok());
  EXPECT_EQ(GetErrorKind(config.status()), ErrorKind::kIo);
}

}  // namespace
}  // namespace mrcheck
