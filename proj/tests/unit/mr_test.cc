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

#include "gtest/gtest.h"
#include "mrcheck/errors.h"
#include "mrcheck/mr.h"
#include "mrcheck/schema.h"
#include "mrcheck/tokenizer.h"

namespace mrcheck {
namespace {

constexpr char kFig1Mr[] =
    "name[Cotto], eatType[coffee shop], food[English], "
    "priceRange[less than £20], customer_rating[low], area[riverside], "
    "near[The Portland Arms]";

TEST(SchemaTest, E2EHasEightAttributes) {
  const Schema& schema = Schema::E2E();
  EXPECT_EQ(schema.builtin_count(), 8u);
  EXPECT_EQ(schema.attributes().size(), 8u);
  EXPECT_EQ(schema.attributes().front().name, "name");
  EXPECT_EQ(schema.attributes().back().name, "near");
}

TEST(SchemaTest, CanonicalizesSpellings) {
  const Schema& schema = Schema::E2E();
  for (const char* raw : {"customer_rating", "customer rating",
                          "CustomerRating", "customerRating"}) {
    ASSERT_TRUE(schema.Canonicalize(raw).has_value()) << raw;
    EXPECT_EQ(*schema.Canonicalize(raw), "customerRating") << raw;
  }
  EXPECT_FALSE(schema.Canonicalize("cuisine").has_value());
  EXPECT_EQ(schema.Find("customerRating")->written_form, "customer_rating");
}

TEST(SchemaTest, ExtensionAttributes) {
  Schema schema = Schema::E2E();
  ASSERT_TRUE(schema.AddAttribute({"parking", "parking", {"yes", "no"}}).ok());
  EXPECT_EQ(schema.Rank("parking"), 8u);
  EXPECT_FALSE(schema.AddAttribute({"Area", "area", {}}).ok());
  EXPECT_EQ(schema.builtin_count(), 8u);
}

TEST(MrTest, ParsesFig1Mr) {
  auto mr = ParseMr(kFig1Mr);
  ASSERT_TRUE(mr.ok()) << mr.status();
  EXPECT_EQ(mr->size(), 7u);
  ASSERT_NE(mr->Find("customerRating"), nullptr);
  EXPECT_EQ(mr->Find("customerRating")->value, "low");
  EXPECT_EQ(mr->Find("priceRange")->value, "less than £20");
}

TEST(MrTest, MinimalMr) {
  auto mr = ParseMr("name[X]");
  ASSERT_TRUE(mr.ok());
  ASSERT_EQ(mr->size(), 1u);
  EXPECT_EQ(mr->slots()[0], (SlotValue{"name", "X"}));
}

TEST(MrTest, RejectsDuplicateSlot) {
  auto mr = ParseMr("name[Cotto], name[Alto]");
  ASSERT_FALSE(mr.ok());
  EXPECT_EQ(GetErrorKind(mr.status()), ErrorKind::kDuplicateSlot);
}

TEST(MrTest, RejectsMalformedInput) {
  struct Case {
    const char* text;
    ErrorKind kind;
  };
  const Case cases[] = {
      {"", ErrorKind::kEmptyInput},
      {"   ", ErrorKind::kEmptyInput},
      {"name[Cotto", ErrorKind::kMalformed},
      {"name Cotto", ErrorKind::kMalformed},
      {"[Cotto]", ErrorKind::kMalformed},
      {"name[]", ErrorKind::kMalformed},
      {"name[a[b]]", ErrorKind::kMalformed},
      {"name[A] area[riverside]", ErrorKind::kMalformed},
      {"cuisine[Thai]", ErrorKind::kUnknownAttribute},
  };
  for (const Case& c : cases) {
    auto mr = ParseMr(c.text);
    ASSERT_FALSE(mr.ok()) << c.text;
    EXPECT_EQ(GetErrorKind(mr.status()), c.kind) << c.text << ": "
                                                 << mr.status();
  }
}

TEST(MrTest, ErrorsCarryByteOffsets) {
  auto mr = ParseMr("name[A], area(riverside)");
  ASSERT_FALSE(mr.ok());
  ASSERT_TRUE(GetByteOffset(mr.status()).has_value());
  EXPECT_EQ(*GetByteOffset(mr.status()), 9u);
}

TEST(MrTest, FormatIsCanonical) {
  auto mr = ParseMr("area[riverside], name[Cotto]");
  ASSERT_TRUE(mr.ok());
  EXPECT_EQ(FormatMr(*mr), "name[Cotto], area[riverside]");
  EXPECT_EQ(FormatMr(*ParseMr(kFig1Mr)), kFig1Mr);
}

TEST(MrTest, FormatHr4Correction) {
  auto mr = ParseMr(
      "near[The Portland Arms], customer rating[low], name[Cotto], "
      "food[English], eatType[coffee shop], priceRange[less than £20]");
  ASSERT_TRUE(mr.ok());
  EXPECT_EQ(FormatMr(*mr),
            "name[Cotto], eatType[coffee shop], food[English], "
            "priceRange[less than £20], customer_rating[low], "
            "near[The Portland Arms]");
}

TEST(MrTest, EqualityIgnoresOrder) {
  EXPECT_EQ(*ParseMr("name[A], area[riverside]"),
            *ParseMr("area[riverside], name[A]"));
  EXPECT_FALSE(*ParseMr("name[A]") == *ParseMr("name[B]"));
}

TEST(MrTest, FormatParseRoundTrip) {
  for (const char* text :
       {kFig1Mr, "name[A, B], near[C]", "familyFriendly[no], name[Z]"}) {
    auto mr = ParseMr(text);
    ASSERT_TRUE(mr.ok()) << text;
    auto again = ParseMr(FormatMr(*mr));
    ASSERT_TRUE(again.ok());
    EXPECT_EQ(*again, *mr);
    EXPECT_EQ(FormatMr(*again), FormatMr(*mr));
  }
}

TEST(MrTest, CreateValidates) {
  EXPECT_FALSE(MeaningRepresentation::Create({}).ok());
  EXPECT_FALSE(MeaningRepresentation::Create({{"name", "  "}}).ok());
  auto mr = MeaningRepresentation::Create({{"Customer Rating", " high "}});
  ASSERT_TRUE(mr.ok());
  EXPECT_EQ(mr->slots()[0], (SlotValue{"customerRating", "high"}));
}

TEST(TokenizerTest, SplitsPunctuation) {
  EXPECT_EQ(Tokenize("Cotto is a coffee shop."),
            (std::vector<std::string>{"cotto", "is", "a", "coffee", "shop",
                                      "."}));
}

TEST(TokenizerTest, KeepsCurrencyAmounts) {
  EXPECT_EQ(Tokenize("less than £20"),
            (std::vector<std::string>{"less", "than", "£20"}));
  EXPECT_EQ(Tokenize("£20-25"), (std::vector<std::string>{"£20-25"}));
  EXPECT_EQ(Tokenize("1,000.50 pounds"),
            (std::vector<std::string>{"1,000.50", "pounds"}));
}

TEST(TokenizerTest, EdgeCases) {
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize(" \t\n").empty());
  EXPECT_EQ(Tokenize("family-friendly, kid's"),
            (std::vector<std::string>{"family-friendly", ",", "kid's"}));
  EXPECT_EQ(Tokenize("end -"), (std::vector<std::string>{"end", "-"}));
}

TEST(TokenizerTest, IdempotentOnJoinedOutput) {
  for (const char* text :
       {"At the riverside near The Portland Arms, Cotto is a coffee shop.",
        "It costs £20-25, and is rated 5 out of 5!"}) {
    const auto tokens = Tokenize(text);
    EXPECT_EQ(Tokenize(JoinTokens(tokens)), tokens) << text;
  }
}

}  // namespace
}  // namespace mrcheck
