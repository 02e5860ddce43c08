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

#include <algorithm>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "mrcheck/errors.h"
#include "mrcheck/matcher.h"
#include "mrcheck/mr.h"
#include "mrcheck/parallel.h"
#include "mrcheck/ser.h"
#include "synthetic.h"

namespace mrcheck {
namespace {

const MeaningRepresentation& Fig1Mr() {
  static const auto* mr = new MeaningRepresentation(*ParseMr(
      "name[Cotto], eatType[coffee shop], food[English], "
      "priceRange[less than £20], customer_rating[low], area[riverside], "
      "near[The Portland Arms]"));
  return *mr;
}

Detection Det(const std::string& attribute, const std::string& surface) {
  return Detection{attribute, "", surface, {}, "test"};
}

TEST(SerInstanceTest, Hr4) {
  SlotDiff diff;
  diff.missing = {{"food", "English"}, {"area", "riverside"}};
  auto counts = SerInstance(diff, Fig1Mr());
  ASSERT_TRUE(counts.ok());
  EXPECT_EQ(*counts, (SerCounts{0, 2, 0, 7}));
  EXPECT_NEAR(counts->ser(), 2.0 / 7, 1e-12);
}

TEST(SerInstanceTest, Hr3) {
  SlotDiff diff;
  diff.missing = {{"priceRange", "less than £20"}};
  diff.wrong = {{{"area", "riverside"}, Det("area", "city centre")}};
  auto counts = SerInstance(diff, Fig1Mr());
  ASSERT_TRUE(counts.ok());
  EXPECT_EQ(*counts, (SerCounts{0, 1, 1, 7}));
  EXPECT_NEAR(counts->ser(), 2.0 / 7, 1e-12);
}

TEST(SerInstanceTest, EmptyDiff) {
  auto counts = SerInstance(SlotDiff{}, Fig1Mr());
  ASSERT_TRUE(counts.ok());
  EXPECT_EQ(*counts, (SerCounts{0, 0, 0, 7}));
  EXPECT_EQ(counts->ser(), 0.0);
}

TEST(SerInstanceTest, AdditionsCanExceedOne) {
  SlotDiff diff;
  diff.added = {Det("area", "riverside"), Det("food", "Indian")};
  auto counts = SerInstance(diff, *ParseMr("name[X]"));
  ASSERT_TRUE(counts.ok());
  EXPECT_EQ(counts->ser(), 2.0);
}

TEST(SerInstanceTest, EmptyMrIsError) {
  auto counts = SerInstance(SlotDiff{}, MeaningRepresentation());
  ASSERT_FALSE(counts.ok());
  EXPECT_EQ(GetErrorKind(counts.status()), ErrorKind::kEmptyInput);
}

TEST(SerCorpusTest, MicroAndMacro) {
  const std::vector<SerCounts> counts = {{0, 0, 0, 7}, {0, 1, 1, 7}};
  auto report = SerCorpus(counts);
  ASSERT_TRUE(report.ok());
  EXPECT_NEAR(report->micro_ser, 2.0 / 14, 1e-12);
  EXPECT_NEAR(report->macro_ser, 1.0 / 7, 1e-12);
  EXPECT_EQ(report->inst_ok, 1u);
  EXPECT_EQ(report->total_slots, 14u);
  EXPECT_NEAR(report->miss_rate, 1.0 / 14, 1e-12);
  EXPECT_NEAR(report->wrong_rate, 1.0 / 14, 1e-12);
  EXPECT_EQ(report->add_rate, 0.0);
}

TEST(SerCorpusTest, AllPerfect) {
  const std::vector<SerCounts> counts(5, SerCounts{0, 0, 0, 4});
  auto report = SerCorpus(counts);
  ASSERT_TRUE(report.ok());
  EXPECT_EQ(report->micro_ser, 0.0);
  EXPECT_EQ(report->macro_ser, 0.0);
  EXPECT_EQ(report->inst_ok, 5u);
}

TEST(SerCorpusTest, EmptyIsError) {
  auto report = SerCorpus(std::vector<SerCounts>{});
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(GetErrorKind(report.status()), ErrorKind::kEmptyInput);
  EXPECT_FALSE(SerCorpus(std::vector<SerInput>{}).ok());
}

std::vector<SerCounts> RandomCounts(std::mt19937_64& rng, size_t n) {
  std::vector<SerCounts> out;
  for (size_t i = 0; i < n; ++i) {
    SerCounts c;
    c.slots = 1 + rng() % 8;
    c.missing = rng() % (c.slots + 1);
    c.wrong = rng() % (c.slots - c.missing + 1);
    c.added = rng() % 3;
    out.push_back(c);
  }
  return out;
}

TEST(SerCorpusTest, Invariants) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto counts = RandomCounts(rng, 1 + rng() % 60);
    auto report = SerCorpus(counts);
    ASSERT_TRUE(report.ok());
    EXPECT_NEAR(report->micro_ser,
                report->add_rate + report->miss_rate + report->wrong_rate,
                1e-12);
    EXPECT_LE(report->inst_ok, counts.size());
    size_t ok = 0;
    for (const SerCounts& c : counts) ok += c.errors() == 0;
    EXPECT_EQ(report->inst_ok, ok);
  }
}

// Shuffling the instances leaves both aggregates bit-identical.
TEST(SerCorpusTest, OrderIndependent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto counts = RandomCounts(rng, 2 + rng() % 500);
    auto a = SerCorpus(counts);
    std::shuffle(counts.begin(), counts.end(), rng);
    auto b = SerCorpus(counts);
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_EQ(a->micro_ser, b->micro_ser);
    EXPECT_EQ(a->macro_ser, b->macro_ser);
    EXPECT_EQ(a->inst_ok, b->inst_ok);
  }
}

// For MRs of at most three slots, recount errors from the raw diff lists
// and compare with the library aggregation.
TEST(SerCorpusTest, BruteForceRecountSmallMrs) {
  const MatcherConfig& config = MatcherConfig::Default();
  testing::SyntheticGenerator gen(21);
  std::vector<SerInput> inputs;
  while (inputs.size() < 500) {
    MeaningRepresentation mr = gen.RandomMr();
    if (mr.size() > 3) continue;
    const std::string text = gen.RealizeNoisy(mr);
    SlotDiff diff = DiffSlots(mr, MatchSlots(text, mr, config), config);
    inputs.push_back({std::move(mr), std::move(diff)});
  }
  size_t errors = 0, slots = 0, ok = 0;
  double macro = 0;
  for (const SerInput& in : inputs) {
    size_t e = 0;
    for (const auto& d : in.diff.added) e += !d.attribute.empty();
    for (const auto& m : in.diff.missing) e += !m.attribute.empty();
    for (const auto& w : in.diff.wrong) e += !w.expected.attribute.empty();
    errors += e;
    slots += in.mr.size();
    ok += e == 0;
    macro += static_cast<double>(e) / static_cast<double>(in.mr.size());
  }
  auto report = SerCorpus(inputs);
  ASSERT_TRUE(report.ok());
  EXPECT_EQ(report->total_added + report->total_missing + report->total_wrong,
            errors);
  EXPECT_EQ(report->total_slots, slots);
  EXPECT_EQ(report->inst_ok, ok);
  EXPECT_NEAR(report->micro_ser, static_cast<double>(errors) / slots, 1e-12);
  EXPECT_NEAR(report->macro_ser, macro / inputs.size(), 1e-12);
  EXPECT_GT(errors, 0u);
}

TEST(ParallelMapTest, MatchesSerialForAnyJobCount) {
  std::vector<size_t> serial(1000);
  for (size_t i = 0; i < serial.size(); ++i) serial[i] = i * i;
  for (int jobs : {0, 1, 2, 3, 8, 64}) {
    EXPECT_EQ(ParallelMap(serial.size(), jobs, [](size_t i) { return i * i; }),
              serial)
        << jobs;
  }
  EXPECT_TRUE(ParallelMap(0, 4, [](size_t i) { return i; }).empty());
}

}  // namespace
}  // namespace mrcheck
