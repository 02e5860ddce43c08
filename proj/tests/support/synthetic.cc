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

#include "synthetic.h"

#include <algorithm>
#include <map>

namespace mrcheck::testing {
namespace {

const std::vector<std::string> kNames = {
    "Cotto",       "The Wrestlers", "Zizzi",      "The Phoenix",
    "Aromi",       "Blue Spice",    "The Mill",   "Fitzbillies",
    "Loch Fyne",   "The Punter",    "Green Man",  "The Golden Curry",
    "Browns Cambridge", "Strada",   "The Eagle",  "Clowns",
    "The Olive Grove", "Midsummer House", "The Twenty Two", "Alimentum"};
const std::vector<std::string> kNear = {
    "The Portland Arms", "Café Sicilia", "Burger King", "The Bakers",
    "Raja Indian Cuisine", "All Bar One", "The Sorrento", "Avalon",
    "Yippee Noodle Bar", "Crowne Plaza Hotel", "Express by Holiday Inn",
    "Rainbow Vegetarian Café"};

// Attribute values and phrases realizing each one. Phrases contain the
// connecting words so they can be chained after the name.
const std::map<std::string, std::map<std::string, std::vector<std::string>>>&
Phrases() {
  static const auto* phrases = new std::map<
      std::string, std::map<std::string, std::vector<std::string>>>{
      {"eatType",
       {{"coffee shop", {"is a coffee shop", "is a little café"}},
        {"pub", {"is a pub", "is a friendly local pub"}},
        {"restaurant", {"is a restaurant", "is a nice eatery"}}}},
      {"food",
       {{"Chinese", {"serves Chinese food", "offers Chinese dishes"}},
        {"English", {"serves English food", "has British cuisine"}},
        {"Fast food", {"serves fast food", "sells burgers"}},
        {"French", {"serves French food", "offers French cuisine"}},
        {"Indian", {"serves Indian food", "has Indian dishes"}},
        {"Italian", {"serves Italian food", "offers pasta"}},
        {"Japanese", {"serves Japanese food", "has sushi"}}}},
      {"priceRange",
       {{"cheap", {"is cheap", "has low prices"}},
        {"less than £20", {"costs less than £20", "charges under £20"}},
        {"moderate", {"is moderately priced", "has reasonable prices"}},
        {"£20-25", {"costs £20-25", "charges between £20 and £25"}},
        {"high", {"is expensive", "has high prices"}},
        {"more than £30", {"costs more than £30", "charges over £30"}}}},
      {"customerRating",
       {{"low", {"has a low customer rating", "is poorly rated"}},
        {"1 out of 5", {"is rated 1 out of 5", "has a one-star rating"}},
        {"average", {"has an average customer rating", "is rated average"}},
        {"3 out of 5", {"is rated 3 out of 5", "has three stars"}},
        {"high", {"has a high customer rating", "is highly rated"}},
        {"5 out of 5", {"is rated 5 out of 5", "has a five-star rating"}}}},
      {"area",
       {{"city centre", {"is in the city centre", "is located downtown"}},
        {"riverside", {"is by the riverside", "sits on the river bank"}}}},
      {"familyFriendly",
       {{"yes", {"is family friendly", "welcomes children"}},
        {"no", {"is not family friendly", "is adults only"}}}},
  };
  return *phrases;
}

const std::vector<std::string> kOptional = {
    "eatType", "food", "priceRange", "customerRating",
    "area",    "familyFriendly", "near"};

std::vector<std::string> Keys(
    const std::map<std::string, std::vector<std::string>>& m) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : m) keys.push_back(k);
  return keys;
}

}  // namespace

bool SyntheticGenerator::Coin(double p) {
  return std::uniform_real_distribution<double>(0, 1)(rng_) < p;
}

template <typename T>
const T& SyntheticGenerator::Pick(const std::vector<T>& v) {
  return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng_)];
}

MeaningRepresentation SyntheticGenerator::RandomMr() {
  std::vector<SlotValue> slots = {{"name", Pick(kNames)}};
  for (const std::string& attr : kOptional) {
    if (!Coin(0.65)) continue;
    if (attr == "near") {
      slots.push_back({attr, Pick(kNear)});
    } else {
      slots.push_back({attr, Pick(Keys(Phrases().at(attr)))});
    }
  }
  std::shuffle(slots.begin(), slots.end(), rng_);
  return *MeaningRepresentation::Create(std::move(slots));
}

std::string SyntheticGenerator::Phrase(const SlotValue& slot) {
  if (slot.attribute == "near") return "near " + slot.value;
  return Pick(Phrases().at(slot.attribute).at(slot.value));
}

std::string SyntheticGenerator::Realize(const MeaningRepresentation& mr) {
  std::string name;
  std::vector<std::string> parts;
  for (const SlotValue& slot : mr.slots()) {
    if (slot.attribute == "name") {
      name = slot.value;
    } else {
      parts.push_back(Phrase(slot));
    }
  }
  std::shuffle(parts.begin(), parts.end(), rng_);
  std::string text = name.empty() ? "This place" : name;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i == 0) {
      text += " ";
    } else if (i + 1 == parts.size()) {
      text += " and ";
    } else {
      text += ", ";
    }
    text += parts[i];
  }
  if (parts.empty()) text += " is a place to eat";
  return text + ".";
}

std::string SyntheticGenerator::RealizeNoisy(const MeaningRepresentation& mr) {
  std::vector<SlotValue> slots = mr.slots();
  const int edits = std::uniform_int_distribution<int>(1, 3)(rng_);
  for (int e = 0; e < edits; ++e) {
    const int kind = std::uniform_int_distribution<int>(0, 2)(rng_);
    if (kind == 0 && slots.size() > 1) {
      slots.erase(slots.begin() +
                  std::uniform_int_distribution<size_t>(0, slots.size() - 1)(
                      rng_));
    } else if (kind == 1) {
      const std::string& attr = Pick(kOptional);
      const bool present =
          std::any_of(slots.begin(), slots.end(),
                      [&](const SlotValue& s) { return s.attribute == attr; });
      if (present) continue;
      slots.push_back({attr, attr == "near"
                                 ? Pick(kNear)
                                 : Pick(Keys(Phrases().at(attr)))});
    } else {
      SlotValue& s = slots[std::uniform_int_distribution<size_t>(
          0, slots.size() - 1)(rng_)];
      if (s.attribute == "name") {
        s.value = Pick(kNames);
      } else if (s.attribute == "near") {
        s.value = Pick(kNear);
      } else {
        s.value = Pick(Keys(Phrases().at(s.attribute)));
      }
    }
  }
  return Realize(*MeaningRepresentation::Create(std::move(slots)));
}

std::string SyntheticGenerator::RandomText() {
  std::vector<SlotValue> slots;
  for (const std::string& attr : kOptional) {
    if (!Coin(0.5)) continue;
    slots.push_back({attr, attr == "near" ? Pick(kNear)
                                          : Pick(Keys(Phrases().at(attr)))});
  }
  if (slots.empty()) return "A nice place to eat.";
  return Realize(*MeaningRepresentation::Create(std::move(slots)));
}

Corpus SyntheticCorpus(const SyntheticOptions& options,
                       const std::string& label) {
  SyntheticGenerator gen(options.seed);
  std::vector<MeaningRepresentation> pool;
  for (size_t i = 0; i < options.distinct_mrs; ++i) {
    pool.push_back(gen.RandomMr());
  }
  Corpus corpus;
  corpus.label = label;
  corpus.instances.reserve(options.instances);
  for (size_t i = 0; i < options.instances; ++i) {
    MeaningRepresentation mr =
        pool.empty()
            ? gen.RandomMr()
            : pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(
                  gen.rng())];
    const bool noisy =
        std::uniform_real_distribution<double>(0, 1)(gen.rng()) <
        options.noise;
    std::string text = noisy ? gen.RealizeNoisy(mr) : gen.Realize(mr);
    corpus.instances.push_back({std::move(mr), std::move(text),
                                Origin{label, i + 1}});
  }
  return corpus;
}

}  // namespace mrcheck::testing
