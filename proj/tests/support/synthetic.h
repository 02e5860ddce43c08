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

// Random restaurant-domain corpora for property tests and benchmarks. Texts
// are assembled from per-slot phrases; a configurable share of instances
// drops, adds or changes slots so the MR and the text disagree.

#ifndef MRCHECK_TESTS_SUPPORT_SYNTHETIC_H_
#define MRCHECK_TESTS_SUPPORT_SYNTHETIC_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mrcheck/corpus.h"
#include "mrcheck/mr.h"

namespace mrcheck::testing {

struct SyntheticOptions {
  size_t instances = 1000;
  // Probability that an instance's text deviates from its MR.
  double noise = 0.3;
  // Number of distinct MRs to draw references for; 0 means one MR per
  // instance.
  size_t distinct_mrs = 0;
  uint64_t seed = 1;
};

class SyntheticGenerator {
 public:
  explicit SyntheticGenerator(uint64_t seed) : rng_(seed) {}

  MeaningRepresentation RandomMr();

  // A text realizing exactly the slots of `mr`.
  std::string Realize(const MeaningRepresentation& mr);

  // A text that drops, adds or changes one or more slots of `mr`.
  std::string RealizeNoisy(const MeaningRepresentation& mr);

  // A free-form text that may mention anything.
  std::string RandomText();

  std::mt19937_64& rng() { return rng_; }

 private:
  std::string Phrase(const SlotValue& slot);
  bool Coin(double p);
  template <typename T>
  const T& Pick(const std::vector<T>& v);

  std::mt19937_64 rng_;
};

Corpus SyntheticCorpus(const SyntheticOptions& options,
                       const std::string& label = "synthetic");

}  // namespace mrcheck::testing

#endif  // MRCHECK_TESTS_SUPPORT_SYNTHETIC_H_
