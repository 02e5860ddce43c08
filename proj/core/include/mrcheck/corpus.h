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

#ifndef MRCHECK_CORPUS_H_
#define MRCHECK_CORPUS_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "mrcheck/mr.h"
#include "mrcheck/schema.h"

namespace mrcheck {

struct Origin {
  std::string split;
  size_t row = 0;  // 1-based data row (header excluded)

  friend bool operator==(const Origin&, const Origin&) = default;
};

// One MR paired with one textual reference.
struct Instance {
  MeaningRepresentation mr;
  std::string reference;
  Origin origin;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct Corpus {
  std::string label;  // "train", "dev", "test", ...
  std::vector<Instance> instances;

  size_t size() const { return instances.size(); }
  bool empty() const { return instances.empty(); }

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Reads CSV content with header `mr,ref` (or `mr,output` for system
// outputs keyed by MR; the text then lands in Instance::reference). Errors are kIngestion with the
// 1-based record number (header = record 1) available via GetRow; a
// non-UTF-8 byte, a missing or wrong header, a wrong column count, an
// unparseable MR or an empty reference all fail.
absl::StatusOr<Corpus> ParseCorpus(std::string_view content,
                                   std::string label,
                                   const Schema& schema = Schema::E2E());
absl::StatusOr<Corpus> LoadCorpus(const std::string& path, std::string label,
                                  const Schema& schema = Schema::E2E());

// Header plus one row per instance; MRs are written in canonical form.
std::string FormatCorpus(const Corpus& corpus,
                         const Schema& schema = Schema::E2E());
absl::Status WriteCorpus(const Corpus& corpus, const std::string& path,
                         const Schema& schema = Schema::E2E());

// Instances sharing a canonical MR.
struct MrGroup {
  std::string key;  // FormatMr of the MR
  MeaningRepresentation mr;
  std::vector<std::string> references;
  std::vector<size_t> instance_indices;
};

// Groups in order of first occurrence, references in corpus order.
std::vector<MrGroup> GroupByMr(const Corpus& corpus,
                               const Schema& schema = Schema::E2E());

}  // namespace mrcheck

#endif  // MRCHECK_CORPUS_H_
