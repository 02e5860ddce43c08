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

#include "sampling.h"

#include <numeric>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "mrcheck/csv.h"
#include "mrcheck/errors.h"

namespace mrcheck {

SampleRng::SampleRng(uint64_t seed) : engine_(seed) {}

uint64_t SampleRng::Below(uint64_t bound) {
  // Draws below 2^64 mod bound are rejected so every residue is equally
  // likely.
  const uint64_t threshold = (0 - bound) % bound;
  uint64_t x;
  do {
    x = engine_();
  } while (x < threshold);
  return x % bound;
}

absl::StatusOr<std::vector<size_t>> SampleIndices(size_t population, size_t n,
                                                  uint64_t seed) {
  if (n > population) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     ErrorKind::kEmptyInput,
                     absl::StrCat("sample size ", n, " exceeds the ",
                                  population, " available instances"));
  }
  std::vector<size_t> pool(population);
  std::iota(pool.begin(), pool.end(), 0);
  SampleRng rng(seed);
  for (size_t i = 0; i < n; ++i) {
    const size_t j = i + rng.Below(population - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  return pool;
}

std::string AnnotationSheet(const Corpus& corpus,
                            const std::vector<size_t>& indices,
                            const MatcherConfig& config) {
  const Schema& schema = config.schema();
  std::string out = CsvLine(CsvRow(std::begin(kSheetColumns),
                                   std::end(kSheetColumns)));
  for (size_t k = 0; k < indices.size(); ++k) {
    const Instance& instance = corpus.instances[indices[k]];
    const DetectedSlots detected =
        MatchSlots(instance.reference, instance.mr, config);
    std::vector<std::string> found;
    for (const Detection& d : detected.detections) {
      const AttributeSpec* spec = schema.Find(d.attribute);
      found.push_back(absl::StrCat(spec ? spec->written_form : d.attribute,
                                   "[", d.surface, "]"));
    }
    absl::StatusOr<MeaningRepresentation> script =
        CorrectMr(instance.mr, detected, CleaningMode::kFull, config);
    out += CsvLine({absl::StrCat(k + 1), instance.origin.split,
                    absl::StrCat(instance.origin.row),
                    FormatMr(instance.mr, schema), instance.reference,
                    script.ok() ? FormatMr(*script, schema) : "",
                    absl::StrJoin(found, ", "), "", ""});
  }
  return out;
}

SerCounts CompareMrs(const MeaningRepresentation& script,
                     const MeaningRepresentation& gold,
                     const MatcherConfig& config) {
  SerCounts counts;
  counts.slots = gold.size();
  for (const SlotValue& g : gold.slots()) {
    const SlotValue* s = script.Find(g.attribute);
    if (!s) {
      ++counts.missing;
    } else if (config.ClassOf(g.attribute, g.value) !=
               config.ClassOf(s->attribute, s->value)) {
      ++counts.wrong;
    }
  }
  for (const SlotValue& s : script.slots()) {
    if (!gold.Has(s.attribute)) ++counts.added;
  }
  return counts;
}

absl::StatusOr<SheetEvaluation> EvaluateSheet(std::string_view content,
                                              const MatcherConfig& config) {
  absl::StatusOr<std::vector<CsvRow>> rows = ParseCsv(content);
  if (!rows.ok()) return rows.status();
  auto error = [](size_t record, std::string_view what) {
    return MakeError(absl::StatusCode::kInvalidArgument, ErrorKind::kIngestion,
                     absl::StrCat("sheet row ", record, ": ",
                                  std::string(what)),
                     std::nullopt, record);
  };
  if (rows->empty()) return error(1, "missing header");
  const CsvRow& header = rows->front();
  auto column = [&](std::string_view name) -> std::optional<size_t> {
    for (size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    return std::nullopt;
  };
  const std::optional<size_t> script_col = column("script_mr");
  const std::optional<size_t> gold_col = column("gold_mr");
  if (!script_col || !gold_col) {
    return error(1, "sheet needs 'script_mr' and 'gold_mr' columns");
  }
  SheetEvaluation eval;
  std::vector<SerCounts> counts;
  for (size_t i = 1; i < rows->size(); ++i) {
    const CsvRow& row = (*rows)[i];
    const size_t record = i + 1;
    if (row.size() != header.size()) {
      return error(record, absl::StrCat("expected ", header.size(),
                                        " columns, found ", row.size()));
    }
    if (row[*gold_col].find_first_not_of(" \t") == std::string::npos) {
      ++eval.unannotated;
      continue;
    }
    absl::StatusOr<MeaningRepresentation> gold =
        ParseMr(row[*gold_col], config.schema());
    if (!gold.ok()) {
      return error(record, absl::StrCat("gold_mr: ", gold.status().message()));
    }
    // An empty script MR means the script found nothing: every gold slot
    // is missing.
    SerCounts c;
    if (row[*script_col].empty()) {
      c.slots = gold->size();
      c.missing = gold->size();
    } else {
      absl::StatusOr<MeaningRepresentation> script =
          ParseMr(row[*script_col], config.schema());
      if (!script.ok()) {
        return error(record,
                     absl::StrCat("script_mr: ", script.status().message()));
      }
      c = CompareMrs(*script, *gold, config);
    }
    ++eval.annotated;
    if (c.errors() > 0) ++eval.incorrect;
    counts.push_back(c);
  }
  if (counts.empty()) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     ErrorKind::kEmptyInput, "sheet has no annotated rows");
  }
  absl::StatusOr<SerReport> report =
      SerCorpus(std::span<const SerCounts>(counts));
  if (!report.ok()) return report.status();
  eval.ser = *std::move(report);
  return eval;
}

}  // namespace mrcheck
