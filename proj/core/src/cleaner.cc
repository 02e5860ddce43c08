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

#include "mrcheck/cleaner.h"

#include <unordered_set>

#include "absl/strings/str_cat.h"
#include "mrcheck/errors.h"
#include "mrcheck/parallel.h"
#include "string_view_util.h"

namespace mrcheck {
namespace {

absl::Status EmptyCorpusError(std::string_view label) {
  return MakeError(absl::StatusCode::kInvalidArgument, ErrorKind::kEmptyInput,
                   absl::StrCat("corpus '", ToAbsl(label), "' is empty"));
}

// Micro SER, or 0 for a corpus emptied by dedup.
absl::StatusOr<double> MicroSer(const Corpus& corpus,
                                const MatcherConfig& config, int jobs) {
  if (corpus.empty()) return 0.0;
  absl::StatusOr<CorpusAudit> audit = AuditCorpus(corpus, config, jobs);
  if (!audit.ok()) return audit.status();
  return audit->report.micro_ser;
}

}  // namespace

absl::StatusOr<CorpusAudit> AuditCorpus(const Corpus& corpus,
                                        const MatcherConfig& config,
                                        int jobs) {
  if (corpus.empty()) return EmptyCorpusError(corpus.label);
  CorpusAudit audit;
  audit.instances = ParallelMap(corpus.size(), jobs, [&](size_t i) {
    const Instance& instance = corpus.instances[i];
    InstanceAudit out;
    out.detected = MatchSlots(instance.reference, instance.mr, config);
    out.diff = DiffSlots(instance.mr, out.detected, config);
    out.counts = {out.diff.added.size(), out.diff.missing.size(),
                  out.diff.wrong.size(), instance.mr.size()};
    absl::StatusOr<MeaningRepresentation> corrected =
        CorrectMr(instance.mr, out.detected, CleaningMode::kFull, config);
    if (corrected.ok()) out.corrected = *std::move(corrected);
    return out;
  });
  std::vector<SerCounts> counts;
  counts.reserve(audit.instances.size());
  for (const InstanceAudit& a : audit.instances) counts.push_back(a.counts);
  absl::StatusOr<SerReport> report =
      SerCorpus(std::span<const SerCounts>(counts));
  if (!report.ok()) return report.status();
  audit.report = *std::move(report);
  return audit;
}

absl::StatusOr<CleanResult> CleanCorpus(const Corpus& corpus,
                                        const MatcherConfig& config,
                                        CleaningMode mode, int jobs) {
  auto corrected = ParallelMap(corpus.size(), jobs, [&](size_t i) {
    const Instance& instance = corpus.instances[i];
    DetectedSlots detected =
        MatchSlots(instance.reference, instance.mr, config);
    return CorrectMr(instance.mr, detected, mode, config);
  });
  CleanResult result;
  result.corpus.label = corpus.label;
  for (size_t i = 0; i < corpus.size(); ++i) {
    const Instance& instance = corpus.instances[i];
    if (corrected[i].ok()) {
      result.corpus.instances.push_back(
          {*std::move(corrected[i]), instance.reference, instance.origin});
      continue;
    }
    if (GetErrorKind(corrected[i].status()) != ErrorKind::kDegenerateOutput) {
      return corrected[i].status();
    }
    result.rejects.push_back({corpus.label, instance.origin.row,
                              FormatMr(instance.mr, config.schema()),
                              instance.reference,
                              std::string(corrected[i].status().message())});
  }
  return result;
}

absl::StatusOr<CorpusStats> ComputeCorpusStats(const Corpus& corpus,
                                               const Schema& schema) {
  if (corpus.empty()) return EmptyCorpusError(corpus.label);
  CorpusStats stats;
  std::vector<MrGroup> groups = GroupByMr(corpus, schema);
  stats.distinct_mrs = groups.size();
  stats.references = corpus.size();
  size_t slot_sum = 0;
  size_t saturated = 0;
  for (const MrGroup& group : groups) {
    slot_sum += group.mr.size();
    bool all = true;
    for (size_t a = 0; a < schema.builtin_count(); ++a) {
      all = all && group.mr.Has(schema.attributes()[a].name);
    }
    saturated += all;
  }
  const auto distinct = static_cast<double>(stats.distinct_mrs);
  stats.refs_per_mr_mean = static_cast<double>(stats.references) / distinct;
  stats.slots_per_mr_mean = static_cast<double>(slot_sum) / distinct;
  stats.saturated_mr_fraction = static_cast<double>(saturated) / distinct;
  return stats;
}

CleanedSplits DedupSplits(Corpus train, Corpus dev, Corpus test,
                          const Schema& schema) {
  std::unordered_set<std::string> test_keys;
  for (const Instance& instance : test.instances) {
    test_keys.insert(FormatMr(instance.mr, schema));
  }
  CleanedSplits out;
  auto filter = [&](Corpus& corpus) {
    const size_t before = corpus.size();
    std::erase_if(corpus.instances, [&](const Instance& instance) {
      return test_keys.contains(FormatMr(instance.mr, schema));
    });
    return before - corpus.size();
  };
  const size_t removed_train = filter(train);
  const size_t removed_dev = filter(dev);
  auto entry = [&](const Corpus& corpus, size_t removed) {
    SplitManifest m;
    m.split = corpus.label;
    m.distinct_mrs = GroupByMr(corpus, schema).size();
    m.references = corpus.size();
    m.removed_by_dedup = removed;
    return m;
  };
  out.manifest = {entry(train, removed_train), entry(dev, removed_dev),
                  entry(test, 0)};
  out.train = std::move(train);
  out.dev = std::move(dev);
  out.test = std::move(test);
  return out;
}

absl::StatusOr<CleanedSplits> CleanSplits(const Corpus& train,
                                          const Corpus& dev,
                                          const Corpus& test,
                                          const MatcherConfig& config,
                                          CleaningMode mode, int jobs) {
  const Corpus* inputs[] = {&train, &dev, &test};
  std::vector<CleanResult> cleaned;
  std::vector<double> before;
  for (const Corpus* corpus : inputs) {
    if (corpus->empty()) return EmptyCorpusError(corpus->label);
    absl::StatusOr<double> ser = MicroSer(*corpus, config, jobs);
    if (!ser.ok()) return ser.status();
    before.push_back(*ser);
    absl::StatusOr<CleanResult> result =
        CleanCorpus(*corpus, config, mode, jobs);
    if (!result.ok()) return result.status();
    cleaned.push_back(*std::move(result));
  }
  CleanedSplits out =
      DedupSplits(std::move(cleaned[0].corpus), std::move(cleaned[1].corpus),
                  std::move(cleaned[2].corpus), config.schema());
  const Corpus* outputs[] = {&out.train, &out.dev, &out.test};
  for (size_t i = 0; i < 3; ++i) {
    absl::StatusOr<double> ser = MicroSer(*outputs[i], config, jobs);
    if (!ser.ok()) return ser.status();
    out.manifest[i].ser_before = before[i];
    out.manifest[i].ser_after = *ser;
    out.manifest[i].rejected = cleaned[i].rejects.size();
    for (Reject& r : cleaned[i].rejects) out.rejects.push_back(std::move(r));
  }
  return out;
}

std::string VariantLabel(CleaningMode mode) {
  switch (mode) {
    case CleaningMode::kFull: return "cleaned";
    case CleaningMode::kMissingOnly: return "cleaned missing";
    case CleaningMode::kAddedOnly: return "cleaned added";
  }
  return "cleaned";
}

}  // namespace mrcheck
