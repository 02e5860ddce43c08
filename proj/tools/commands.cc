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

#include "commands.h"

#include <filesystem>
#include <map>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "json.hpp"
#include "mrcheck/cleaner.h"
#include "mrcheck/corpus.h"
#include "mrcheck/csv.h"
#include "mrcheck/errors.h"
#include "mrcheck/metrics.h"
#include "mrcheck/report.h"
#include "mrcheck/reranker.h"
#include "sampling.h"

namespace mrcheck {
namespace {

namespace fs = std::filesystem;

absl::Status ValidationError(ErrorKind kind, const std::string& message) {
  return MakeError(absl::StatusCode::kInvalidArgument, kind, message);
}

// Output paths are checked before any work starts.
absl::Status CheckOutputPath(const std::string& path) {
  if (path.empty()) return absl::OkStatus();
  const fs::path parent = fs::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty() && !fs::is_directory(parent, ec)) {
    return MakeError(absl::StatusCode::kNotFound, ErrorKind::kIo,
                     absl::StrCat("output directory does not exist: ",
                                  parent.string()));
  }
  return absl::OkStatus();
}

absl::Status WriteOrPrint(const std::string& path, const std::string& content,
                          std::ostream& out) {
  if (path.empty()) {
    out << content;
    return absl::OkStatus();
  }
  return WriteFile(path, content);
}

absl::StatusOr<Corpus> LoadLabeled(const std::string& path,
                                   const std::string& label,
                                   const Schema& schema) {
  absl::StatusOr<Corpus> corpus = LoadCorpus(path, label, schema);
  if (!corpus.ok()) return Annotate(corpus.status(), path);
  return corpus;
}

std::string Stem(const std::string& path) {
  return fs::path(path).stem().string();
}

// System outputs aligned with the distinct MRs of the test corpus.
absl::StatusOr<std::vector<std::string>> AlignOutputs(
    const std::string& path, const std::vector<MrGroup>& groups,
    const Schema& schema) {
  absl::StatusOr<std::string> content = ReadFile(path);
  if (!content.ok()) return content.status();
  std::string_view text = *content;
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  const std::string head = absl::AsciiStrToLower(
      std::string(text.substr(0, text.find('\n'))));
  std::vector<std::string> aligned(groups.size());
  if (absl::StartsWith(head, "mr,output")) {
    absl::StatusOr<Corpus> keyed = ParseCorpus(*content, "outputs", schema);
    if (!keyed.ok()) return Annotate(keyed.status(), path);
    std::map<std::string, size_t> index;
    for (size_t g = 0; g < groups.size(); ++g) index[groups[g].key] = g;
    std::vector<bool> filled(groups.size(), false);
    std::vector<std::string> unmatched;
    for (const Instance& instance : keyed->instances) {
      const std::string key = FormatMr(instance.mr, schema);
      auto it = index.find(key);
      if (it == index.end() || filled[it->second]) {
        unmatched.push_back(absl::StrCat("output row ", instance.origin.row,
                                         ": ", key));
        continue;
      }
      filled[it->second] = true;
      aligned[it->second] = instance.reference;
    }
    for (size_t g = 0; g < groups.size(); ++g) {
      if (!filled[g]) {
        unmatched.push_back(absl::StrCat("no output for test MR: ",
                                         groups[g].key));
      }
    }
    if (!unmatched.empty()) {
      return ValidationError(
          ErrorKind::kIngestion,
          absl::StrCat(unmatched.size(), " unmatched MRs: ",
                       absl::StrJoin(unmatched, "; ")));
    }
    return aligned;
  }
  std::vector<std::string> lines =
      absl::StrSplit(absl::string_view(text.data(), text.size()), '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (std::string& line : lines) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
  }
  if (lines.size() != groups.size()) {
    return ValidationError(
        ErrorKind::kIngestion,
        absl::StrCat(path, ": ", lines.size(), " output lines for ",
                     groups.size(), " distinct test MRs"));
  }
  return lines;
}

absl::StatusOr<std::vector<NBestList>> ParseNBest(std::string_view content,
                                                  const Schema& schema) {
  std::vector<NBestList> lists;
  size_t line_no = 0;
  for (absl::string_view line : absl::StrSplit(
           absl::string_view(content.data(), content.size()), '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    std::vector<std::string> fields = absl::StrSplit(line, '\t');
    absl::StatusOr<MeaningRepresentation> mr = ParseMr(fields[0], schema);
    if (!mr.ok()) {
      return MakeError(mr.status().code(), ErrorKind::kIngestion,
                       absl::StrCat("n-best line ", line_no, ": ",
                                    mr.status().message()),
                       GetByteOffset(mr.status()), line_no);
    }
    lists.push_back({*std::move(mr),
                     std::vector<std::string>(fields.begin() + 1,
                                              fields.end())});
  }
  if (lists.empty()) {
    return ValidationError(ErrorKind::kEmptyInput, "n-best file is empty");
  }
  return lists;
}

}  // namespace

absl::StatusOr<MatcherConfig> LoadMatcher(const CommonOptions& options) {
  MatcherConfig config = MatcherConfig::Default();
  if (!options.config_path.empty()) {
    absl::StatusOr<MatcherConfig> loaded =
        MatcherConfig::Load(options.config_path);
    if (!loaded.ok()) return loaded.status();
    config = *std::move(loaded);
  }
  if (options.ignore_eattype_restaurant) {
    MatcherOptions matcher_options = config.options();
    matcher_options.ignore_eattype_restaurant_omission = true;
    config = config.WithOptions(matcher_options);
  }
  return config;
}

absl::Status RunAudit(const AuditOptions& options, std::ostream& out) {
  if (absl::Status s = CheckOutputPath(options.report); !s.ok()) return s;
  absl::StatusOr<MatcherConfig> config = LoadMatcher(options.common);
  if (!config.ok()) return config.status();
  absl::StatusOr<Corpus> corpus =
      LoadLabeled(options.input, Stem(options.input), config->schema());
  if (!corpus.ok()) return corpus.status();
  absl::StatusOr<CorpusAudit> audit =
      AuditCorpus(*corpus, *config, options.common.jobs);
  if (!audit.ok()) return audit.status();
  const std::string json = AuditReportJson(*corpus, *audit, *config);
  if (!options.report.empty()) {
    if (absl::Status s = WriteFile(options.report, json); !s.ok()) return s;
  }
  out << (options.json ? json : AuditTable(corpus->label, audit->report));
  return absl::OkStatus();
}

absl::Status RunClean(const CleanOptions& options, std::ostream& out) {
  if (options.out_dir.empty()) {
    return ValidationError(ErrorKind::kConfig, "--out directory is required");
  }
  absl::StatusOr<MatcherConfig> config = LoadMatcher(options.common);
  if (!config.ok()) return config.status();
  const Schema& schema = config->schema();
  absl::StatusOr<Corpus> train = LoadLabeled(options.train, "train", schema);
  if (!train.ok()) return train.status();
  absl::StatusOr<Corpus> dev = LoadLabeled(options.dev, "dev", schema);
  if (!dev.ok()) return dev.status();
  absl::StatusOr<Corpus> test = LoadLabeled(options.test, "test", schema);
  if (!test.ok()) return test.status();
  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (ec) {
    return MakeError(absl::StatusCode::kUnavailable, ErrorKind::kIo,
                     absl::StrCat("cannot create ", options.out_dir, ": ",
                                  ec.message()));
  }
  absl::StatusOr<CleanedSplits> cleaned = CleanSplits(
      *train, *dev, *test, *config, options.mode, options.common.jobs);
  if (!cleaned.ok()) return cleaned.status();
  const fs::path dir(options.out_dir);
  for (const Corpus* split : {&cleaned->train, &cleaned->dev, &cleaned->test}) {
    const std::string path = (dir / (split->label + ".csv")).string();
    if (absl::Status s = WriteCorpus(*split, path, schema); !s.ok()) return s;
  }
  const std::string manifest = ManifestJson(*cleaned, options.mode, *config);
  if (absl::Status s = WriteFile((dir / "manifest.json").string(), manifest);
      !s.ok()) {
    return s;
  }
  out << ManifestTable(*cleaned, options.mode);
  return absl::OkStatus();
}

absl::Status RunScore(const ScoreOptions& options, std::ostream& out) {
  if (absl::Status s = CheckOutputPath(options.report); !s.ok()) return s;
  absl::StatusOr<MatcherConfig> config = LoadMatcher(options.common);
  if (!config.ok()) return config.status();
  const Schema& schema = config->schema();
  absl::StatusOr<Corpus> test = LoadLabeled(options.test, "test", schema);
  if (!test.ok()) return test.status();
  const std::vector<MrGroup> groups = GroupByMr(*test, schema);
  absl::StatusOr<std::vector<std::string>> outputs =
      AlignOutputs(options.outputs, groups, schema);
  if (!outputs.ok()) return outputs.status();

  ScoredSet set;
  set.items.resize(groups.size());
  std::vector<SerCounts> ser(groups.size());
  std::vector<ScoreItemInfo> info;
  for (size_t g = 0; g < groups.size(); ++g) {
    set.items[g] = MakeScoredItem((*outputs)[g], groups[g].references);
    const SlotDiff diff = DiffSlots(
        groups[g].mr, MatchSlots((*outputs)[g], groups[g].mr, *config),
        *config);
    absl::StatusOr<SerCounts> counts = SerInstance(diff, groups[g].mr);
    if (!counts.ok()) return counts.status();
    ser[g] = *counts;
    if (options.per_item) info.push_back({groups[g].key, (*outputs)[g], *counts});
  }
  absl::StatusOr<MetricsReport> report =
      ScoreAll(set, ser, options.common.jobs);
  if (!report.ok()) return report.status();
  const std::string label =
      options.label.empty() ? Stem(options.outputs) : options.label;
  if (!options.report.empty()) {
    if (absl::Status s = WriteFile(
            options.report, ScoreReportJson(label, *report, set, info));
        !s.ok()) {
      return s;
    }
  }
  out << ScoreTable(label, *report);
  return absl::OkStatus();
}

absl::Status RunRerank(const RerankOptions& options, std::ostream& out) {
  if (absl::Status s = CheckOutputPath(options.out); !s.ok()) return s;
  if (absl::Status s = CheckOutputPath(options.report); !s.ok()) return s;
  absl::StatusOr<MatcherConfig> config = LoadMatcher(options.common);
  if (!config.ok()) return config.status();
  absl::StatusOr<std::string> content = ReadFile(options.nbest);
  if (!content.ok()) return content.status();
  absl::StatusOr<std::vector<NBestList>> lists =
      ParseNBest(*content, config->schema());
  if (!lists.ok()) return Annotate(lists.status(), options.nbest);
  absl::StatusOr<std::vector<Selection>> selections =
      RerankBatch(*lists, *config, options.common.jobs);
  if (!selections.ok()) return selections.status();
  std::string text;
  for (const Selection& s : *selections) absl::StrAppend(&text, s.text, "\n");
  if (!options.report.empty()) {
    if (absl::Status s = WriteFile(
            options.report, RerankReportJson(*lists, *selections, *config));
        !s.ok()) {
      return s;
    }
  }
  return WriteOrPrint(options.out, text, out);
}

absl::Status RunSample(const SampleOptions& options, std::ostream& out) {
  if (absl::Status s = CheckOutputPath(options.out); !s.ok()) return s;
  if (absl::Status s = CheckOutputPath(options.report); !s.ok()) return s;
  absl::StatusOr<MatcherConfig> config = LoadMatcher(options.common);
  if (!config.ok()) return config.status();
  if (!options.evaluate.empty()) {
    absl::StatusOr<std::string> sheet = ReadFile(options.evaluate);
    if (!sheet.ok()) return sheet.status();
    absl::StatusOr<SheetEvaluation> eval = EvaluateSheet(*sheet, *config);
    if (!eval.ok()) return Annotate(eval.status(), options.evaluate);
    nlohmann::ordered_json j;
    j["schema"] = "mrcheck.sheet/1";
    j["annotated"] = eval->annotated;
    j["unannotated"] = eval->unannotated;
    j["incorrect_instances"] = eval->incorrect;
    j["gold_slots"] = eval->ser.total_slots;
    j["added"] = eval->ser.total_added;
    j["missing"] = eval->ser.total_missing;
    j["wrong"] = eval->ser.total_wrong;
    j["ser"] = eval->ser.micro_ser;
    if (!options.report.empty()) {
      if (absl::Status s = WriteFile(options.report, j.dump(2) + "\n");
          !s.ok()) {
        return s;
      }
    }
    out << absl::StrFormat(
        "annotated %d (unannotated %d), script SER %.2f%%, %d instances "
        "(%.1f%%) not fully correct\n",
        eval->annotated, eval->unannotated, 100 * eval->ser.micro_ser,
        eval->incorrect,
        100.0 * static_cast<double>(eval->incorrect) /
            static_cast<double>(eval->annotated));
    return absl::OkStatus();
  }
  if (!options.seed) {
    return ValidationError(ErrorKind::kConfig, "sample requires --seed");
  }
  if (options.n == 0) {
    return ValidationError(ErrorKind::kConfig, "sample requires --n > 0");
  }
  absl::StatusOr<Corpus> corpus =
      LoadLabeled(options.input, Stem(options.input), config->schema());
  if (!corpus.ok()) return corpus.status();
  absl::StatusOr<std::vector<size_t>> indices =
      SampleIndices(corpus->size(), options.n, *options.seed);
  if (!indices.ok()) return indices.status();
  return WriteOrPrint(options.out, AnnotationSheet(*corpus, *indices, *config),
                      out);
}

int ExitCode(const absl::Status& status) {
  if (status.ok()) return 0;
  if (GetErrorKind(status) == ErrorKind::kIo) return 2;
  switch (status.code()) {
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kPermissionDenied:
    case absl::StatusCode::kUnavailable:
      return 2;
    default:
      return 1;
  }
}

std::string ErrorLine(std::string_view command, const absl::Status& status) {
  nlohmann::ordered_json j;
  j["command"] = std::string(command);
  j["error"] = std::string(ErrorKindName(GetErrorKind(status)));
  j["code"] = absl::StatusCodeToString(status.code());
  j["message"] = std::string(status.message());
  if (std::optional<size_t> row = GetRow(status)) j["row"] = *row;
  if (std::optional<size_t> offset = GetByteOffset(status)) {
    j["byte_offset"] = *offset;
  }
  j["exit_code"] = ExitCode(status);
  return j.dump();
}

}  // namespace mrcheck
