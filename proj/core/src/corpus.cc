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

#include "mrcheck/corpus.h"

#include <unordered_map>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "mrcheck/csv.h"
#include "mrcheck/errors.h"
#include "string_view_util.h"

namespace mrcheck {
namespace {

absl::Status IngestionError(size_t record, std::string_view what) {
  return MakeError(absl::StatusCode::kInvalidArgument, ErrorKind::kIngestion,
                   absl::StrCat("row ", record, ": ", ToAbsl(what)), std::nullopt,
                   record);
}

}  // namespace

absl::StatusOr<Corpus> ParseCorpus(std::string_view content,
                                   std::string label, const Schema& schema) {
  size_t bad = 0;
  if (!IsValidUtf8(content, &bad)) {
    size_t record = 1;
    for (size_t i = 0; i < bad; ++i) record += content[i] == '\n';
    return IngestionError(record,
                          absl::StrCat("invalid UTF-8 at byte ", bad));
  }
  absl::StatusOr<std::vector<CsvRow>> rows = ParseCsv(content);
  if (!rows.ok()) return rows.status();
  if (rows->empty()) return IngestionError(1, "missing header 'mr,ref'");

  const CsvRow& header = rows->front();
  if (header.size() != 2) {
    return IngestionError(
        1, absl::StrCat("expected 2 columns 'mr,ref', found ", header.size()));
  }
  const std::string text_column =
      absl::AsciiStrToLower(absl::StripAsciiWhitespace(header[1]));
  if (absl::AsciiStrToLower(absl::StripAsciiWhitespace(header[0])) != "mr" ||
      (text_column != "ref" && text_column != "output")) {
    return IngestionError(1, "missing header 'mr,ref'");
  }

  Corpus corpus;
  corpus.label = std::move(label);
  corpus.instances.reserve(rows->size() - 1);
  for (size_t i = 1; i < rows->size(); ++i) {
    const CsvRow& row = (*rows)[i];
    const size_t record = i + 1;
    if (row.size() != 2) {
      return IngestionError(record, absl::StrCat("expected 2 columns, found ",
                                                 row.size()));
    }
    absl::StatusOr<MeaningRepresentation> mr = ParseMr(row[0], schema);
    if (!mr.ok()) {
      absl::Status status = mr.status();
      return MakeError(status.code(), ErrorKind::kIngestion,
                       absl::StrCat("row ", record, ": ", status.message()),
                       GetByteOffset(status), record);
    }
    if (absl::StripAsciiWhitespace(row[1]).empty()) {
      return IngestionError(record, "empty reference");
    }
    corpus.instances.push_back(
        {*std::move(mr), row[1], Origin{corpus.label, i}});
  }
  return corpus;
}

absl::StatusOr<Corpus> LoadCorpus(const std::string& path, std::string label,
                                  const Schema& schema) {
  absl::StatusOr<std::string> content = ReadFile(path);
  if (!content.ok()) return content.status();
  absl::StatusOr<Corpus> corpus =
      ParseCorpus(*content, std::move(label), schema);
  if (!corpus.ok()) return Annotate(corpus.status(), path);
  return corpus;
}

std::string FormatCorpus(const Corpus& corpus, const Schema& schema) {
  std::string out = "mr,ref\n";
  for (const Instance& instance : corpus.instances) {
    out += CsvLine({FormatMr(instance.mr, schema), instance.reference});
  }
  return out;
}

absl::Status WriteCorpus(const Corpus& corpus, const std::string& path,
                         const Schema& schema) {
  return WriteFile(path, FormatCorpus(corpus, schema));
}

std::vector<MrGroup> GroupByMr(const Corpus& corpus, const Schema& schema) {
  std::vector<MrGroup> groups;
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < corpus.instances.size(); ++i) {
    const Instance& instance = corpus.instances[i];
    std::string key = FormatMr(instance.mr, schema);
    auto [it, inserted] = index.try_emplace(key, groups.size());
    if (inserted) {
      groups.push_back({std::move(key), instance.mr, {}, {}});
    }
    MrGroup& group = groups[it->second];
    group.references.push_back(instance.reference);
    group.instance_indices.push_back(i);
  }
  return groups;
}

}  // namespace mrcheck
