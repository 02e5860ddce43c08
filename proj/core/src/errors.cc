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

#include "mrcheck/errors.h"

#include <charconv>

#include "absl/strings/cord.h"
#include "absl/strings/str_cat.h"
#include "string_view_util.h"

namespace mrcheck {
namespace {

constexpr char kKindUrl[] = "type.mrcheck/kind";
constexpr char kOffsetUrl[] = "type.mrcheck/byte_offset";
constexpr char kRowUrl[] = "type.mrcheck/row";

constexpr ErrorKind kAllKinds[] = {
    ErrorKind::kMalformed,        ErrorKind::kDuplicateSlot,
    ErrorKind::kUnknownAttribute, ErrorKind::kEmptyInput,
    ErrorKind::kDegenerateOutput, ErrorKind::kIngestion,
    ErrorKind::kConfig,           ErrorKind::kIo,
};

std::optional<size_t> ReadNumber(const absl::Status& status,
                                 std::string_view url) {
  absl::optional<absl::Cord> payload = status.GetPayload(ToAbsl(url));
  if (!payload) return std::nullopt;
  std::string text(*payload);
  size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc()) return std::nullopt;
  return value;
}

}  // namespace

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNone: return "none";
    case ErrorKind::kMalformed: return "malformed";
    case ErrorKind::kDuplicateSlot: return "duplicate_slot";
    case ErrorKind::kUnknownAttribute: return "unknown_attribute";
    case ErrorKind::kEmptyInput: return "empty_input";
    case ErrorKind::kDegenerateOutput: return "degenerate_output";
    case ErrorKind::kIngestion: return "ingestion";
    case ErrorKind::kConfig: return "config";
    case ErrorKind::kIo: return "io";
  }
  return "none";
}

absl::Status MakeError(absl::StatusCode code, ErrorKind kind,
                       std::string_view message,
                       std::optional<size_t> byte_offset,
                       std::optional<size_t> row) {
  absl::Status status(code, ToAbsl(message));
  status.SetPayload(kKindUrl, absl::Cord(ToAbsl(ErrorKindName(kind))));
  if (byte_offset) {
    status.SetPayload(kOffsetUrl, absl::Cord(absl::StrCat(*byte_offset)));
  }
  if (row) status.SetPayload(kRowUrl, absl::Cord(absl::StrCat(*row)));
  return status;
}

ErrorKind GetErrorKind(const absl::Status& status) {
  absl::optional<absl::Cord> payload = status.GetPayload(kKindUrl);
  if (!payload) return ErrorKind::kNone;
  std::string name(*payload);
  for (ErrorKind kind : kAllKinds) {
    if (ErrorKindName(kind) == name) return kind;
  }
  return ErrorKind::kNone;
}

std::optional<size_t> GetByteOffset(const absl::Status& status) {
  return ReadNumber(status, kOffsetUrl);
}

std::optional<size_t> GetRow(const absl::Status& status) {
  return ReadNumber(status, kRowUrl);
}

absl::Status Annotate(const absl::Status& status, std::string_view prefix) {
  if (status.ok()) return status;
  absl::Status out(status.code(), absl::StrCat(ToAbsl(prefix), ": ", status.message()));
  status.ForEachPayload(
      [&out](absl::string_view url, const absl::Cord& payload) {
        out.SetPayload(url, payload);
      });
  return out;
}

}  // namespace mrcheck
