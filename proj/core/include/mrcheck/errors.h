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

#ifndef MRCHECK_ERRORS_H_
#define MRCHECK_ERRORS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "absl/status/status.h"

namespace mrcheck {

// Fine-grained failure categories carried as a status payload. The status
// code stays the coarse signal (InvalidArgument, NotFound, ...); the kind
// lets callers and tests tell e.g. a duplicate slot from a malformed pair.
enum class ErrorKind {
  kNone,
  kMalformed,
  kDuplicateSlot,
  kUnknownAttribute,
  kEmptyInput,
  kDegenerateOutput,
  kIngestion,
  kConfig,
  kIo,
};

std::string_view ErrorKindName(ErrorKind kind);

// Builds a status with the kind payload and, when given, the byte offset
// (MR parsing) or row number (CSV ingestion) of the failure.
absl::Status MakeError(absl::StatusCode code, ErrorKind kind,
                       std::string_view message,
                       std::optional<size_t> byte_offset = std::nullopt,
                       std::optional<size_t> row = std::nullopt);

ErrorKind GetErrorKind(const absl::Status& status);
std::optional<size_t> GetByteOffset(const absl::Status& status);
std::optional<size_t> GetRow(const absl::Status& status);

// Prefixes the message, keeping code and payloads.
absl::Status Annotate(const absl::Status& status, std::string_view prefix);

}  // namespace mrcheck

#endif  // MRCHECK_ERRORS_H_
