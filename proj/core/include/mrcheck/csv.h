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

// RFC-4180 CSV reading and writing plus small file helpers.

#ifndef MRCHECK_CSV_H_
#define MRCHECK_CSV_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace mrcheck {

using CsvRow = std::vector<std::string>;

// Parses a whole document. Accepts LF or CRLF record separators, quoted
// fields with doubled quotes, embedded newlines, and an optional UTF-8 BOM.
// A trailing newline does not create an empty record. Errors (unterminated
// quote, stray quote) carry the 1-based record number via GetRow.
absl::StatusOr<std::vector<CsvRow>> ParseCsv(std::string_view content);

// Quotes the field when it contains a comma, quote, CR/LF or leading or
// trailing space.
std::string CsvField(std::string_view field);
std::string CsvLine(const CsvRow& row);  // includes the trailing '\n'

// Errors use NotFound / Unavailable codes and ErrorKind::kIo.
absl::StatusOr<std::string> ReadFile(const std::string& path);
absl::Status WriteFile(const std::string& path, std::string_view content);

// False at the first invalid UTF-8 sequence; *bad_offset receives its byte
// offset.
bool IsValidUtf8(std::string_view text, size_t* bad_offset = nullptr);

}  // namespace mrcheck

#endif  // MRCHECK_CSV_H_
