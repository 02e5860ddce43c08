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

#include "mrcheck/csv.h"

#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "mrcheck/errors.h"

namespace mrcheck {

absl::StatusOr<std::vector<CsvRow>> ParseCsv(std::string_view content) {
  if (content.substr(0, 3) == "\xEF\xBB\xBF") content.remove_prefix(3);
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;  // anything seen for the current record
  bool quoted_field = false;
  size_t record = 1;
  const size_t n = content.size();

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    quoted_field = false;
  };
  auto end_record = [&] {
    if (!field_started && row.empty() && field.empty()) {  // blank line
      ++record;
      return;
    }
    end_field();
    rows.push_back(std::move(row));
    row.clear();
    field_started = false;
    ++record;
  };

  for (size_t i = 0; i < n; ++i) {
    const char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < n && content[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || quoted_field) {
          return MakeError(absl::StatusCode::kInvalidArgument,
                           ErrorKind::kIngestion,
                           absl::StrCat("stray quote in row ", record),
                           std::nullopt, record);
        }
        in_quotes = true;
        quoted_field = true;
        field_started = true;
        break;
      case ',':
        end_field();
        field_started = true;
        break;
      case '\r':
        if (i + 1 < n && content[i + 1] == '\n') break;
        end_record();
        break;
      case '\n':
        end_record();
        break;
      default:
        if (quoted_field) {
          return MakeError(absl::StatusCode::kInvalidArgument,
                           ErrorKind::kIngestion,
                           absl::StrCat("text after closing quote in row ",
                                        record),
                           std::nullopt, record);
        }
        field.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) {
    return MakeError(absl::StatusCode::kInvalidArgument, ErrorKind::kIngestion,
                     absl::StrCat("unterminated quote in row ", record),
                     std::nullopt, record);
  }
  if (field_started || !field.empty()) end_record();
  return rows;
}

std::string CsvField(std::string_view field) {
  bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string_view::npos ||
      (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string CsvLine(const CsvRow& row) {
  std::string out;
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) out.push_back(',');
    out += CsvField(row[i]);
  }
  out.push_back('\n');
  return out;
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(absl::StatusCode::kNotFound, ErrorKind::kIo,
                     absl::StrCat("cannot open '", path, "' for reading"));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    return MakeError(absl::StatusCode::kUnavailable, ErrorKind::kIo,
                     absl::StrCat("read failed for '", path, "'"));
  }
  return std::move(buffer).str();
}

absl::Status WriteFile(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return MakeError(absl::StatusCode::kUnavailable, ErrorKind::kIo,
                     absl::StrCat("cannot open '", path, "' for writing"));
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) {
    return MakeError(absl::StatusCode::kUnavailable, ErrorKind::kIo,
                     absl::StrCat("write failed for '", path, "'"));
  }
  return absl::OkStatus();
}

bool IsValidUtf8(std::string_view text, size_t* bad_offset) {
  const size_t n = text.size();
  size_t i = 0;
  while (i < n) {
    const auto c = static_cast<unsigned char>(text[i]);
    size_t len = 0;
    uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      if (bad_offset) *bad_offset = i;
      return false;
    }
    if (i + len > n) {
      if (bad_offset) *bad_offset = i;
      return false;
    }
    for (size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) {
        if (bad_offset) *bad_offset = i;
        return false;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    const bool overlong = (len == 2 && cp < 0x80) ||
                          (len == 3 && cp < 0x800) ||
                          (len == 4 && cp < 0x10000);
    if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      if (bad_offset) *bad_offset = i;
      return false;
    }
    i += len;
  }
  return true;
}

}  // namespace mrcheck
