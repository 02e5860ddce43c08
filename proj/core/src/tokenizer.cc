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

#include "mrcheck/tokenizer.h"

#include "absl/strings/ascii.h"
#include "absl/strings/str_join.h"

namespace mrcheck {
namespace {

bool IsWordByte(unsigned char c) {
  return absl::ascii_isalnum(c) || c >= 0x80;
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  const size_t n = text.size();
  for (size_t i = 0; i < n; ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (IsSpace(c)) {
      flush();
      continue;
    }
    if (IsWordByte(c)) {
      current.push_back(absl::ascii_tolower(c));
      continue;
    }
    const bool has_prev = !current.empty() && i > 0;
    const auto prev = has_prev ? static_cast<unsigned char>(text[i - 1]) : 0;
    const auto next =
        i + 1 < n ? static_cast<unsigned char>(text[i + 1]) : 0;
    bool joins = false;
    if (has_prev && (c == '-' || c == '\'')) {
      joins = IsWordByte(prev) && IsWordByte(next);
    } else if (has_prev && (c == '.' || c == ',')) {
      joins = IsDigit(prev) && IsDigit(next);
    }
    if (joins) {
      current.push_back(static_cast<char>(c));
    } else {
      flush();
      tokens.emplace_back(1, static_cast<char>(c));
    }
  }
  flush();
  return tokens;
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  return absl::StrJoin(tokens, " ");
}

}  // namespace mrcheck
