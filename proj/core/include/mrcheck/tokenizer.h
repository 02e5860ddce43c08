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

#ifndef MRCHECK_TOKENIZER_H_
#define MRCHECK_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace mrcheck {

// The one tokenizer shared by the slot matcher and every metric.
//
// Rules, applied to each whitespace-separated chunk after ASCII
// lowercasing:
//   - word characters are ASCII letters and digits plus every byte >= 0x80
//     (so "£", "é" and other UTF-8 sequences stay inside words);
//   - '-' and '\'' join two word characters ("one-star", "isn't",
//     "£20-25");
//   - '.' and ',' join two digits ("4.5", "1,000");
//   - every other character is a token of its own.
// Deterministic and idempotent on its own space-joined output.
std::vector<std::string> Tokenize(std::string_view text);

// Tokens joined by single spaces.
std::string JoinTokens(const std::vector<std::string>& tokens);

}  // namespace mrcheck

#endif  // MRCHECK_TOKENIZER_H_
