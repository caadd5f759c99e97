// Copyright 2026 The Taalwatch Authors.
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

#ifndef TAALWATCH_SRC_UNICODE_H_
#define TAALWATCH_SRC_UNICODE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace taalwatch::unicode {

// Decodes one code point at `pos`, advancing it. Returns nullopt (and
// advances by one byte) on an invalid or overlong sequence.
std::optional<char32_t> decode(std::string_view s, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);

bool is_valid_utf8(std::string_view s);
// Code point count; invalid bytes count as one each.
std::size_t codepoint_count(std::string_view s);

bool is_space(char32_t cp);
// Letters, digits and combining marks.
bool is_word_char(char32_t cp);
// Simple case mapping for ASCII, Latin-1, Latin Extended-A, Greek and
// Cyrillic; other code points map to themselves.
char32_t to_lower(char32_t cp);

}  // namespace taalwatch::unicode

#endif  // TAALWATCH_SRC_UNICODE_H_
