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

#ifndef TAALWATCH_SRC_PHRASE_MATCH_H_
#define TAALWATCH_SRC_PHRASE_MATCH_H_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace taalwatch::internal {

// Scans left to right; at each position tries the longest candidate first
// (up to max_len tokens, joined with single spaces). On a hit, reports it
// and resumes after it; otherwise advances one token.
template <typename Contains, typename OnMatch>
void for_each_longest_match(std::span<const std::string> tokens, std::size_t max_len,
                            Contains&& contains, OnMatch&& on_match) {
  std::string buf;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::size_t longest = std::min(max_len, tokens.size() - i);
    std::size_t hit = 0;
    for (std::size_t len = longest; len >= 1; --len) {
      buf.clear();
      for (std::size_t k = 0; k < len; ++k) {
        if (k) buf.push_back(' ');
        buf += tokens[i + k];
      }
      if (contains(std::string_view(buf))) {
        hit = len;
        break;
      }
    }
    if (hit) {
      on_match(std::string_view(buf), i, hit);
      i += hit;
    } else {
      ++i;
    }
  }
}

}  // namespace taalwatch::internal

#endif  // TAALWATCH_SRC_PHRASE_MATCH_H_
