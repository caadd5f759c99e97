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

#ifndef TAALWATCH_CLASSIFIER_H_
#define TAALWATCH_CLASSIFIER_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taalwatch/lexicon.h"
#include "taalwatch/micropost.h"

namespace taalwatch {

enum class Polarity : std::int8_t { kNegative = -1, kNeutral = 0, kPositive = 1 };

// "NEG" / "NEU" / "POS".
std::string_view polarity_name(Polarity p);
Polarity parse_polarity(std::string_view name);

// Contextual sentiment polarity of one post. The mean is kept as the exact
// fraction polarity_sum / n_tokens.
struct SentimentScore {
  std::int64_t polarity_sum = 0;
  std::int64_t n_tokens = 0;
  std::int64_t n_matched = 0;
  Polarity polarity = Polarity::kNeutral;
  std::vector<std::string> cos_hits;

  double s_mean() const {
    return n_tokens == 0 ? 0.0 : static_cast<double>(polarity_sum) / static_cast<double>(n_tokens);
  }

  friend bool operator==(const SentimentScore&, const SentimentScore&) = default;
};

struct ScoringOptions {
  // Posts with |s_mean| <= neutral_band are NEU. The default of 0 makes the
  // class exactly the sign of s_mean.
  double neutral_band = 0.0;
};

// Lowercased word tokens. Whitespace-delimited chunks starting with
// "http://", "https://" or "www." are dropped, "@name" mentions are dropped,
// '#' is stripped from hashtags, and any character that is not a letter,
// digit or combining mark separates tokens.
std::vector<std::string> tokenize(std::string_view text);

// Averages the per-token polarity over every token; tokens missing from the
// lexicon contribute 0. Multiword lexicon entries are matched greedily
// (longest first) and assign their polarity to each covered token. COS
// phrases are reported in cos_hits and do not affect the mean.
SentimentScore score(const Lexicon& lexicon, const CosPhraseList& cos, std::string_view text,
                     const ScoringOptions& options = {});

// Polarity class for a given fraction, honouring the neutral band.
Polarity classify_mean(std::int64_t polarity_sum, std::int64_t n_tokens, double neutral_band = 0.0);

// Scores each post independently. Output order matches input order for any
// thread count (0 picks the hardware concurrency).
std::vector<std::pair<std::string, SentimentScore>> classify_batch(
    std::span<const Micropost> posts, const Lexicon& lexicon, const CosPhraseList& cos,
    const ScoringOptions& options = {}, unsigned threads = 1);

}  // namespace taalwatch

#endif  // TAALWATCH_CLASSIFIER_H_
