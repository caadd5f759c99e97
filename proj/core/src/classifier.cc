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

#include "taalwatch/classifier.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include "phrase_match.h"
#include "taalwatch/errors.h"
#include "unicode.h"

namespace taalwatch {

namespace {

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    char c = s[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != prefix[i]) return false;
  }
  return true;
}

bool is_url(std::string_view chunk) {
  return starts_with_ci(chunk, "http://") || starts_with_ci(chunk, "https://") ||
         starts_with_ci(chunk, "www.");
}

// Splits one whitespace-free chunk into tokens.
void tokenize_chunk(std::string_view chunk, std::vector<std::string>& out) {
  std::string current;
  bool prev_word = false;
  bool in_mention = false;
  std::size_t pos = 0;
  while (pos < chunk.size()) {
    const auto cp = unicode::decode(chunk, pos);
    const bool word = cp && unicode::is_word_char(*cp);
    if (in_mention) {
      if (word || cp == U'_') continue;
      in_mention = false;
    }
    if (word) {
      unicode::append_utf8(current, unicode::to_lower(*cp));
      prev_word = true;
      continue;
    }
    if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
    // '@' opening a word starts a mention, which is dropped with its name.
    if (cp == U'@' && !prev_word && pos < chunk.size()) {
      std::size_t peek = pos;
      const auto next = unicode::decode(chunk, peek);
      if (next && unicode::is_word_char(*next)) in_mention = true;
    }
    prev_word = false;
  }
  if (!current.empty()) out.push_back(std::move(current));
}

}  // namespace

std::string_view polarity_name(Polarity p) {
  switch (p) {
    case Polarity::kNegative: return "NEG";
    case Polarity::kNeutral: return "NEU";
    case Polarity::kPositive: return "POS";
  }
  return "NEU";
}

Polarity parse_polarity(std::string_view name) {
  if (name == "NEG") return Polarity::kNegative;
  if (name == "NEU") return Polarity::kNeutral;
  if (name == "POS") return Polarity::kPositive;
  throw DataError("unknown polarity '" + std::string(name) + "'");
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    // Find the next whitespace-delimited chunk.
    std::size_t start = pos;
    while (pos < text.size()) {
      std::size_t next = pos;
      const auto cp = unicode::decode(text, next);
      if (!(cp && unicode::is_space(*cp))) break;
      pos = next;
      start = pos;
    }
    std::size_t end = pos;
    while (end < text.size()) {
      std::size_t next = end;
      const auto cp = unicode::decode(text, next);
      if (cp && unicode::is_space(*cp)) break;
      end = next;
    }
    const std::string_view chunk = text.substr(start, end - start);
    if (!chunk.empty() && !is_url(chunk)) tokenize_chunk(chunk, tokens);
    pos = end;
  }
  return tokens;
}

Polarity classify_mean(std::int64_t polarity_sum, std::int64_t n_tokens, double neutral_band) {
  if (n_tokens == 0 || polarity_sum == 0) return Polarity::kNeutral;
  if (neutral_band > 0.0) {
    const double mean = static_cast<double>(polarity_sum) / static_cast<double>(n_tokens);
    if (std::fabs(mean) <= neutral_band) return Polarity::kNeutral;
  }
  return polarity_sum > 0 ? Polarity::kPositive : Polarity::kNegative;
}

SentimentScore score(const Lexicon& lexicon, const CosPhraseList& cos, std::string_view text,
                     const ScoringOptions& options) {
  const std::vector<std::string> tokens = tokenize(text);
  SentimentScore s;
  s.n_tokens = static_cast<std::int64_t>(tokens.size());

  if (lexicon.max_phrase_len() <= 1) {
    for (const auto& tok : tokens) {
      if (const auto p = lexicon.lookup(tok)) {
        s.polarity_sum += *p;
        ++s.n_matched;
      }
    }
  } else {
    internal::for_each_longest_match(
        tokens, lexicon.max_phrase_len(),
        [&](std::string_view candidate) { return lexicon.lookup(candidate).has_value(); },
        [&](std::string_view phrase, std::size_t, std::size_t length) {
          const auto n = static_cast<std::int64_t>(length);
          s.polarity_sum += *lexicon.lookup(phrase) * n;
          s.n_matched += n;
        });
  }

  if (cos.size() > 0) {
    for (auto& m : match_phrases(tokens, cos)) s.cos_hits.push_back(std::move(m.phrase));
  }
  s.polarity = classify_mean(s.polarity_sum, s.n_tokens, options.neutral_band);
  return s;
}

std::vector<std::pair<std::string, SentimentScore>> classify_batch(
    std::span<const Micropost> posts, const Lexicon& lexicon, const CosPhraseList& cos,
    const ScoringOptions& options, unsigned threads) {
  std::vector<std::pair<std::string, SentimentScore>> out(posts.size());
  const auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = {posts[i].id, score(lexicon, cos, posts[i].text, options)};
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(posts.size(), 1)));
  if (threads <= 1) {
    run(0, posts.size());
    return out;
  }
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (posts.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(posts.size(), begin + chunk);
      if (begin >= end) break;
      workers.emplace_back(run, begin, end);
    }
  }
  return out;
}

}  // namespace taalwatch
