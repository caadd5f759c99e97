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

#ifndef TAALWATCH_LEXICON_H_
#define TAALWATCH_LEXICON_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace taalwatch {

enum class Language : std::uint8_t { kEnglish, kFilipino };

// "en" / "fil". Throws DataError for anything else.
Language parse_language(std::string_view tag);
std::string_view language_tag(Language lang);

struct LexiconEntry {
  std::string term;  // normalized token, or tokens joined by single spaces
  Language lang = Language::kEnglish;
  int polarity = 0;  // -1, 0 or +1

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

namespace internal {
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};
}  // namespace internal

enum class LoadMode {
  kStrict,   // first malformed line throws DataError naming the line
  kLenient,  // malformed lines are skipped and reported
};

struct LexiconLoadResult;

// Ternary sentiment dictionary. Immutable once loaded; concurrent lookups
// are safe.
class Lexicon {
 public:
  Lexicon() = default;

  // The English + Filipino stand-in lexicon compiled into the library.
  static const Lexicon& bundled();

  std::optional<int> lookup(std::string_view term) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Token count of the longest entry; 0 for an empty lexicon.
  std::size_t max_phrase_len() const { return max_phrase_len_; }

  // All entries sorted by term.
  std::vector<LexiconEntry> entries() const;

  // Writes entries in the TSV load format, sorted by term.
  void write_tsv(std::ostream& out) const;

 private:
  friend LexiconLoadResult load_lexicon(std::istream& in, LoadMode mode);

  struct Value {
    Language lang;
    std::int8_t polarity;
  };
  std::unordered_map<std::string, Value, internal::StringHash, std::equal_to<>> entries_;
  std::size_t max_phrase_len_ = 0;
};

struct LexiconLoadResult {
  Lexicon lexicon;
  std::vector<std::size_t> rejected_lines;  // 1-based
};

// Parses "term<TAB>lang<TAB>polarity" lines. Blank lines and lines starting
// with '#' are ignored. Terms are normalized with the tokenizer; a term that
// tokenizes to nothing is malformed. Duplicate terms with equal polarity are
// merged; conflicting polarities always throw, naming both lines.
LexiconLoadResult load_lexicon(std::istream& in, LoadMode mode = LoadMode::kStrict);

// Compiled observable symptom phrases: multiword expressions residents use
// for the early signs of a fish kill.
class CosPhraseList {
 public:
  CosPhraseList() = default;
  explicit CosPhraseList(std::span<const std::string> phrases);

  // "amoy asupre", "berdeng tubig", "maitim na tubig", "nahibay na isda".
  static const CosPhraseList& bundled();

  bool contains(std::string_view phrase) const;
  std::size_t size() const { return phrases_.size(); }
  std::size_t max_phrase_len() const { return max_phrase_len_; }
  std::vector<std::string> phrases() const;  // sorted

 private:
  std::unordered_set<std::string, internal::StringHash, std::equal_to<>> phrases_;
  std::size_t max_phrase_len_ = 0;
};

// One phrase per line; blank and '#' lines ignored. Phrases are normalized
// with the tokenizer.
CosPhraseList load_cos_phrases(std::istream& in);

struct PhraseMatch {
  std::string phrase;
  std::size_t offset;  // index of the first token
  std::size_t length;  // token count

  friend bool operator==(const PhraseMatch&, const PhraseMatch&) = default;
};

// Greedy longest match, left to right, non-overlapping.
std::vector<PhraseMatch> match_phrases(std::span<const std::string> tokens,
                                       const CosPhraseList& phrases);

}  // namespace taalwatch

#endif  // TAALWATCH_LEXICON_H_
