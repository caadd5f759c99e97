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

#include "taalwatch/lexicon.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>

#include "phrase_match.h"
#include "taalwatch/classifier.h"
#include "taalwatch/errors.h"

namespace taalwatch {

namespace bundled {
extern const std::string_view k_lexicon_en_fil_tsv;
extern const std::string_view k_cos_phrases_txt;
}  // namespace bundled

namespace {

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t");
  return first == std::string_view::npos || line[first] == '#';
}

std::string normalize_term(std::string_view raw) {
  std::string out;
  for (const auto& tok : tokenize(raw)) {
    if (!out.empty()) out.push_back(' ');
    out += tok;
  }
  return out;
}

std::size_t token_count(std::string_view normalized) {
  return static_cast<std::size_t>(std::count(normalized.begin(), normalized.end(), ' ')) + 1;
}

std::optional<int> parse_polarity_value(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Language parse_language(std::string_view tag) {
  if (tag == "en") return Language::kEnglish;
  if (tag == "fil") return Language::kFilipino;
  throw DataError("unknown language tag '" + std::string(tag) + "' (expected en or fil)");
}

std::string_view language_tag(Language lang) {
  return lang == Language::kEnglish ? "en" : "fil";
}

const Lexicon& Lexicon::bundled() {
  static const Lexicon lexicon = [] {
    std::istringstream in{std::string(bundled::k_lexicon_en_fil_tsv)};
    return load_lexicon(in).lexicon;
  }();
  return lexicon;
}

std::optional<int> Lexicon::lookup(std::string_view term) const {
  const auto it = entries_.find(term);
  if (it == entries_.end()) return std::nullopt;
  return it->second.polarity;
}

std::vector<LexiconEntry> Lexicon::entries() const {
  std::vector<LexiconEntry> out;
  out.reserve(entries_.size());
  for (const auto& [term, value] : entries_) {
    out.push_back({term, value.lang, value.polarity});
  }
  std::sort(out.begin(), out.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) { return a.term < b.term; });
  return out;
}

void Lexicon::write_tsv(std::ostream& out) const {
  for (const auto& e : entries()) {
    out << e.term << '\t' << language_tag(e.lang) << '\t' << e.polarity << '\n';
  }
}

LexiconLoadResult load_lexicon(std::istream& in, LoadMode mode) {
  LexiconLoadResult result;
  Lexicon& lex = result.lexicon;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string raw;
  std::size_t line_no = 0;

  const auto reject = [&](const std::string& why) {
    if (mode == LoadMode::kStrict) {
      throw DataError("lexicon line " + std::to_string(line_no) + ": " + why);
    }
    result.rejected_lines.push_back(line_no);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = strip_cr(raw);
    if (skippable(line)) continue;

    std::vector<std::string_view> cols;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (cols.size() != 3) {
      reject("expected 3 tab-separated columns, found " + std::to_string(cols.size()));
      continue;
    }
    const std::string term = normalize_term(cols[0]);
    if (term.empty()) {
      reject("term has no word characters");
      continue;
    }
    Language lang;
    try {
      lang = parse_language(cols[1]);
    } catch (const DataError& e) {
      reject(e.what());
      continue;
    }
    const auto polarity = parse_polarity_value(cols[2]);
    if (!polarity) {
      reject("polarity '" + std::string(cols[2]) + "' is not an integer");
      continue;
    }
    if (*polarity < -1 || *polarity > 1) {
      reject("polarity " + std::to_string(*polarity) + " outside {-1, 0, +1}");
      continue;
    }

    const auto [it, inserted] =
        lex.entries_.try_emplace(term, Lexicon::Value{lang, static_cast<std::int8_t>(*polarity)});
    if (!inserted) {
      if (it->second.polarity != *polarity) {
        throw DataError("lexicon term '" + term + "' has conflicting polarity on lines " +
                        std::to_string(first_line[term]) + " and " + std::to_string(line_no));
      }
      continue;
    }
    first_line.emplace(term, line_no);
    lex.max_phrase_len_ = std::max(lex.max_phrase_len_, token_count(term));
  }
  if (in.bad()) throw IoError("error reading lexicon stream");
  return result;
}

CosPhraseList::CosPhraseList(std::span<const std::string> phrases) {
  for (const auto& p : phrases) {
    std::string norm = normalize_term(p);
    if (norm.empty()) throw DataError("COS phrase '" + p + "' has no word characters");
    max_phrase_len_ = std::max(max_phrase_len_, token_count(norm));
    phrases_.insert(std::move(norm));
  }
}

const CosPhraseList& CosPhraseList::bundled() {
  static const CosPhraseList list = [] {
    std::istringstream in{std::string(bundled::k_cos_phrases_txt)};
    return load_cos_phrases(in);
  }();
  return list;
}

bool CosPhraseList::contains(std::string_view phrase) const {
  return phrases_.find(phrase) != phrases_.end();
}

std::vector<std::string> CosPhraseList::phrases() const {
  std::vector<std::string> out(phrases_.begin(), phrases_.end());
  std::sort(out.begin(), out.end());
  return out;
}

CosPhraseList load_cos_phrases(std::istream& in) {
  std::vector<std::string> phrases;
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string_view line = strip_cr(raw);
    if (skippable(line)) continue;
    phrases.emplace_back(line);
  }
  if (in.bad()) throw IoError("error reading COS phrase stream");
  return CosPhraseList(phrases);
}

std::vector<PhraseMatch> match_phrases(std::span<const std::string> tokens,
                                       const CosPhraseList& phrases) {
  std::vector<PhraseMatch> out;
  internal::for_each_longest_match(
      tokens, phrases.max_phrase_len(),
      [&](std::string_view candidate) { return phrases.contains(candidate); },
      [&](std::string_view phrase, std::size_t offset, std::size_t length) {
        out.push_back({std::string(phrase), offset, length});
      });
  return out;
}

}  // namespace taalwatch
