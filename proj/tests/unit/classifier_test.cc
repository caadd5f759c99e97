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

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "taalwatch/classifier.h"
#include "taalwatch/errors.h"
#include "taalwatch/lexicon.h"
#include "taalwatch/synth.h"
#include "test_util.h"

namespace taalwatch {
namespace {

using Tokens = std::vector<std::string>;

Lexicon small_lexicon() {
  std::istringstream in("happy\ten\t1\nmalungkot\tfil\t-1\nlawa\tfil\t0\n"
                        "walang kwenta\tfil\t-1\n");
  return load_lexicon(in).lexicon;
}

TEST(Tokenize, EmptyInput) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, DropsUrlsAndMentionsAndStripsHashes) {
  EXPECT_EQ(tokenize("Maitim na tubig! http://t.co/x @juan #TaalLake"),
            (Tokens{"maitim", "na", "tubig", "taallake"}));
}

TEST(Tokenize, PunctuationSplitsAndCaseFolds) {
  EXPECT_EQ(tokenize("AMOY-ASUPRE"), (Tokens{"amoy", "asupre"}));
  EXPECT_EQ(tokenize("it's 2013...ok"), (Tokens{"it", "s", "2013", "ok"}));
}

TEST(Tokenize, MentionNeedsAWordBoundary) {
  EXPECT_EQ(tokenize("mail juan@example.com"), (Tokens{"mail", "juan", "example", "com"}));
  EXPECT_EQ(tokenize("(@juan) hi"), (Tokens{"hi"}));
  EXPECT_EQ(tokenize("@ alone"), (Tokens{"alone"}));
}

TEST(Tokenize, UrlPrefixesAreCaseInsensitiveAndWholeChunk) {
  EXPECT_EQ(tokenize("HTTPS://X.CO/a see www.x.ph"), (Tokens{"see"}));
  EXPECT_EQ(tokenize("see:http://x.co"), (Tokens{"see", "http", "x", "co"}));
}

TEST(Tokenize, FoldsAccentedAndNonLatinLetters) {
  EXPECT_EQ(tokenize("ÉXITO Ñaño ΑΒΓ ДОМ"), (Tokens{"éxito", "ñaño", "αβγ", "дом"}));
}

TEST(Tokenize, EmojiAndUnicodeSpacesSeparate) {
  EXPECT_EQ(tokenize("happy\U0001F600sad　lake fish"),
            (Tokens{"happy", "sad", "lake", "fish"}));
}

TEST(Tokenize, InvalidUtf8DoesNotCrash) {
  const std::string bad = "ok \xff\xfe bad\xc3";
  const Tokens t = tokenize(bad);
  EXPECT_FALSE(t.empty());
  EXPECT_EQ(t.front(), "ok");
}

TEST(Score, AveragesOverAllTokens) {
  const Lexicon lex = small_lexicon();
  const SentimentScore s = score(lex, CosPhraseList::bundled(), "happy happy malungkot");
  EXPECT_EQ(s.polarity_sum, 1);
  EXPECT_EQ(s.n_tokens, 3);
  EXPECT_EQ(s.n_matched, 3);
  EXPECT_DOUBLE_EQ(s.s_mean(), 1.0 / 3.0);
  EXPECT_EQ(s.polarity, Polarity::kPositive);
}

TEST(Score, NoMatchesIsNeutral) {
  const SentimentScore s = score(small_lexicon(), CosPhraseList::bundled(), "the of and");
  EXPECT_EQ(s.s_mean(), 0.0);
  EXPECT_EQ(s.polarity, Polarity::kNeutral);
  EXPECT_EQ(s.n_matched, 0);
  EXPECT_EQ(s.n_tokens, 3);
}

TEST(Score, UnmatchedTokensDiluteTheMean) {
  const SentimentScore s = score(small_lexicon(), CosPhraseList::bundled(), "happy x y z");
  EXPECT_EQ(s.s_mean(), 0.25);
  EXPECT_EQ(s.polarity, Polarity::kPositive);
}

TEST(Score, EmptyTextIsNeutralZero) {
  const SentimentScore s = score(small_lexicon(), CosPhraseList::bundled(), "");
  EXPECT_EQ(s.n_tokens, 0);
  EXPECT_EQ(s.s_mean(), 0.0);
  EXPECT_EQ(s.polarity, Polarity::kNeutral);
}

TEST(Score, ZeroPolarityEntriesCountAsMatched) {
  const SentimentScore s = score(small_lexicon(), CosPhraseList::bundled(), "lawa lawa happy");
  EXPECT_EQ(s.n_matched, 3);
  EXPECT_EQ(s.polarity_sum, 1);
}

TEST(Score, MultiwordEntryCoversEachToken) {
  const SentimentScore s = score(small_lexicon(), CosPhraseList::bundled(), "walang kwenta ito");
  EXPECT_EQ(s.polarity_sum, -2);
  EXPECT_EQ(s.n_matched, 2);
  EXPECT_EQ(s.n_tokens, 3);
  EXPECT_EQ(s.polarity, Polarity::kNegative);
}

TEST(Score, ReportsCosHitsWithoutChangingPolarity) {
  const Lexicon lex = small_lexicon();
  const SentimentScore with = score(lex, CosPhraseList::bundled(), "happy amoy asupre");
  const SentimentScore without = score(lex, CosPhraseList{}, "happy amoy asupre");
  EXPECT_EQ(with.cos_hits, (Tokens{"amoy asupre"}));
  EXPECT_TRUE(without.cos_hits.empty());
  EXPECT_EQ(with.polarity_sum, without.polarity_sum);
  EXPECT_EQ(with.n_tokens, without.n_tokens);
}

TEST(Score, NeutralBandWidensNeutral) {
  const Lexicon lex = small_lexicon();
  ScoringOptions opts;
  opts.neutral_band = 0.3;
  EXPECT_EQ(score(lex, CosPhraseList{}, "happy x y z", opts).polarity, Polarity::kNeutral);
  EXPECT_EQ(score(lex, CosPhraseList{}, "happy x", opts).polarity, Polarity::kPositive);
}

TEST(Score, InvariantsHoldOnRandomText) {
  const Lexicon& lex = Lexicon::bundled();
  const auto& pools = TemplatePools::bundled();
  std::vector<std::string> words;
  for (const auto& e : lex.entries()) words.push_back(e.term);
  for (const char* w : {"the", "lawa", "http://x.co", "@juan", "#taal", "!!", "-", "ÑAÑO"}) {
    words.emplace_back(w);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    const int n = static_cast<int>(rng() % 20);
    for (int k = 0; k < n; ++k) text += words[rng() % words.size()] + " ";
    if (i % 7 == 0) text += pools.negative[rng() % pools.negative.size()];
    const SentimentScore s = score(lex, CosPhraseList::bundled(), text);
    EXPECT_GE(s.n_matched, 0);
    EXPECT_LE(s.n_matched, s.n_tokens);
    EXPECT_LE(std::abs(s.polarity_sum), s.n_matched);
    EXPECT_GE(s.s_mean(), -1.0);
    EXPECT_LE(s.s_mean(), 1.0);
    EXPECT_EQ(s.polarity, classify_mean(s.polarity_sum, s.n_tokens));
    EXPECT_EQ(s.n_tokens, static_cast<std::int64_t>(tokenize(text).size()));
  }
}

TEST(ClassifyMean, FollowsTheSign) {
  EXPECT_EQ(classify_mean(0, 0), Polarity::kNeutral);
  EXPECT_EQ(classify_mean(1, 100), Polarity::kPositive);
  EXPECT_EQ(classify_mean(-1, 100), Polarity::kNegative);
  EXPECT_EQ(classify_mean(0, 100), Polarity::kNeutral);
}

TEST(PolarityName, RoundTrips) {
  for (Polarity p : {Polarity::kNegative, Polarity::kNeutral, Polarity::kPositive}) {
    EXPECT_EQ(parse_polarity(polarity_name(p)), p);
  }
  EXPECT_THROW(parse_polarity("meh"), DataError);
}

std::vector<Micropost> some_posts(int n) {
  const auto& pools = TemplatePools::bundled();
  std::vector<Micropost> posts;
  for (int i = 0; i < n; ++i) {
    const auto& pool = i % 3 == 0 ? pools.positive : i % 3 == 1 ? pools.negative : pools.neutral;
    posts.push_back(testing::make_post("p" + std::to_string(i),
                                       testing::manila_time(testing::ymd(2013, 2, 1), i % 24),
                                       pool[static_cast<std::size_t>(i) % pool.size()]));
  }
  return posts;
}

TEST(ClassifyBatch, EmptyInput) {
  EXPECT_TRUE(classify_batch({}, Lexicon::bundled(), CosPhraseList::bundled()).empty());
}

TEST(ClassifyBatch, SingletonMatchesScore) {
  const auto posts = some_posts(1);
  const auto out = classify_batch(posts, Lexicon::bundled(), CosPhraseList::bundled());
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].first, posts[0].id);
  EXPECT_EQ(out[0].second, score(Lexicon::bundled(), CosPhraseList::bundled(), posts[0].text));
}

TEST(ClassifyBatch, PermutationAndThreadCountInvariant) {
  auto posts = some_posts(300);
  const auto& lex = Lexicon::bundled();
  const auto& cos = CosPhraseList::bundled();
  auto base = classify_batch(posts, lex, cos, {}, 1);
  std::mt19937_64 rng(9);
  std::shuffle(posts.begin(), posts.end(), rng);
  for (unsigned threads : {1u, 2u, 4u, 7u}) {
    auto got = classify_batch(posts, lex, cos, {}, threads);
    ASSERT_EQ(got.size(), posts.size());
    for (std::size_t i = 0; i < posts.size(); ++i) EXPECT_EQ(got[i].first, posts[i].id);
    auto by_id = [](const auto& a, const auto& b) { return a.first < b.first; };
    std::sort(got.begin(), got.end(), by_id);
    auto sorted_base = base;
    std::sort(sorted_base.begin(), sorted_base.end(), by_id);
    EXPECT_EQ(got, sorted_base);
  }
}

TEST(Templates, EveryBundledTemplateScoresAsItsClass) {
  const auto& pools = TemplatePools::bundled();
  const auto check = [](const std::vector<std::string>& pool, Polarity want) {
    ASSERT_FALSE(pool.empty());
    for (const auto& text : pool) {
      EXPECT_EQ(score(Lexicon::bundled(), CosPhraseList::bundled(), text).polarity, want) << text;
    }
  };
  check(pools.positive, Polarity::kPositive);
  check(pools.negative, Polarity::kNegative);
  check(pools.neutral, Polarity::kNeutral);
}

struct FixtureRow {
  std::string id;
  std::int64_t sum;
  std::int64_t n;
  std::string text;
};

std::vector<FixtureRow> load_fixture() {
  std::ifstream in(std::string(TAALWATCH_FIXTURE_DIR) + "/scoring_fixture.tsv");
  std::vector<FixtureRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    FixtureRow r;
    std::string sum, n;
    std::getline(ls, r.id, '\t');
    std::getline(ls, sum, '\t');
    std::getline(ls, n, '\t');
    std::getline(ls, r.text);
    r.sum = std::stoll(sum);
    r.n = std::stoll(n);
    rows.push_back(r);
  }
  return rows;
}

TEST(ScoringFixture, MatchesConstructedTallies) {
  std::ifstream lex_in(std::string(TAALWATCH_FIXTURE_DIR) + "/scoring_lexicon.tsv");
  const Lexicon lex = load_lexicon(lex_in).lexicon;
  const auto rows = load_fixture();
  ASSERT_EQ(rows.size(), 200u);
  for (const auto& r : rows) {
    const SentimentScore s = score(lex, CosPhraseList::bundled(), r.text);
    EXPECT_EQ(s.polarity_sum, r.sum) << r.id << ": " << r.text;
    EXPECT_EQ(s.n_tokens, r.n) << r.id << ": " << r.text;
  }
}

}  // namespace
}  // namespace taalwatch
