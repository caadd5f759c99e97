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

#include <sstream>

#include "taalwatch/config.h"
#include "taalwatch/errors.h"
#include "test_util.h"

namespace taalwatch {
namespace {

PipelineConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_pipeline_config(in);
}

TEST(PipelineConfig, DefaultsMatchTheStudySetup) {
  const PipelineConfig cfg;
  EXPECT_EQ(cfg.fence.center(), GeoPoint(14.0, 121.0));
  EXPECT_EQ(cfg.fence.radius_km(), 10.0);
  EXPECT_EQ(cfg.offset, UtcOffset::manila());
  EXPECT_EQ(cfg.poll_interval, std::chrono::minutes(15));
  EXPECT_EQ(cfg.alert.window_days, 6);
  EXPECT_EQ(cfg.alert.alpha, 0.05);
}

TEST(PipelineConfig, ParsesEveryKey) {
  const PipelineConfig cfg = parse(
      "# comment\nstore = /tmp/x.log\ntz = +07:00\nlexicon = lex.tsv\ncos = cos.txt\n"
      "events = ev.csv\ncenter_lat = 13.9\ncenter_lon = 121.1  # inline\nradius_km = 12.5\n"
      "alpha = 0.01\nwindow = 5\nrequire_crossover = false\nmin_daily_sentiment = 10\n"
      "poll_interval_s = 60\n");
  EXPECT_EQ(cfg.store_path, "/tmp/x.log");
  EXPECT_EQ(cfg.offset.minutes().count(), 420);
  EXPECT_EQ(cfg.lexicon_path, std::filesystem::path("lex.tsv"));
  EXPECT_EQ(cfg.fence.center(), GeoPoint(13.9, 121.1));
  EXPECT_EQ(cfg.fence.radius_km(), 12.5);
  EXPECT_EQ(cfg.alert.alpha, 0.01);
  EXPECT_EQ(cfg.alert.window_days, 5);
  EXPECT_FALSE(cfg.alert.require_crossover);
  EXPECT_EQ(cfg.alert.min_daily_sentiment, 10);
  EXPECT_EQ(cfg.poll_interval, std::chrono::seconds(60));
}

TEST(PipelineConfig, RejectsBadInput) {
  for (const char* text : {"store\n", "colour = red\n", "alpha = 2\n", "radius_km = -1\n",
                           "window = many\n", "require_crossover = maybe\n",
                           "poll_interval_s = 0\n", "tz = Mars/Olympus\n"}) {
    EXPECT_THROW(parse(text), DataError) << text;
  }
}

TEST(PipelineConfig, MissingReferencedFilesAreIoErrors) {
  PipelineConfig cfg;
  cfg.lexicon_path = "/nonexistent/lexicon.tsv";
  EXPECT_THROW(check_paths(cfg), IoError);
  EXPECT_NO_THROW(check_paths(PipelineConfig{}));
}

}  // namespace
}  // namespace taalwatch
