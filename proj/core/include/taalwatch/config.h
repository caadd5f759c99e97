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

#ifndef TAALWATCH_CONFIG_H_
#define TAALWATCH_CONFIG_H_

#include <chrono>
#include <filesystem>
#include <istream>
#include <optional>

#include "taalwatch/alert.h"
#include "taalwatch/geo.h"
#include "taalwatch/time.h"

namespace taalwatch {

// Settings shared by every pipeline command. Unset data paths fall back to
// the bundled lexicon, COS list and event list.
struct PipelineConfig {
  std::filesystem::path store_path = "taalwatch.store";
  GeoFence fence = GeoFence::taal_default();
  UtcOffset offset = UtcOffset::manila();
  std::optional<std::filesystem::path> lexicon_path;
  std::optional<std::filesystem::path> cos_path;
  std::optional<std::filesystem::path> events_path;
  AlertConfig alert;
  std::chrono::seconds poll_interval{15 * 60};
};

// Flat "key = value" file. Keys: store, tz, lexicon, cos, events,
// center_lat, center_lon, radius_km, alpha, window, require_crossover,
// min_daily_sentiment, poll_interval_s. Values override `base`. Unknown keys
// throw DataError.
PipelineConfig parse_pipeline_config(std::istream& in, PipelineConfig base = {});

// Throws IoError naming the first referenced data path that does not exist.
void check_paths(const PipelineConfig& cfg);

}  // namespace taalwatch

#endif  // TAALWATCH_CONFIG_H_
