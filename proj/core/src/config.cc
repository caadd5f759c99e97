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

#include "taalwatch/config.h"

#include <charconv>
#include <string>

#include "taalwatch/errors.h"

namespace taalwatch {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw DataError("config: '" + key + "' has invalid value '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw DataError("config: '" + key + "' expects true or false, got '" + value + "'");
}

}  // namespace

PipelineConfig parse_pipeline_config(std::istream& in, PipelineConfig base) {
  double lat = base.fence.center().lat();
  double lon = base.fence.center().lon();
  double radius = base.fence.radius_km();
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DataError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "store") {
      base.store_path = value;
    } else if (key == "tz") {
      base.offset = UtcOffset::parse(value);
    } else if (key == "lexicon") {
      base.lexicon_path = value;
    } else if (key == "cos") {
      base.cos_path = value;
    } else if (key == "events") {
      base.events_path = value;
    } else if (key == "center_lat") {
      lat = parse_number<double>(key, value);
    } else if (key == "center_lon") {
      lon = parse_number<double>(key, value);
    } else if (key == "radius_km") {
      radius = parse_number<double>(key, value);
    } else if (key == "alpha") {
      base.alert.alpha = parse_number<double>(key, value);
    } else if (key == "window") {
      base.alert.window_days = parse_number<int>(key, value);
    } else if (key == "require_crossover") {
      base.alert.require_crossover = parse_bool(key, value);
    } else if (key == "min_daily_sentiment") {
      base.alert.min_daily_sentiment = parse_number<std::int64_t>(key, value);
    } else if (key == "poll_interval_s") {
      base.poll_interval = std::chrono::seconds(parse_number<std::int64_t>(key, value));
    } else {
      throw DataError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  base.fence = GeoFence(GeoPoint(lat, lon), radius);
  validate(base.alert);
  if (base.poll_interval <= std::chrono::seconds::zero()) {
    throw DataError("config: poll_interval_s must be positive");
  }
  return base;
}

void check_paths(const PipelineConfig& cfg) {
  for (const auto* p : {&cfg.lexicon_path, &cfg.cos_path, &cfg.events_path}) {
    if (*p && !std::filesystem::exists(**p)) {
      throw IoError("file not found: " + (*p)->string());
    }
  }
}

}  // namespace taalwatch
