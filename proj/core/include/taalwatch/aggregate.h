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

#ifndef TAALWATCH_AGGREGATE_H_
#define TAALWATCH_AGGREGATE_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "taalwatch/classifier.h"
#include "taalwatch/store.h"
#include "taalwatch/time.h"

namespace taalwatch {

enum class Granularity { kHour, kDay, kWeek, kMonth };

std::string_view granularity_name(Granularity g);  // "hour", "day", ...
Granularity parse_granularity(std::string_view name);

// Polarity counts for one civil time bin. Weeks start on Monday (ISO 8601);
// months are calendar months.
struct AggregateRecord {
  LocalTime bin_start;
  Granularity granularity = Granularity::kDay;
  std::int64_t total = 0;
  std::int64_t neutral = 0;
  std::int64_t sentiment = 0;
  std::int64_t positive = 0;
  std::int64_t negative = 0;

  CivilDate date() const { return std::chrono::floor<std::chrono::days>(bin_start); }

  friend bool operator==(const AggregateRecord&, const AggregateRecord&) = default;
};

// Half-open range of civil dates [first, end).
struct DateWindow {
  CivilDate first;
  CivilDate end;
};

// Minimal input for binning.
struct PolarityObservation {
  Timestamp ts;
  Polarity polarity;
};

// One record per bin overlapping the window, empty bins included. Only
// posts inside the window are counted, so partial edge bins hold partial
// counts. Throws DataError when window.first > window.end.
std::vector<AggregateRecord> bin(std::span<const PolarityObservation> posts, Granularity g,
                                 UtcOffset offset, DateWindow window);
std::vector<AggregateRecord> bin(std::span<const StoredPost> posts, Granularity g,
                                 UtcOffset offset, DateWindow window);

enum class CountField { kTotal, kNeutral, kSentiment, kPositive, kNegative };

std::string_view count_field_name(CountField f);
CountField parse_count_field(std::string_view name);
std::int64_t field_value(const AggregateRecord& r, CountField f);

enum class SdKind { kPopulation, kSample };

struct SeriesExtreme {
  std::int64_t value = 0;
  LocalTime bin_start;
};

struct SeriesSummary {
  double mean = 0.0;
  double sd = 0.0;
  SeriesExtreme min;
  SeriesExtreme max;
  std::size_t n_bins = 0;
};

// Ties for min/max resolve to the earliest bin. Throws DataError on an empty
// series, or for the sample sd of a single bin.
SeriesSummary summarize(std::span<const AggregateRecord> series, CountField field,
                        SdKind sd_kind = SdKind::kPopulation);

// CSV with the header bin_start,granularity,total,neutral,sentiment,positive,negative.
void write_aggregate_csv(std::ostream& out, std::span<const AggregateRecord> series,
                         UtcOffset offset);

}  // namespace taalwatch

#endif  // TAALWATCH_AGGREGATE_H_
