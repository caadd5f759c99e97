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

#ifndef TAALWATCH_ALERT_H_
#define TAALWATCH_ALERT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "taalwatch/aggregate.h"
#include "taalwatch/store.h"
#include "taalwatch/trend.h"

namespace taalwatch {

struct AlertConfig {
  int window_days = 6;
  double alpha = 0.05;
  // When false every day passing the trend test is a WARNING.
  bool require_crossover = true;
  // Days whose positive + negative count is below this are not evaluated.
  std::int64_t min_daily_sentiment = 50;
};

// Throws DataError unless 0 < alpha < 1 and window_days >= 2.
void validate(const AlertConfig& cfg);

enum class AlertLevel { kWatch, kWarning };
std::string_view alert_level_name(AlertLevel level);  // "WATCH" / "WARNING"

struct Alert {
  CivilDate date;
  AlertLevel level = AlertLevel::kWatch;
  TrendFit fit_neg;
  TrendFit fit_pos;
  bool crossover = false;  // negative > positive on `date`
  std::int64_t negative = 0;
  std::int64_t positive = 0;
};

// Trailing-window early warning over a contiguous daily series. For each day
// d with window_days earlier days available, negatives and positives over
// [d - window_days, d] are fitted; a significantly rising negative trend
// together with a significantly falling positive trend raises WATCH, and a
// crossover on d escalates it to WARNING. Throws DataError if the series is
// not a gap-free daily series.
std::vector<Alert> evaluate(std::span<const AggregateRecord> daily, const AlertConfig& cfg);

// Lead window in days before an event in which a WARNING counts as early.
struct LeadWindow {
  int lead_min = 1;
  int lead_max = 6;
  bool include_event_day = true;
};

struct CoOccurrenceReport {
  std::size_t true_positives = 0;
  std::size_t false_negatives = 0;
  // Distinct WARNING days outside every event's window.
  std::size_t alert_days_outside_lead = 0;
  // Per event, in input order: event date minus earliest qualifying WARNING.
  std::vector<std::optional<int>> lead_days_per_event;
};

// Only WARNING alerts are considered.
CoOccurrenceReport co_occurrence(std::span<const Alert> alerts,
                                 std::span<const EventRecord> events,
                                 const LeadWindow& lead = {});

// Days after the event until positives first exceed negatives; nullopt if
// that never happens within the series.
std::optional<int> recovery_days(std::span<const AggregateRecord> daily, CivilDate event_date);

// Alerts CSV, then a "# co_occurrence" block of key,value lines.
void write_alert_csv(std::ostream& out, std::span<const Alert> alerts);
void write_co_occurrence_block(std::ostream& out, const CoOccurrenceReport& report,
                               std::span<const EventRecord> events,
                               std::span<const AggregateRecord> daily);

}  // namespace taalwatch

#endif  // TAALWATCH_ALERT_H_
