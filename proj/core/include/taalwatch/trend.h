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

#ifndef TAALWATCH_TREND_H_
#define TAALWATCH_TREND_H_

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "taalwatch/aggregate.h"
#include "taalwatch/store.h"

namespace taalwatch {

enum class Significance { kNs, kStar, kDoubleStar };

// "ns", "*", "**".
std::string_view significance_mark(Significance s);
// "**" when p < 0.01, "*" when p < 0.05, otherwise "ns".
Significance significance_for(double p_value);

// Least-squares line y = slope * x + intercept with a two-sided t-test of
// slope == 0 on n - 2 degrees of freedom. r is the Pearson correlation as a
// fraction in [-1, 1].
struct TrendFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r = 0.0;
  std::size_t n = 0;
  double t_stat = 0.0;
  double p_value = 1.0;
  Significance significance = Significance::kNs;
};

// Throws DataError for mismatched lengths, n < 2, or constant xs. With
// n == 2 the fit is exact and reported as ns with p = 1. A constant y gives
// slope 0, r 0, t 0, p 1; an exact non-flat fit gives infinite t and p 0.
TrendFit ols_fit(std::span<const double> xs, std::span<const double> ys);

// Fit over the window_days + 1 daily points ending on the event date, with
// W = 0 on event_date - window_days rising to W = window_days on the event.
struct PreEventTrend {
  CivilDate event_date;
  int window_days = 6;
  TrendFit fit_neg;
  TrendFit fit_pos;
  std::string w_convention;
};

inline constexpr std::string_view kWConvention =
    "W=0 at event_date-window_days, W=window_days on event_date (event day included)";

// `daily` must be a contiguous day series (as produced by bin()) covering
// [event - window_days, event]. Throws DataError otherwise.
PreEventTrend pre_event_trend(std::span<const AggregateRecord> daily, const EventRecord& event,
                              int window_days = 6);
TrendFit pre_event_fit(std::span<const AggregateRecord> daily, CountField field,
                       CivilDate event_date, int window_days = 6);

// Fit against X = 1, 2, ... from the first bin. Requires n >= 3.
TrendFit full_period_trend(std::span<const AggregateRecord> daily, CountField field);

// Header slope,intercept,r,n,t_stat,p_value,significance, then one row.
void write_trend_csv_header(std::ostream& out);
void write_trend_csv_row(std::ostream& out, const TrendFit& fit);

}  // namespace taalwatch

#endif  // TAALWATCH_TREND_H_
