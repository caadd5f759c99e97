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

#include "taalwatch/alert.h"

#include <algorithm>
#include <set>

#include "numfmt.h"
#include "taalwatch/errors.h"

namespace taalwatch {

namespace {

void check_contiguous_daily(std::span<const AggregateRecord> daily) {
  for (std::size_t i = 0; i < daily.size(); ++i) {
    if (daily[i].granularity != Granularity::kDay) {
      throw DataError("alert evaluation needs a daily series");
    }
    if (i > 0 && daily[i].date() != daily[i - 1].date() + std::chrono::days(1)) {
      throw DataError("daily series is not contiguous at " + format_date(daily[i].date()));
    }
  }
}

TrendFit window_fit(std::span<const AggregateRecord> window, CountField field) {
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(window.size());
  ys.reserve(window.size());
  for (std::size_t k = 0; k < window.size(); ++k) {
    xs.push_back(static_cast<double>(k));
    ys.push_back(static_cast<double>(field_value(window[k], field)));
  }
  return ols_fit(xs, ys);
}

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

void validate(const AlertConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw DataError("alpha must lie in (0, 1)");
  if (cfg.window_days < 2) throw DataError("alert window must be at least 2 days");
  if (cfg.min_daily_sentiment < 0) throw DataError("min_daily_sentiment must be >= 0");
}

std::string_view alert_level_name(AlertLevel level) {
  return level == AlertLevel::kWarning ? "WARNING" : "WATCH";
}

std::vector<Alert> evaluate(std::span<const AggregateRecord> daily, const AlertConfig& cfg) {
  validate(cfg);
  check_contiguous_daily(daily);
  const auto w = static_cast<std::size_t>(cfg.window_days);
  std::vector<Alert> alerts;
  for (std::size_t i = w; i < daily.size(); ++i) {
    const AggregateRecord& today = daily[i];
    if (today.sentiment < cfg.min_daily_sentiment) continue;
    const auto window = daily.subspan(i - w, w + 1);
    const TrendFit neg = window_fit(window, CountField::kNegative);
    if (!(neg.slope > 0.0 && neg.p_value < cfg.alpha)) continue;
    const TrendFit pos = window_fit(window, CountField::kPositive);
    if (!(pos.slope < 0.0 && pos.p_value < cfg.alpha)) continue;

    Alert a;
    a.date = today.date();
    a.fit_neg = neg;
    a.fit_pos = pos;
    a.negative = today.negative;
    a.positive = today.positive;
    a.crossover = today.negative > today.positive;
    a.level = (!cfg.require_crossover || a.crossover) ? AlertLevel::kWarning : AlertLevel::kWatch;
    alerts.push_back(a);
  }
  return alerts;
}

CoOccurrenceReport co_occurrence(std::span<const Alert> alerts,
                                 std::span<const EventRecord> events, const LeadWindow& lead) {
  std::set<CivilDate> warnings;
  for (const auto& a : alerts) {
    if (a.level == AlertLevel::kWarning) warnings.insert(a.date);
  }
  const auto qualifies = [&](CivilDate day, CivilDate event) {
    const auto before = (event - day).count();
    if (before == 0) return lead.include_event_day;
    return before >= lead.lead_min && before <= lead.lead_max;
  };

  CoOccurrenceReport report;
  for (const auto& ev : events) {
    std::optional<int> lead_days;
    for (const CivilDate day : warnings) {  // ascending, so the first hit is the earliest
      if (qualifies(day, ev.date)) {
        lead_days = static_cast<int>((ev.date - day).count());
        break;
      }
    }
    if (lead_days) {
      ++report.true_positives;
    } else {
      ++report.false_negatives;
    }
    report.lead_days_per_event.push_back(lead_days);
  }
  for (const CivilDate day : warnings) {
    const bool inside = std::any_of(events.begin(), events.end(),
                                    [&](const EventRecord& ev) { return qualifies(day, ev.date); });
    if (!inside) ++report.alert_days_outside_lead;
  }
  return report;
}

std::optional<int> recovery_days(std::span<const AggregateRecord> daily, CivilDate event_date) {
  const auto it = std::find_if(daily.begin(), daily.end(),
                               [&](const AggregateRecord& r) { return r.date() == event_date; });
  if (it == daily.end()) return std::nullopt;
  for (auto next = it + 1; next != daily.end(); ++next) {
    if (next->positive > next->negative) {
      return static_cast<int>((next->date() - event_date).count());
    }
  }
  return std::nullopt;
}

void write_alert_csv(std::ostream& out, std::span<const Alert> alerts) {
  using internal::fmt_double;
  out << "date,level,negative,positive,crossover,neg_slope,neg_p_value,neg_significance,"
         "pos_slope,pos_p_value,pos_significance\n";
  for (const auto& a : alerts) {
    out << format_date(a.date) << ',' << alert_level_name(a.level) << ',' << a.negative << ','
        << a.positive << ',' << (a.crossover ? "true" : "false") << ','
        << fmt_double(a.fit_neg.slope) << ',' << fmt_double(a.fit_neg.p_value) << ','
        << significance_mark(a.fit_neg.significance) << ',' << fmt_double(a.fit_pos.slope) << ','
        << fmt_double(a.fit_pos.p_value) << ',' << significance_mark(a.fit_pos.significance)
        << '\n';
  }
}

void write_co_occurrence_block(std::ostream& out, const CoOccurrenceReport& report,
                               std::span<const EventRecord> events,
                               std::span<const AggregateRecord> daily) {
  out << "# co_occurrence\n";
  out << "true_positives," << report.true_positives << '\n';
  out << "false_negatives," << report.false_negatives << '\n';
  out << "alert_days_outside_lead," << report.alert_days_outside_lead << '\n';
  out << "# event,label,lead_days,recovery_days\n";
  for (std::size_t i = 0; i < events.size(); ++i) {
    out << format_date(events[i].date) << ',' << events[i].label << ','
        << opt_int(report.lead_days_per_event[i]) << ','
        << opt_int(recovery_days(daily, events[i].date)) << '\n';
  }
}

}  // namespace taalwatch
