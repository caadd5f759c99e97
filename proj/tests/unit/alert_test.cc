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

#include <boost/math/distributions/students_t.hpp>
#include <random>
#include <sstream>

#include "oracles/oracles.h"
#include "taalwatch/alert.h"
#include "taalwatch/errors.h"
#include "test_util.h"

namespace taalwatch {
namespace {

using std::chrono::days;
using testing::ymd;

// Flat baseline followed by a 7-day ramp ending on `event`.
std::vector<AggregateRecord> baseline_then_ramp(CivilDate event, int lead_in) {
  std::vector<std::int64_t> neg, pos;
  for (int i = 0; i < lead_in; ++i) {
    neg.push_back(857);
    pos.push_back(3151);
  }
  for (int w = 0; w <= 6; ++w) {
    neg.push_back(std::llround(915.63 * w + 366.13));
    pos.push_back(std::llround(-579.00 * w + 3809.00));
  }
  return testing::daily_series(event - days(lead_in + 6), neg, pos, 5000);
}

struct Expected {
  CivilDate date;
  AlertLevel level;
};

// Re-derives the alert sequence with the normal-equations oracle and the boost t distribution.
std::vector<Expected> hand_simulate(const std::vector<AggregateRecord>& daily,
                                    const AlertConfig& cfg) {
  const auto significant = [&](const std::vector<double>& ys, int sign) {
    std::vector<double> xs(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i);
    const auto fit = oracle::normal_equations(xs, ys);
    if (!(fit.slope * sign > 0)) return false;
    const double n = static_cast<double>(ys.size());
    const double r2 = fit.r * fit.r;
    if (r2 >= 1.0) return true;
    const double t = fit.r * std::sqrt((n - 2) / (1 - r2));
    const boost::math::students_t dist(n - 2);
    const double p = 2 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
    return p < cfg.alpha;
  };
  std::vector<Expected> out;
  const auto w = static_cast<std::size_t>(cfg.window_days);
  for (std::size_t i = w; i < daily.size(); ++i) {
    if (daily[i].sentiment < cfg.min_daily_sentiment) continue;
    std::vector<double> neg, pos;
    for (std::size_t k = i - w; k <= i; ++k) {
      neg.push_back(static_cast<double>(daily[k].negative));
      pos.push_back(static_cast<double>(daily[k].positive));
    }
    if (significant(neg, +1) && significant(pos, -1)) {
      const bool cross = daily[i].negative > daily[i].positive;
      out.push_back({daily[i].date(), (cross || !cfg.require_crossover) ? AlertLevel::kWarning
                                                                         : AlertLevel::kWatch});
    }
  }
  return out;
}

TEST(Evaluate, FlatSeriesRaisesNothing) {
  const auto daily = testing::daily_series(ymd(2013, 1, 1), std::vector<std::int64_t>(60, 800),
                                           std::vector<std::int64_t>(60, 3000));
  EXPECT_TRUE(evaluate(daily, AlertConfig{}).empty());
}

TEST(Evaluate, RampEscalatesFromWatchToWarningAtCrossover) {
  const CivilDate ev = ymd(2013, 2, 2);
  // Symmetric 300/day ramps from the baseline cross at W = 4.
  std::vector<std::int64_t> neg(20, 857), pos(20, 3151);
  for (int w = 0; w <= 6; ++w) {
    neg.push_back(857 + 300 * w);
    pos.push_back(3151 - 300 * w);
  }
  const auto daily = testing::daily_series(ev - days(26), neg, pos, 5000);
  const auto alerts = evaluate(daily, AlertConfig{});
  const auto want = hand_simulate(daily, AlertConfig{});
  ASSERT_EQ(alerts.size(), want.size());
  for (std::size_t i = 0; i < alerts.size(); ++i) {
    EXPECT_EQ(alerts[i].date, want[i].date);
    EXPECT_EQ(alerts[i].level, want[i].level);
  }
  const CivilDate crossover = ev - days(2);
  ASSERT_FALSE(alerts.empty());
  EXPECT_EQ(alerts.front().level, AlertLevel::kWatch);
  EXPECT_LT(alerts.front().date, crossover);
  bool warned_by_crossover = false;
  for (const auto& a : alerts) {
    if (a.date < crossover) {
      EXPECT_EQ(a.level, AlertLevel::kWatch);
    }
    if (a.date == crossover && a.level == AlertLevel::kWarning) warned_by_crossover = true;
    EXPECT_EQ(a.crossover, a.negative > a.positive);
  }
  EXPECT_TRUE(warned_by_crossover);
  EXPECT_EQ(alerts.back().date, ev);
  EXPECT_EQ(alerts.back().level, AlertLevel::kWarning);
}

TEST(Evaluate, BothTrendsAreRequired) {
  std::vector<std::int64_t> neg, pos;
  for (int i = 0; i < 20; ++i) {
    neg.push_back(100 + 50 * i);
    pos.push_back(100 + 60 * i);
  }
  const auto daily = testing::daily_series(ymd(2013, 1, 1), neg, pos);
  EXPECT_TRUE(evaluate(daily, AlertConfig{}).empty());
}

TEST(Evaluate, WithoutCrossoverRequirementEveryAlertIsAWarning) {
  const auto daily = baseline_then_ramp(ymd(2013, 2, 2), 20);
  AlertConfig cfg;
  cfg.require_crossover = false;
  const auto alerts = evaluate(daily, cfg);
  ASSERT_FALSE(alerts.empty());
  for (const auto& a : alerts) EXPECT_EQ(a.level, AlertLevel::kWarning);
  EXPECT_EQ(alerts.size(), evaluate(daily, AlertConfig{}).size());
}

TEST(Evaluate, QuietDaysAreSkipped) {
  const auto daily = baseline_then_ramp(ymd(2013, 2, 2), 20);
  AlertConfig cfg;
  cfg.min_daily_sentiment = 1'000'000;
  EXPECT_TRUE(evaluate(daily, cfg).empty());
}

TEST(Evaluate, MatchesHandSimulationOnNoisySeries) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> noise(0.0, 40.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int64_t> neg, pos;
    for (int i = 0; i < 90; ++i) {
      const int w = (i % 30) - 22;
      const double ramp = w >= 0 ? w : 0;
      neg.push_back(std::max<std::int64_t>(0, std::llround(90 + 60.0 * ramp + noise(rng))));
      pos.push_back(std::max<std::int64_t>(0, std::llround(340 - 40.0 * ramp + noise(rng))));
    }
    const auto daily = testing::daily_series(ymd(2013, 1, 1), neg, pos);
    for (double alpha : {0.01, 0.05, 0.1}) {
      AlertConfig cfg;
      cfg.alpha = alpha;
      const auto alerts = evaluate(daily, cfg);
      const auto want = hand_simulate(daily, cfg);
      ASSERT_EQ(alerts.size(), want.size());
      for (std::size_t i = 0; i < alerts.size(); ++i) {
        EXPECT_EQ(alerts[i].date, want[i].date);
        EXPECT_EQ(alerts[i].level, want[i].level);
      }
    }
  }
}

TEST(Evaluate, IsDeterministic) {
  const auto daily = baseline_then_ramp(ymd(2013, 2, 2), 30);
  const auto a = evaluate(daily, AlertConfig{});
  const auto b = evaluate(daily, AlertConfig{});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].date, b[i].date);
    EXPECT_EQ(a[i].level, b[i].level);
    EXPECT_EQ(a[i].fit_neg.p_value, b[i].fit_neg.p_value);
  }
}

TEST(Evaluate, RejectsGapsAndBadConfig) {
  auto daily = testing::daily_series(ymd(2013, 1, 1), std::vector<std::int64_t>(10, 1),
                                     std::vector<std::int64_t>(10, 1));
  daily.erase(daily.begin() + 4);
  EXPECT_THROW(evaluate(daily, AlertConfig{}), DataError);
  AlertConfig bad;
  bad.alpha = 1.5;
  EXPECT_THROW(validate(bad), DataError);
  bad = AlertConfig{};
  bad.window_days = 1;
  EXPECT_THROW(validate(bad), DataError);
}

Alert warning_on(CivilDate d) {
  Alert a;
  a.date = d;
  a.level = AlertLevel::kWarning;
  return a;
}

TEST(CoOccurrence, EarliestQualifyingWarningGivesTheLead) {
  const std::vector<Alert> alerts{warning_on(ymd(2013, 1, 30)), warning_on(ymd(2013, 2, 1))};
  const std::vector<EventRecord> events{{ymd(2013, 2, 2), "FKE"}};
  const auto r = co_occurrence(alerts, events);
  EXPECT_EQ(r.true_positives, 1u);
  EXPECT_EQ(r.false_negatives, 0u);
  EXPECT_EQ(r.lead_days_per_event, (std::vector<std::optional<int>>{3}));
  EXPECT_EQ(r.alert_days_outside_lead, 0u);
}

TEST(CoOccurrence, NoAlertsMeansEveryEventIsMissed) {
  const std::vector<EventRecord> events{{ymd(2013, 2, 2), "FKE"}, {ymd(2014, 1, 16), "FKE"}};
  const auto r = co_occurrence({}, events);
  EXPECT_EQ(r.true_positives, 0u);
  EXPECT_EQ(r.false_negatives, 2u);
}

TEST(CoOccurrence, AlertTooEarlyIsOutsideTheLeadWindow) {
  const std::vector<Alert> alerts{warning_on(ymd(2013, 1, 23))};
  const std::vector<EventRecord> events{{ymd(2013, 2, 2), "FKE"}};
  const auto r = co_occurrence(alerts, events);
  EXPECT_EQ(r.alert_days_outside_lead, 1u);
  EXPECT_EQ(r.false_negatives, 1u);
}

TEST(CoOccurrence, WatchAlertsAndEventDayOption) {
  Alert watch = warning_on(ymd(2013, 1, 31));
  watch.level = AlertLevel::kWatch;
  const std::vector<Alert> alerts{watch, warning_on(ymd(2013, 2, 2))};
  const std::vector<EventRecord> events{{ymd(2013, 2, 2), "FKE"}};
  EXPECT_EQ(co_occurrence(alerts, events).lead_days_per_event[0], 0);
  LeadWindow strict;
  strict.include_event_day = false;
  const auto r = co_occurrence(alerts, events, strict);
  EXPECT_EQ(r.true_positives, 0u);
  EXPECT_EQ(r.alert_days_outside_lead, 1u);
}

TEST(RecoveryDays, CountsDaysUntilPositivesLeadAgain) {
  const auto daily = testing::daily_series(ymd(2013, 2, 1), {10, 50, 40, 5}, {20, 5, 30, 30});
  EXPECT_EQ(recovery_days(daily, ymd(2013, 2, 2)), 2);
  EXPECT_EQ(recovery_days(daily, ymd(2013, 3, 1)), std::nullopt);
}

TEST(AlertCsv, HeaderAndBlock) {
  const auto daily = testing::daily_series(ymd(2013, 2, 1), {10, 50}, {20, 5});
  std::ostringstream out;
  const std::vector<Alert> alerts{warning_on(ymd(2013, 2, 1))};
  write_alert_csv(out, alerts);
  const std::vector<EventRecord> events{{ymd(2013, 2, 2), "FKE"}};
  write_co_occurrence_block(out, co_occurrence(alerts, events), events, daily);
  const std::string s = out.str();
  EXPECT_EQ(s.rfind("date,level,negative,positive,crossover,", 0), 0u);
  EXPECT_NE(s.find("2013-02-01,WARNING,"), std::string::npos);
  EXPECT_NE(s.find("true_positives,1\n"), std::string::npos);
  EXPECT_NE(s.find("2013-02-02,FKE,1,\n"), std::string::npos) << s;
}

}  // namespace
}  // namespace taalwatch
