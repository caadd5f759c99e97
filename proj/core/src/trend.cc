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

#include "taalwatch/trend.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "numfmt.h"
#include "taalwatch/errors.h"
#include "taalwatch/stats.h"

namespace taalwatch {

std::string_view significance_mark(Significance s) {
  switch (s) {
    case Significance::kNs: return "ns";
    case Significance::kStar: return "*";
    case Significance::kDoubleStar: return "**";
  }
  return "ns";
}

Significance significance_for(double p_value) {
  if (p_value < 0.01) return Significance::kDoubleStar;
  if (p_value < 0.05) return Significance::kStar;
  return Significance::kNs;
}

TrendFit ols_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DataError("ols_fit: xs and ys differ in length");
  const std::size_t n = xs.size();
  if (n < 2) throw DataError("ols_fit: need at least two points");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw DataError("ols_fit: non-finite input");
    }
  }

  const double nd = static_cast<double>(n);
  double x_mean = 0.0;
  double y_mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x_mean += xs[i];
    y_mean += ys[i];
  }
  x_mean /= nd;
  y_mean /= nd;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - x_mean;
    const double dy = ys[i] - y_mean;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw DataError("ols_fit: xs are all equal");

  TrendFit fit;
  fit.n = n;
  const bool flat = std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys[0]; });
  if (flat) {
    fit.slope = 0.0;
    fit.intercept = ys[0];
    fit.r = 0.0;
    fit.t_stat = 0.0;
    fit.p_value = 1.0;
    fit.significance = Significance::kNs;
    return fit;
  }

  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;
  fit.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);

  if (n == 2) {
    fit.t_stat = 0.0;
    fit.p_value = 1.0;
    fit.significance = Significance::kNs;
    return fit;
  }

  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    sse += e * e;
  }
  const double df = nd - 2.0;
  if (sse == 0.0) {
    fit.t_stat = fit.slope > 0 ? std::numeric_limits<double>::infinity()
                               : -std::numeric_limits<double>::infinity();
    fit.p_value = 0.0;
  } else {
    const double se = std::sqrt(sse / df / sxx);
    fit.t_stat = fit.slope / se;
    fit.p_value = std::clamp(stats::student_t_two_sided_p(fit.t_stat, df), 0.0, 1.0);
  }
  fit.significance = significance_for(fit.p_value);
  return fit;
}

TrendFit pre_event_fit(std::span<const AggregateRecord> daily, CountField field,
                       CivilDate event_date, int window_days) {
  if (window_days < 1) throw DataError("pre-event window must be at least one day");
  const CivilDate first = event_date - std::chrono::days(window_days);
  const auto it = std::find_if(daily.begin(), daily.end(),
                               [&](const AggregateRecord& r) { return r.date() == first; });
  const auto needed = static_cast<std::size_t>(window_days) + 1;
  if (it == daily.end() || static_cast<std::size_t>(daily.end() - it) < needed) {
    throw DataError("daily series does not cover " + format_date(first) + " .. " +
                    format_date(event_date));
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t k = 0; k < needed; ++k) {
    const AggregateRecord& r = *(it + static_cast<std::ptrdiff_t>(k));
    if (r.granularity != Granularity::kDay || r.date() != first + std::chrono::days(k)) {
      throw DataError("daily series has a gap before " + format_date(event_date));
    }
    xs.push_back(static_cast<double>(k));
    ys.push_back(static_cast<double>(field_value(r, field)));
  }
  return ols_fit(xs, ys);
}

PreEventTrend pre_event_trend(std::span<const AggregateRecord> daily, const EventRecord& event,
                              int window_days) {
  PreEventTrend t;
  t.event_date = event.date;
  t.window_days = window_days;
  t.fit_neg = pre_event_fit(daily, CountField::kNegative, event.date, window_days);
  t.fit_pos = pre_event_fit(daily, CountField::kPositive, event.date, window_days);
  t.w_convention = std::string(kWConvention);
  return t;
}

TrendFit full_period_trend(std::span<const AggregateRecord> daily, CountField field) {
  if (daily.size() < 3) throw DataError("full-period trend needs at least three days");
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(daily.size());
  ys.reserve(daily.size());
  for (std::size_t i = 0; i < daily.size(); ++i) {
    xs.push_back(static_cast<double>(i + 1));
    ys.push_back(static_cast<double>(field_value(daily[i], field)));
  }
  return ols_fit(xs, ys);
}

void write_trend_csv_header(std::ostream& out) {
  out << "slope,intercept,r,n,t_stat,p_value,significance\n";
}

void write_trend_csv_row(std::ostream& out, const TrendFit& fit) {
  using internal::fmt_double;
  out << fmt_double(fit.slope) << ',' << fmt_double(fit.intercept) << ',' << fmt_double(fit.r)
      << ',' << fit.n << ',' << fmt_double(fit.t_stat) << ',' << fmt_double(fit.p_value) << ','
      << significance_mark(fit.significance) << '\n';
}

}  // namespace taalwatch
