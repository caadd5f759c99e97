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

#include "taalwatch/aggregate.h"

#include <cmath>

#include "taalwatch/errors.h"

namespace taalwatch {

namespace {

using std::chrono::days;
using std::chrono::hours;
using std::chrono::months;
using std::chrono::year_month;
using std::chrono::year_month_day;

year_month to_year_month(CivilDate d) {
  const year_month_day ymd{d};
  return ymd.year() / ymd.month();
}

CivilDate first_bin_day(CivilDate d, Granularity g) {
  switch (g) {
    case Granularity::kWeek: {
      const std::chrono::weekday wd{d};
      return d - days(wd.iso_encoding() - 1);
    }
    case Granularity::kMonth:
      return CivilDate{to_year_month(d) / 1};
    default:
      return d;
  }
}

LocalTime advance(LocalTime t, Granularity g) {
  switch (g) {
    case Granularity::kHour: return t + hours(1);
    case Granularity::kDay: return t + days(1);
    case Granularity::kWeek: return t + days(7);
    case Granularity::kMonth: {
      const CivilDate d = std::chrono::floor<days>(t);
      return LocalTime{CivilDate{(to_year_month(d) + months(1)) / 1}};
    }
  }
  return t;
}

std::size_t bin_index(LocalTime local, LocalTime start, Granularity g) {
  switch (g) {
    case Granularity::kHour:
      return static_cast<std::size_t>(std::chrono::floor<hours>(local - start).count());
    case Granularity::kDay:
      return static_cast<std::size_t>(
          (std::chrono::floor<days>(local) - std::chrono::floor<days>(start)).count());
    case Granularity::kWeek:
      return static_cast<std::size_t>(
          (std::chrono::floor<days>(local) - std::chrono::floor<days>(start)).count() / 7);
    case Granularity::kMonth:
      return static_cast<std::size_t>(
          (to_year_month(std::chrono::floor<days>(local)) -
           to_year_month(std::chrono::floor<days>(start)))
              .count());
  }
  return 0;
}

}  // namespace

std::string_view granularity_name(Granularity g) {
  switch (g) {
    case Granularity::kHour: return "hour";
    case Granularity::kDay: return "day";
    case Granularity::kWeek: return "week";
    case Granularity::kMonth: return "month";
  }
  return "day";
}

Granularity parse_granularity(std::string_view name) {
  if (name == "hour") return Granularity::kHour;
  if (name == "day") return Granularity::kDay;
  if (name == "week") return Granularity::kWeek;
  if (name == "month") return Granularity::kMonth;
  throw DataError("unknown granularity '" + std::string(name) + "'");
}

std::vector<AggregateRecord> bin(std::span<const PolarityObservation> posts, Granularity g,
                                 UtcOffset offset, DateWindow window) {
  if (window.first > window.end) throw DataError("aggregation window starts after it ends");
  const LocalTime lo{window.first};
  const LocalTime hi{window.end};

  std::vector<AggregateRecord> out;
  for (LocalTime t{first_bin_day(window.first, g)}; t < hi; t = advance(t, g)) {
    AggregateRecord r;
    r.bin_start = t;
    r.granularity = g;
    out.push_back(r);
  }
  if (out.empty()) return out;

  const LocalTime start = out.front().bin_start;
  for (const auto& p : posts) {
    const LocalTime local = offset.to_local(p.ts);
    if (local < lo || local >= hi) continue;
    AggregateRecord& r = out[bin_index(local, start, g)];
    ++r.total;
    switch (p.polarity) {
      case Polarity::kNeutral: ++r.neutral; break;
      case Polarity::kPositive: ++r.sentiment, ++r.positive; break;
      case Polarity::kNegative: ++r.sentiment, ++r.negative; break;
    }
  }
  return out;
}

std::vector<AggregateRecord> bin(std::span<const StoredPost> posts, Granularity g,
                                 UtcOffset offset, DateWindow window) {
  std::vector<PolarityObservation> obs;
  obs.reserve(posts.size());
  for (const auto& p : posts) obs.push_back({p.post.ts, p.score.polarity});
  return bin(obs, g, offset, window);
}

std::string_view count_field_name(CountField f) {
  switch (f) {
    case CountField::kTotal: return "total";
    case CountField::kNeutral: return "neutral";
    case CountField::kSentiment: return "sentiment";
    case CountField::kPositive: return "positive";
    case CountField::kNegative: return "negative";
  }
  return "total";
}

CountField parse_count_field(std::string_view name) {
  if (name == "total") return CountField::kTotal;
  if (name == "neutral") return CountField::kNeutral;
  if (name == "sentiment") return CountField::kSentiment;
  if (name == "positive") return CountField::kPositive;
  if (name == "negative") return CountField::kNegative;
  throw DataError("unknown count field '" + std::string(name) + "'");
}

std::int64_t field_value(const AggregateRecord& r, CountField f) {
  switch (f) {
    case CountField::kTotal: return r.total;
    case CountField::kNeutral: return r.neutral;
    case CountField::kSentiment: return r.sentiment;
    case CountField::kPositive: return r.positive;
    case CountField::kNegative: return r.negative;
  }
  return 0;
}

SeriesSummary summarize(std::span<const AggregateRecord> series, CountField field,
                        SdKind sd_kind) {
  if (series.empty()) throw DataError("cannot summarize an empty series");
  if (sd_kind == SdKind::kSample && series.size() < 2) {
    throw DataError("sample standard deviation needs at least two bins");
  }
  SeriesSummary s;
  s.n_bins = series.size();
  s.min = {field_value(series.front(), field), series.front().bin_start};
  s.max = s.min;
  double sum = 0.0;
  for (const auto& r : series) {
    const std::int64_t v = field_value(r, field);
    sum += static_cast<double>(v);
    if (v < s.min.value) s.min = {v, r.bin_start};
    if (v > s.max.value) s.max = {v, r.bin_start};
  }
  s.mean = sum / static_cast<double>(series.size());
  double ss = 0.0;
  for (const auto& r : series) {
    const double d = static_cast<double>(field_value(r, field)) - s.mean;
    ss += d * d;
  }
  const double denom = static_cast<double>(series.size() - (sd_kind == SdKind::kSample ? 1 : 0));
  s.sd = std::sqrt(ss / denom);
  return s;
}

void write_aggregate_csv(std::ostream& out, std::span<const AggregateRecord> series,
                         UtcOffset offset) {
  out << "bin_start,granularity,total,neutral,sentiment,positive,negative\n";
  for (const auto& r : series) {
    out << format_local(r.bin_start, offset) << ',' << granularity_name(r.granularity) << ','
        << r.total << ',' << r.neutral << ',' << r.sentiment << ',' << r.positive << ','
        << r.negative << '\n';
  }
}

}  // namespace taalwatch
