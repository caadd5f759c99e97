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

#include "taalwatch/export.h"

#include "numfmt.h"
#include "taalwatch/errors.h"
#include "taalwatch/trend.h"

namespace taalwatch {

Figure parse_figure(std::string_view name) {
  if (name == "fig4") return Figure::kFig4;
  if (name == "fig6") return Figure::kFig6;
  if (name == "fig7") return Figure::kFig7;
  if (name == "fig8") return Figure::kFig8;
  throw DataError("unknown figure '" + std::string(name) + "' (fig4, fig6, fig7, fig8)");
}

std::string_view figure_name(Figure f) {
  switch (f) {
    case Figure::kFig4: return "fig4";
    case Figure::kFig6: return "fig6";
    case Figure::kFig7: return "fig7";
    case Figure::kFig8: return "fig8";
  }
  return "fig4";
}

void write_figure(std::ostream& out, Figure figure, std::span<const AggregateRecord> daily,
                  std::span<const EventRecord> events, int window_days) {
  if (daily.empty()) throw DataError("export window contains no days");
  switch (figure) {
    case Figure::kFig4:
      out << "date,total\n";
      for (const auto& r : daily) out << format_date(r.date()) << ',' << r.total << '\n';
      return;
    case Figure::kFig6:
      out << "date,neutral,sentiment,total\n";
      for (const auto& r : daily) {
        out << format_date(r.date()) << ',' << r.neutral << ',' << r.sentiment << ',' << r.total
            << '\n';
      }
      return;
    case Figure::kFig7:
      out << "date,positive,negative\n";
      for (const auto& r : daily) {
        out << format_date(r.date()) << ',' << r.positive << ',' << r.negative << '\n';
      }
      return;
    case Figure::kFig8:
      break;
  }

  using internal::fmt_double;
  const CivilDate first = daily.front().date();
  const CivilDate last = daily.back().date();
  std::size_t written = 0;
  out << "event,date,W,negative,positive,fit_negative,fit_positive\n";
  for (const auto& ev : events) {
    if (ev.date - std::chrono::days(window_days) < first || ev.date > last) continue;
    const PreEventTrend trend = pre_event_trend(daily, ev, window_days);
    const CivilDate start = ev.date - std::chrono::days(window_days);
    const auto offset = (start - first).count();
    for (int w = 0; w <= window_days; ++w) {
      const AggregateRecord& r = daily[static_cast<std::size_t>(offset + w)];
      out << format_date(ev.date) << ',' << format_date(r.date()) << ',' << w << ','
          << r.negative << ',' << r.positive << ','
          << fmt_double(trend.fit_neg.intercept + trend.fit_neg.slope * w) << ','
          << fmt_double(trend.fit_pos.intercept + trend.fit_pos.slope * w) << '\n';
    }
    ++written;
  }
  if (written == 0) throw DataError("no event's pre-event window lies inside the export window");
}

}  // namespace taalwatch
