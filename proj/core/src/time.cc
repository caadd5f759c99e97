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

#include "taalwatch/time.h"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <optional>

#include "taalwatch/errors.h"

namespace taalwatch {

namespace {

using std::chrono::days;
using std::chrono::hours;
using std::chrono::minutes;
using std::chrono::seconds;

constexpr minutes kMaxOffset = hours(14);

// Parses exactly `width` decimal digits at text[pos].
bool digits(std::string_view text, std::size_t pos, std::size_t width, int& out) {
  if (pos + width > text.size()) return false;
  for (std::size_t i = pos; i < pos + width; ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + width, out);
  return ec == std::errc() && ptr == text.data() + pos + width;
}

std::optional<std::chrono::year_month_day> parse_ymd(std::string_view text) {
  int y, m, d;
  if (text.size() < 10 || !digits(text, 0, 4, y) || text[4] != '-' || !digits(text, 5, 2, m) ||
      text[7] != '-' || !digits(text, 8, 2, d)) {
    return std::nullopt;
  }
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month(static_cast<unsigned>(m)),
                                  std::chrono::day(static_cast<unsigned>(d))};
  if (!ymd.ok()) return std::nullopt;
  return ymd;
}

// "+HH:MM", "+HHMM" or "+HH".
std::optional<minutes> parse_numeric_offset(std::string_view text) {
  if (text.empty() || (text[0] != '+' && text[0] != '-')) return std::nullopt;
  const int sign = text[0] == '-' ? -1 : 1;
  int h = 0, m = 0;
  if (!digits(text, 1, 2, h)) return std::nullopt;
  if (text.size() == 3) {
    // hours only
  } else if (text.size() == 6 && text[3] == ':') {
    if (!digits(text, 4, 2, m)) return std::nullopt;
  } else if (text.size() == 5) {
    if (!digits(text, 3, 2, m)) return std::nullopt;
  } else {
    return std::nullopt;
  }
  if (m >= 60) return std::nullopt;
  const minutes total = sign * (hours(h) + minutes(m));
  if (total > kMaxOffset || total < -kMaxOffset) return std::nullopt;
  return total;
}

std::string two(int v) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02d", v);
  return buf;
}

}  // namespace

UtcOffset::UtcOffset(std::chrono::minutes offset) : offset_(offset) {
  if (offset > kMaxOffset || offset < -kMaxOffset) {
    throw DataError("UTC offset out of range: " + std::to_string(offset.count()) + " minutes");
  }
}

UtcOffset UtcOffset::parse(std::string_view text) {
  if (text == "Z" || text == "UTC" || text == "utc" || text == "Etc/UTC") return UtcOffset();
  if (text == "Asia/Manila" || text == "PHT" || text == "PST8") return manila();
  if (auto m = parse_numeric_offset(text)) return UtcOffset(*m);
  throw DataError("unsupported timezone '" + std::string(text) +
                  "' (use Z, UTC, +HH:MM or Asia/Manila)");
}

std::string UtcOffset::to_string() const {
  const auto total = offset_.count();
  const auto mag = std::abs(total);
  return std::string(total < 0 ? "-" : "+") + two(static_cast<int>(mag / 60)) + ":" +
         two(static_cast<int>(mag % 60));
}

Timestamp parse_timestamp(std::string_view text) {
  const auto fail = [&]() -> Timestamp {
    throw DataError("invalid ISO-8601 timestamp '" + std::string(text) + "'");
  };
  const auto ymd = parse_ymd(text);
  if (!ymd || text.size() < 19 || (text[10] != 'T' && text[10] != 't')) return fail();
  int hh, mm, ss;
  if (!digits(text, 11, 2, hh) || text[13] != ':' || !digits(text, 14, 2, mm) ||
      text[16] != ':' || !digits(text, 17, 2, ss)) {
    return fail();
  }
  if (hh > 23 || mm > 59 || ss > 59) return fail();
  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t frac_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == frac_start) return fail();
  }
  const std::string_view zone = text.substr(pos);
  minutes offset{0};
  if (zone == "Z" || zone == "z") {
    offset = minutes(0);
  } else if (auto m = parse_numeric_offset(zone)) {
    offset = *m;
  } else {
    return fail();
  }
  const LocalTime local = LocalTime{std::chrono::local_days(*ymd)} + hours(hh) + minutes(mm) +
                          seconds(ss);
  return Timestamp{local.time_since_epoch() - offset};
}

std::string format_local(LocalTime t, UtcOffset offset) {
  const auto day = std::chrono::floor<days>(t);
  const std::chrono::year_month_day ymd{day};
  const std::chrono::hh_mm_ss hms{t - day};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf + offset.to_string();
}

std::string format_timestamp(Timestamp t, UtcOffset offset) {
  return format_local(offset.to_local(t), offset);
}

CivilDate parse_date(std::string_view text) {
  const auto ymd = parse_ymd(text);
  if (!ymd || text.size() != 10) {
    throw DataError("invalid ISO-8601 date '" + std::string(text) + "'");
  }
  return std::chrono::local_days(*ymd);
}

std::string format_date(CivilDate d) {
  const std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

}  // namespace taalwatch
