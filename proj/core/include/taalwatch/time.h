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

#ifndef TAALWATCH_TIME_H_
#define TAALWATCH_TIME_H_

#include <chrono>
#include <compare>
#include <string>
#include <string_view>

namespace taalwatch {

// An instant with second precision.
using Timestamp = std::chrono::sys_seconds;
// Wall-clock time in some fixed UTC offset.
using LocalTime = std::chrono::local_seconds;
// A calendar date in some fixed UTC offset.
using CivilDate = std::chrono::local_days;

// A fixed offset from UTC. Named zones are not supported except for the
// aliases accepted by parse(), all of which have no daylight saving.
class UtcOffset {
 public:
  constexpr UtcOffset() = default;
  explicit UtcOffset(std::chrono::minutes offset);

  // Accepts "Z", "UTC", "+08:00", "+0800", "-05:30", "Asia/Manila", "PHT".
  static UtcOffset parse(std::string_view text);
  static UtcOffset manila() { return UtcOffset(std::chrono::hours(8)); }

  std::chrono::minutes minutes() const { return offset_; }

  LocalTime to_local(Timestamp t) const { return LocalTime{t.time_since_epoch() + offset_}; }
  Timestamp to_utc(LocalTime t) const { return Timestamp{t.time_since_epoch() - offset_}; }

  // "+08:00" style; UTC renders as "+00:00".
  std::string to_string() const;

  friend auto operator<=>(const UtcOffset&, const UtcOffset&) = default;

 private:
  std::chrono::minutes offset_{0};
};

// ISO-8601 "YYYY-MM-DDTHH:MM:SS[.fff](Z|+HH:MM|+HHMM)". The offset is
// mandatory. Fractional seconds are truncated. Throws DataError.
Timestamp parse_timestamp(std::string_view text);

// Renders as "YYYY-MM-DDTHH:MM:SS+HH:MM" in the given offset.
std::string format_timestamp(Timestamp t, UtcOffset offset);
std::string format_local(LocalTime t, UtcOffset offset);

// "YYYY-MM-DD". Throws DataError.
CivilDate parse_date(std::string_view text);
std::string format_date(CivilDate d);

inline CivilDate civil_date(Timestamp t, UtcOffset offset) {
  return std::chrono::floor<std::chrono::days>(offset.to_local(t));
}

// Instant of local midnight starting the given date.
inline Timestamp start_of_day(CivilDate d, UtcOffset offset) {
  return offset.to_utc(LocalTime{d});
}

}  // namespace taalwatch

#endif  // TAALWATCH_TIME_H_
