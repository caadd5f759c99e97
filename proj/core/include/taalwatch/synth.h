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

#ifndef TAALWATCH_SYNTH_H_
#define TAALWATCH_SYNTH_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "taalwatch/geo.h"
#include "taalwatch/micropost.h"
#include "taalwatch/time.h"

namespace taalwatch {

// A linear pre-event ramp. On the ramp_days + 1 days ending on `date`,
// with W = 0 on date - ramp_days, the expected daily negative count is
// neg_intercept + neg_slope * W and likewise for positives. Intercepts
// default to the baseline expected count of that class.
struct SynthEvent {
  CivilDate date;
  double neg_slope = 0.0;
  double pos_slope = 0.0;
  int ramp_days = 6;
  std::optional<double> neg_intercept;
  std::optional<double> pos_intercept;
};

struct SynthConfig {
  std::uint64_t seed = 1;
  CivilDate start = CivilDate{std::chrono::year{2013} / 1 / 27};
  int days = 369;
  double posts_per_day_mean = 1000.0;
  double baseline_pos_rate = 0.34;
  double baseline_neg_rate = 0.092;
  std::vector<SynthEvent> events;
  // Per-class Gaussian noise sd as a fraction of that day's expected count.
  double noise_sd = 0.0;
  GeoFence fence = GeoFence::taal_default();
  UtcOffset offset = UtcOffset::manila();
  std::string id_prefix = "syn";
  int users = 2000;
};

// Throws DataError when rates are outside [0, 1] or sum above 1, a ramp is
// shorter than one day, noise_sd < 0, days < 0 or the mean is negative.
void validate(const SynthConfig& cfg);

// Flat "key = value" text; '#' starts a comment. Keys mirror SynthConfig
// (seed, start, days, posts_per_day_mean, baseline_pos_rate,
// baseline_neg_rate, noise_sd, center_lat, center_lon, radius_km, tz,
// id_prefix, users). Each "event" line holds
// "date,neg_slope,pos_slope,ramp_days[,neg_intercept,pos_intercept]".
SynthConfig parse_synth_config(std::istream& in);

struct DayPlan {
  CivilDate date;
  std::int64_t positive = 0;
  std::int64_t negative = 0;
  std::int64_t neutral = 0;

  std::int64_t total() const { return positive + negative + neutral; }
};

// Per-day class counts after noise, truncation at zero and rounding.
std::vector<DayPlan> plan_days(const SynthConfig& cfg);

// Posts for every day in plan order: timestamps uniform over the civil day
// and sorted, points uniform over the fence disc, ids sequential.
std::vector<Micropost> generate_posts(const SynthConfig& cfg);

// Writes generate_posts() as a replay file (one raw JSON record per line).
void generate(const SynthConfig& cfg, std::ostream& out);

// Fixed text pools whose polarity under the bundled lexicon is known.
struct TemplatePools {
  std::vector<std::string> positive;
  std::vector<std::string> negative;
  std::vector<std::string> neutral;

  static const TemplatePools& bundled();
};

// Small deterministic generator (splitmix64) so streams are identical on
// every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, 1).
  double uniform();
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  // Standard normal (Box-Muller).
  double normal();

 private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

}  // namespace taalwatch

#endif  // TAALWATCH_SYNTH_H_
