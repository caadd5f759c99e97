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

#include "taalwatch/synth.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>

#include "taalwatch/errors.h"
#include "taalwatch/ingest.h"

namespace taalwatch {

namespace bundled {
extern const std::string_view k_synth_templates_tsv;
}  // namespace bundled

namespace {

constexpr std::uint64_t kPostStreamSalt = 0x5DEECE66DULL;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw DataError("synth config: '" + key + "' is not a number: " + v);
  }
  return out;
}

std::int64_t to_int(const std::string& key, const std::string& v) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw DataError("synth config: '" + key + "' is not an integer: " + v);
  }
  return out;
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

SynthEvent parse_event(const std::string& value) {
  const auto parts = split_commas(value);
  if (parts.size() != 4 && parts.size() != 6) {
    throw DataError("synth config: event needs date,neg_slope,pos_slope,ramp_days"
                    "[,neg_intercept,pos_intercept]: " + value);
  }
  SynthEvent ev;
  ev.date = parse_date(parts[0]);
  ev.neg_slope = to_double("event", parts[1]);
  ev.pos_slope = to_double("event", parts[2]);
  ev.ramp_days = static_cast<int>(to_int("event", parts[3]));
  if (parts.size() == 6) {
    ev.neg_intercept = to_double("event", parts[4]);
    ev.pos_intercept = to_double("event", parts[5]);
  }
  return ev;
}

std::int64_t noisy_count(double mean, double noise_sd, SplitMix64& rng) {
  mean = std::max(mean, 0.0);
  const double z = rng.normal();
  const double value = mean + noise_sd * mean * z;
  return static_cast<std::int64_t>(std::llround(std::max(value, 0.0)));
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

double SplitMix64::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

void validate(const SynthConfig& cfg) {
  if (cfg.days < 0) throw DataError("synth: days must be >= 0");
  if (!(cfg.posts_per_day_mean >= 0.0)) throw DataError("synth: posts_per_day_mean must be >= 0");
  if (!(cfg.baseline_pos_rate >= 0.0 && cfg.baseline_pos_rate <= 1.0) ||
      !(cfg.baseline_neg_rate >= 0.0 && cfg.baseline_neg_rate <= 1.0)) {
    throw DataError("synth: baseline rates must lie in [0, 1]");
  }
  if (cfg.baseline_pos_rate + cfg.baseline_neg_rate > 1.0) {
    throw DataError("synth: baseline_pos_rate + baseline_neg_rate exceeds 1");
  }
  if (!(cfg.noise_sd >= 0.0)) throw DataError("synth: noise_sd must be >= 0");
  if (cfg.users < 1) throw DataError("synth: users must be >= 1");
  for (const auto& ev : cfg.events) {
    if (ev.ramp_days < 1) throw DataError("synth: event ramp_days must be >= 1");
  }
}

SynthConfig parse_synth_config(std::istream& in) {
  SynthConfig cfg;
  double center_lat = cfg.fence.center().lat();
  double center_lon = cfg.fence.center().lon();
  double radius_km = cfg.fence.radius_km();
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DataError("synth config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(to_int(key, value));
    } else if (key == "start") {
      cfg.start = parse_date(value);
    } else if (key == "days") {
      cfg.days = static_cast<int>(to_int(key, value));
    } else if (key == "posts_per_day_mean") {
      cfg.posts_per_day_mean = to_double(key, value);
    } else if (key == "baseline_pos_rate") {
      cfg.baseline_pos_rate = to_double(key, value);
    } else if (key == "baseline_neg_rate") {
      cfg.baseline_neg_rate = to_double(key, value);
    } else if (key == "noise_sd") {
      cfg.noise_sd = to_double(key, value);
    } else if (key == "center_lat") {
      center_lat = to_double(key, value);
    } else if (key == "center_lon") {
      center_lon = to_double(key, value);
    } else if (key == "radius_km") {
      radius_km = to_double(key, value);
    } else if (key == "tz") {
      cfg.offset = UtcOffset::parse(value);
    } else if (key == "id_prefix") {
      cfg.id_prefix = value;
    } else if (key == "users") {
      cfg.users = static_cast<int>(to_int(key, value));
    } else if (key == "event") {
      cfg.events.push_back(parse_event(value));
    } else {
      throw DataError("synth config line " + std::to_string(line_no) + ": unknown key '" + key +
                      "'");
    }
  }
  cfg.fence = GeoFence(GeoPoint(center_lat, center_lon), radius_km);
  validate(cfg);
  return cfg;
}

std::vector<DayPlan> plan_days(const SynthConfig& cfg) {
  validate(cfg);
  const double base_pos = cfg.posts_per_day_mean * cfg.baseline_pos_rate;
  const double base_neg = cfg.posts_per_day_mean * cfg.baseline_neg_rate;
  const double base_neu =
      cfg.posts_per_day_mean * (1.0 - cfg.baseline_pos_rate - cfg.baseline_neg_rate);

  SplitMix64 rng(cfg.seed);
  std::vector<DayPlan> plan;
  plan.reserve(static_cast<std::size_t>(cfg.days));
  for (int k = 0; k < cfg.days; ++k) {
    const CivilDate date = cfg.start + std::chrono::days(k);
    double pos = base_pos;
    double neg = base_neg;
    for (const auto& ev : cfg.events) {
      const CivilDate ramp_start = ev.date - std::chrono::days(ev.ramp_days);
      if (date < ramp_start || date > ev.date) continue;
      const double w = static_cast<double>((date - ramp_start).count());
      neg = ev.neg_intercept.value_or(base_neg) + ev.neg_slope * w;
      pos = ev.pos_intercept.value_or(base_pos) + ev.pos_slope * w;
    }
    DayPlan d;
    d.date = date;
    d.positive = noisy_count(pos, cfg.noise_sd, rng);
    d.negative = noisy_count(neg, cfg.noise_sd, rng);
    d.neutral = noisy_count(base_neu, cfg.noise_sd, rng);
    plan.push_back(d);
  }
  return plan;
}

std::vector<Micropost> generate_posts(const SynthConfig& cfg) {
  const std::vector<DayPlan> plan = plan_days(cfg);
  const TemplatePools& pools = TemplatePools::bundled();
  SplitMix64 rng(cfg.seed ^ kPostStreamSalt);
  const double radius = cfg.fence.radius_km() * (1.0 - 1e-9);

  std::size_t total = 0;
  for (const auto& d : plan) total += static_cast<std::size_t>(d.total());
  std::vector<Micropost> posts;
  posts.reserve(total);

  std::vector<int> seconds;
  std::vector<Polarity> classes;
  std::uint64_t serial = 0;
  char id_buf[32];
  for (const auto& day : plan) {
    const auto n = static_cast<std::size_t>(day.total());
    seconds.resize(n);
    for (auto& s : seconds) s = static_cast<int>(rng.below(86400));
    std::sort(seconds.begin(), seconds.end());

    classes.clear();
    classes.insert(classes.end(), static_cast<std::size_t>(day.positive), Polarity::kPositive);
    classes.insert(classes.end(), static_cast<std::size_t>(day.negative), Polarity::kNegative);
    classes.insert(classes.end(), static_cast<std::size_t>(day.neutral), Polarity::kNeutral);
    for (std::size_t i = n; i > 1; --i) std::swap(classes[i - 1], classes[rng.below(i)]);

    const Timestamp midnight = start_of_day(day.date, cfg.offset);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& pool = classes[i] == Polarity::kPositive   ? pools.positive
                         : classes[i] == Polarity::kNegative ? pools.negative
                                                             : pools.neutral;
      Micropost p;
      std::snprintf(id_buf, sizeof id_buf, "-%09llu", static_cast<unsigned long long>(++serial));
      p.id = cfg.id_prefix + id_buf;
      p.ts = midnight + std::chrono::seconds(seconds[i]);
      const double dist = radius * std::sqrt(rng.uniform());
      const double bearing = 2.0 * std::numbers::pi * rng.uniform();
      p.geo = destination(cfg.fence.center(), bearing, dist);
      p.user = "u" + std::to_string(rng.below(static_cast<std::uint64_t>(cfg.users)));
      p.text = pool[rng.below(pool.size())];
      posts.push_back(std::move(p));
    }
  }
  return posts;
}

void generate(const SynthConfig& cfg, std::ostream& out) {
  for (const auto& p : generate_posts(cfg)) out << serialize_raw_record(p, cfg.offset) << '\n';
}

const TemplatePools& TemplatePools::bundled() {
  static const TemplatePools pools = [] {
    TemplatePools t;
    std::istringstream in{std::string(bundled::k_synth_templates_tsv)};
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos) continue;
      const std::string cls = line.substr(0, tab);
      std::string text = line.substr(tab + 1);
      if (cls == "POS") {
        t.positive.push_back(std::move(text));
      } else if (cls == "NEG") {
        t.negative.push_back(std::move(text));
      } else if (cls == "NEU") {
        t.neutral.push_back(std::move(text));
      }
    }
    return t;
  }();
  return pools;
}

}  // namespace taalwatch
