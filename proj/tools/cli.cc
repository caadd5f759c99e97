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

#include "cli.h"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "taalwatch/aggregate.h"
#include "taalwatch/alert.h"
#include "taalwatch/classifier.h"
#include "taalwatch/config.h"
#include "taalwatch/errors.h"
#include "taalwatch/export.h"
#include "taalwatch/ingest.h"
#include "taalwatch/lexicon.h"
#include "taalwatch/store.h"
#include "taalwatch/synth.h"
#include "taalwatch/trend.h"

namespace taalwatch::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// Flags that apply to every subcommand.
struct GlobalFlags {
  std::string config;
  std::string store;
  std::string tz;
  std::string lexicon;
  std::string cos;
  std::string events;
};

struct FenceFlags {
  std::optional<double> lat;
  std::optional<double> lon;
  std::optional<double> radius;
};

struct RangeFlags {
  std::string from;
  std::string to;
};

void add_fence_flags(CLI::App* cmd, FenceFlags& f) {
  cmd->add_option("--center-lat", f.lat, "Geofence centre latitude (default 14.0)");
  cmd->add_option("--center-lon", f.lon, "Geofence centre longitude (default 121.0)");
  cmd->add_option("--radius-km", f.radius, "Geofence radius in km (default 10.0)");
}

void add_range_flags(CLI::App* cmd, RangeFlags& r) {
  cmd->add_option("--from", r.from, "First civil date (YYYY-MM-DD), inclusive");
  cmd->add_option("--to", r.to, "Last civil date (YYYY-MM-DD), inclusive");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

PipelineConfig resolve_config(const GlobalFlags& g) {
  PipelineConfig cfg;
  if (!g.config.empty()) {
    auto in = open_input(g.config);
    cfg = parse_pipeline_config(in);
  }
  if (!g.store.empty()) cfg.store_path = g.store;
  if (!g.tz.empty()) cfg.offset = UtcOffset::parse(g.tz);
  if (!g.lexicon.empty()) cfg.lexicon_path = g.lexicon;
  if (!g.cos.empty()) cfg.cos_path = g.cos;
  if (!g.events.empty()) cfg.events_path = g.events;
  check_paths(cfg);
  return cfg;
}

GeoFence resolve_fence(const PipelineConfig& cfg, const FenceFlags& f) {
  return GeoFence(GeoPoint(f.lat.value_or(cfg.fence.center().lat()),
                           f.lon.value_or(cfg.fence.center().lon())),
                  f.radius.value_or(cfg.fence.radius_km()));
}

Lexicon load_lexicon_for(const PipelineConfig& cfg) {
  if (!cfg.lexicon_path) return Lexicon::bundled();
  auto in = open_input(cfg.lexicon_path->string());
  return load_lexicon(in).lexicon;
}

CosPhraseList load_cos_for(const PipelineConfig& cfg) {
  if (!cfg.cos_path) return CosPhraseList::bundled();
  auto in = open_input(cfg.cos_path->string());
  return load_cos_phrases(in);
}

std::vector<EventRecord> load_events_for(const PipelineConfig& cfg,
                                         const std::string& override_path = {}) {
  if (!override_path.empty()) {
    auto in = open_input(override_path);
    return load_events(in);
  }
  if (!cfg.events_path) return bundled_events();
  auto in = open_input(cfg.events_path->string());
  return load_events(in);
}

// Civil date window from flags, defaulting to the store's extent.
DateWindow resolve_window(const Store& store, const RangeFlags& r) {
  std::optional<CivilDate> first;
  std::optional<CivilDate> last;
  if (!r.from.empty()) first = parse_date(r.from);
  if (!r.to.empty()) last = parse_date(r.to);
  if (!first || !last) {
    const auto extent = store.extent();
    if (!extent) throw DataError("store is empty; pass --from and --to");
    if (!first) first = civil_date(extent->first, store.offset());
    if (!last) last = civil_date(extent->second, store.offset());
  }
  if (*last < *first) throw DataError("--to is before --from");
  return DateWindow{*first, *last + std::chrono::days(1)};
}

Store open_store_readonly(const PipelineConfig& cfg) {
  if (!std::filesystem::exists(cfg.store_path)) {
    throw IoError("store not found: " + cfg.store_path.string());
  }
  return Store::open_readonly(cfg.store_path);
}

// Runs `write` against the --out file (atomically) or `out` when empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  AtomicFileWriter writer(path);
  write(writer.stream());
  writer.commit();
}

void print_report(std::ostream& out, const IngestReport& r, UtcOffset offset) {
  out << "accepted," << r.accepted << '\n'
      << "rejected_out_of_fence," << r.rejected_out_of_fence << '\n'
      << "rejected_malformed," << r.rejected_malformed << '\n'
      << "duplicates," << r.duplicates << '\n';
  if (r.window) {
    out << "window_first," << format_timestamp(r.window->first, offset) << '\n'
        << "window_last," << format_timestamp(r.window->second, offset) << '\n';
  }
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geofenced micropost sentiment pipeline with fish-kill early warning",
               "taalwatch"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  GlobalFlags g;
  app.add_option("--config", g.config, "Pipeline config file (key = value)")
      ->envname("TAALWATCH_CONFIG");
  app.add_option("--store", g.store, "Store file")->envname("TAALWATCH_STORE");
  app.add_option("--tz", g.tz, "Store UTC offset for new stores (default +08:00)")
      ->envname("TAALWATCH_TZ");
  app.add_option("--lexicon", g.lexicon, "Lexicon TSV (default: bundled)")
      ->envname("TAALWATCH_LEXICON");
  app.add_option("--cos", g.cos, "COS phrase list (default: bundled)")->envname("TAALWATCH_COS");
  app.add_option("--events", g.events, "Events CSV (default: bundled)")
      ->envname("TAALWATCH_EVENTS");

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic replay file");
  std::string synth_config;
  std::string synth_out;
  std::optional<std::uint64_t> synth_seed;
  synth_cmd->add_option("--config", synth_config, "Synth config file")->required();
  synth_cmd->add_option("--out", synth_out, "Replay file to write")->required();
  synth_cmd->add_option("--seed", synth_seed, "Override the config seed");

  // ingest
  auto* ingest_cmd = app.add_subcommand("ingest", "Ingest a replay file or HTTP JSON source");
  std::string source;
  std::string since_id;
  std::string study_from;
  std::string study_to;
  FenceFlags ingest_fence;
  ingest_cmd->add_option("--source", source, "Replay file path or http:// URL")->required();
  ingest_cmd->add_option("--since-id", since_id, "Only fetch records newer than this id (HTTP)");
  ingest_cmd->add_option("--study-from", study_from, "Study window first date");
  ingest_cmd->add_option("--study-to", study_to, "Study window last date");
  add_fence_flags(ingest_cmd, ingest_fence);

  // watch
  auto* watch_cmd = app.add_subcommand("watch", "Poll an HTTP JSON source on a fixed cadence");
  std::string watch_source;
  std::optional<int> watch_interval;
  int max_polls = 0;
  FenceFlags watch_fence;
  watch_cmd->add_option("--source", watch_source, "http:// URL")->required();
  watch_cmd->add_option("--since-id", since_id, "Start after this id");
  watch_cmd->add_option("--interval-s", watch_interval, "Seconds between polls (default 900)");
  watch_cmd->add_option("--max-polls", max_polls, "Stop after this many polls (0 = forever)");
  add_fence_flags(watch_cmd, watch_fence);

  // score
  auto* score_cmd = app.add_subcommand("score", "Score one text");
  std::string score_text;
  score_cmd->add_option("--text", score_text, "Text to score")->required();

  // aggregate
  auto* agg_cmd = app.add_subcommand("aggregate", "Bin stored posts into polarity counts");
  std::string granularity = "day";
  RangeFlags agg_range;
  std::string agg_out;
  agg_cmd->add_option("--granularity", granularity, "hour, day, week or month")
      ->check(CLI::IsMember({"hour", "day", "week", "month"}));
  add_range_flags(agg_cmd, agg_range);
  agg_cmd->add_option("--out", agg_out, "CSV file (default stdout)");

  // trend
  auto* trend_cmd = app.add_subcommand("trend", "Fit a linear trend to a daily count series");
  std::string field = "negative";
  std::string trend_event;
  int trend_window = 6;
  RangeFlags trend_range;
  std::string trend_out;
  trend_cmd->add_option("--field", field, "negative, positive or total")
      ->check(CLI::IsMember({"negative", "positive", "total", "neutral", "sentiment"}));
  trend_cmd->add_option("--event", trend_event, "Fit the pre-event window ending on this date");
  trend_cmd->add_option("--window", trend_window, "Pre-event window in days");
  add_range_flags(trend_cmd, trend_range);
  trend_cmd->add_option("--out", trend_out, "CSV file (default stdout)");

  // alert
  auto* alert_cmd = app.add_subcommand("alert", "Run the early-warning detector");
  RangeFlags alert_range;
  std::string alert_events;
  std::optional<double> alpha;
  std::optional<int> alert_window;
  std::optional<std::int64_t> min_sentiment;
  bool no_crossover = false;
  std::string alert_out;
  add_range_flags(alert_cmd, alert_range);
  alert_cmd->add_option("--events", alert_events, "Events CSV to score alerts against");
  alert_cmd->add_option("--alpha", alpha, "Trend significance level (default 0.05)");
  alert_cmd->add_option("--window", alert_window, "Trailing window in days (default 6)");
  alert_cmd->add_option("--min-daily-sentiment", min_sentiment,
                        "Skip days with fewer sentiment posts (default 50)");
  alert_cmd->add_flag("--no-crossover", no_crossover, "Do not require a crossover for WARNING");
  alert_cmd->add_option("--out", alert_out, "CSV file (default stdout)");

  // export
  auto* export_cmd = app.add_subcommand("export", "Write plot data for a figure");
  std::string figure;
  RangeFlags export_range;
  std::string export_events;
  int export_window = 6;
  std::string export_out;
  export_cmd->add_option("--figure", figure, "fig4, fig6, fig7 or fig8")
      ->required()
      ->check(CLI::IsMember({"fig4", "fig6", "fig7", "fig8"}));
  add_range_flags(export_cmd, export_range);
  export_cmd->add_option("--events", export_events, "Events CSV for fig8");
  export_cmd->add_option("--window", export_window, "Pre-event window for fig8");
  export_cmd->add_option("--out", export_out, "Output file (default stdout)");

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "Check fence membership and invariants");
  FenceFlags audit_fence;
  add_fence_flags(audit_cmd, audit_fence);

  // finalize-day
  auto* finalize_cmd =
      app.add_subcommand("finalize-day", "Close a civil day to further ingestion");
  std::string finalize_date;
  finalize_cmd->add_option("--date", finalize_date, "Civil date (YYYY-MM-DD)")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      throw UsageError(e.what());
    }

    const PipelineConfig cfg = resolve_config(g);

    if (*synth_cmd) {
      auto in = open_input(synth_config);
      SynthConfig sc = parse_synth_config(in);
      if (synth_seed) sc.seed = *synth_seed;
      emit(synth_out, out, [&](std::ostream& os) { generate(sc, os); });
      return kOk;
    }

    if (*ingest_cmd) {
      SourceConfig sc;
      sc.kind = source.starts_with("http://") || source.starts_with("https://")
                    ? SourceKind::kHttpJson
                    : SourceKind::kReplayFile;
      sc.location = source;
      sc.fence = resolve_fence(cfg, ingest_fence);
      sc.poll_interval = cfg.poll_interval;
      if (!study_from.empty() || !study_to.empty()) {
        if (study_from.empty() || study_to.empty()) {
          throw UsageError("--study-from and --study-to go together");
        }
        sc.window = StudyWindow{parse_date(study_from), parse_date(study_to)};
      }
      // Read the whole source before touching the store.
      const std::vector<std::string> records =
          sc.kind == SourceKind::kHttpJson
              ? poll_http(sc, since_id.empty() ? std::nullopt : std::optional(since_id))
              : read_replay(sc.location);
      const Lexicon lexicon = load_lexicon_for(cfg);
      const CosPhraseList cos = load_cos_for(cfg);
      Store store = Store::open(cfg.store_path, cfg.offset);
      const IngestReport report = ingest_batch(records, sc, lexicon, cos, store);
      print_report(out, report, store.offset());
      return kOk;
    }

    if (*watch_cmd) {
      SourceConfig sc;
      sc.kind = SourceKind::kHttpJson;
      sc.location = watch_source;
      sc.fence = resolve_fence(cfg, watch_fence);
      sc.poll_interval =
          watch_interval ? std::chrono::seconds(*watch_interval) : cfg.poll_interval;
      validate(sc);
      const Lexicon lexicon = load_lexicon_for(cfg);
      const CosPhraseList cos = load_cos_for(cfg);
      Store store = Store::open(cfg.store_path, cfg.offset);
      std::optional<std::string> cursor;
      if (!since_id.empty()) cursor = since_id;
      for (int poll = 1; max_polls == 0 || poll <= max_polls; ++poll) {
        try {
          const auto records = poll_http(sc, cursor);
          const IngestReport report = ingest_batch(records, sc, lexicon, cos, store);
          if (report.last_seen_id) cursor = report.last_seen_id;
          out << "poll," << poll << ",accepted," << report.accepted << ",duplicates,"
              << report.duplicates << ",out_of_fence," << report.rejected_out_of_fence
              << ",malformed," << report.rejected_malformed << '\n';
        } catch (const IngestError&) {
          throw;
        } catch (const Error& e) {
          err << "taalwatch: poll " << poll << " failed: " << one_line(e.what()) << '\n';
        }
        out.flush();
        if (max_polls != 0 && poll == max_polls) break;
        std::this_thread::sleep_for(sc.poll_interval);
      }
      return kOk;
    }

    if (*score_cmd) {
      const SentimentScore s = score(load_lexicon_for(cfg), load_cos_for(cfg), score_text);
      out << "s_mean,polarity,n_tokens,n_matched,cos_hits\n"
          << s.s_mean() << ',' << polarity_name(s.polarity) << ',' << s.n_tokens << ','
          << s.n_matched << ',';
      for (std::size_t i = 0; i < s.cos_hits.size(); ++i) out << (i ? ";" : "") << s.cos_hits[i];
      out << '\n';
      return kOk;
    }

    if (*agg_cmd) {
      const Store store = open_store_readonly(cfg);
      const DateWindow window = resolve_window(store, agg_range);
      const auto series =
          bin(store.posts(), parse_granularity(granularity), store.offset(), window);
      emit(agg_out, out,
           [&](std::ostream& os) { write_aggregate_csv(os, series, store.offset()); });
      return kOk;
    }

    if (*trend_cmd) {
      const Store store = open_store_readonly(cfg);
      const CountField f = parse_count_field(field);
      TrendFit fit;
      if (!trend_event.empty()) {
        const CivilDate ev = parse_date(trend_event);
        RangeFlags range = trend_range;
        if (range.from.empty()) range.from = format_date(ev - std::chrono::days(trend_window));
        if (range.to.empty()) range.to = format_date(ev);
        const auto daily =
            bin(store.posts(), Granularity::kDay, store.offset(), resolve_window(store, range));
        fit = pre_event_fit(daily, f, ev, trend_window);
      } else {
        const auto daily = bin(store.posts(), Granularity::kDay, store.offset(),
                               resolve_window(store, trend_range));
        fit = full_period_trend(daily, f);
      }
      emit(trend_out, out, [&](std::ostream& os) {
        write_trend_csv_header(os);
        write_trend_csv_row(os, fit);
      });
      return kOk;
    }

    if (*alert_cmd) {
      const Store store = open_store_readonly(cfg);
      AlertConfig ac = cfg.alert;
      if (alpha) ac.alpha = *alpha;
      if (alert_window) ac.window_days = *alert_window;
      if (min_sentiment) ac.min_daily_sentiment = *min_sentiment;
      if (no_crossover) ac.require_crossover = false;
      const auto daily = bin(store.posts(), Granularity::kDay, store.offset(),
                             resolve_window(store, alert_range));
      const auto alerts = evaluate(daily, ac);
      const auto events = load_events_for(cfg, alert_events);
      const auto report = co_occurrence(alerts, events);
      emit(alert_out, out, [&](std::ostream& os) {
        write_alert_csv(os, alerts);
        write_co_occurrence_block(os, report, events, daily);
      });
      return kOk;
    }

    if (*export_cmd) {
      const Store store = open_store_readonly(cfg);
      const DateWindow window = resolve_window(store, export_range);
      const auto daily = bin(store.posts(), Granularity::kDay, store.offset(), window);
      const auto events = load_events_for(cfg, export_events);
      const Figure fig = parse_figure(figure);
      // Render first so a failure never leaves a file behind.
      std::ostringstream buffer;
      write_figure(buffer, fig, daily, events, export_window);
      emit(export_out, out, [&](std::ostream& os) { os << buffer.str(); });
      return kOk;
    }

    if (*audit_cmd) {
      const Store store = open_store_readonly(cfg);
      const GeoFence fence = resolve_fence(cfg, audit_fence);
      std::size_t outside = 0;
      std::size_t bad_day = 0;
      std::size_t bad_score = 0;
      for (const auto& p : store.posts()) {
        if (!in_fence(p.post.geo, fence)) ++outside;
        if (p.day != civil_date(p.post.ts, store.offset())) ++bad_day;
        const auto& s = p.score;
        const bool coherent =
            (s.polarity != Polarity::kPositive || s.polarity_sum > 0) &&
            (s.polarity != Polarity::kNegative || s.polarity_sum < 0) &&
            s.n_matched <= s.n_tokens && s.n_matched >= 0 &&
            (s.polarity_sum < 0 ? -s.polarity_sum : s.polarity_sum) <= s.n_matched;
        if (!coherent) ++bad_score;
      }
      std::size_t bad_bins = 0;
      std::size_t conservation_failures = 0;
      if (const auto extent = store.extent()) {
        const CivilDate first = civil_date(extent->first, store.offset());
        const CivilDate last = civil_date(extent->second, store.offset());
        const DateWindow window{first, last + std::chrono::days(1)};
        std::optional<std::int64_t> reference;
        for (const Granularity gr :
             {Granularity::kHour, Granularity::kDay, Granularity::kWeek, Granularity::kMonth}) {
          std::int64_t total = 0;
          for (const auto& r : bin(store.posts(), gr, store.offset(), window)) {
            total += r.total;
            if (r.neutral + r.sentiment != r.total || r.positive + r.negative != r.sentiment ||
                r.neutral < 0 || r.positive < 0 || r.negative < 0) {
              ++bad_bins;
            }
          }
          if (!reference) reference = total;
          if (total != *reference) ++conservation_failures;
        }
        if (reference && *reference != static_cast<std::int64_t>(store.size())) {
          ++conservation_failures;
        }
      }
      out << "posts," << store.size() << '\n'
          << "outside_fence," << outside << '\n'
          << "day_mismatch," << bad_day << '\n'
          << "score_invariant_violations," << bad_score << '\n'
          << "bin_partition_violations," << bad_bins << '\n'
          << "conservation_violations," << conservation_failures << '\n';
      if (outside + bad_day + bad_score + bad_bins + conservation_failures > 0) {
        err << "taalwatch: error: data: audit found invariant violations\n";
        return kDataError;
      }
      return kOk;
    }

    if (*finalize_cmd) {
      Store store = Store::open(cfg.store_path, cfg.offset);
      store.finalize_day(parse_date(finalize_date));
      out << "finalized," << finalize_date << '\n';
      return kOk;
    }
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    err << "taalwatch: error: usage: " << one_line(e.what()) << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "taalwatch: error: data: " << one_line(e.what()) << '\n';
    return kDataError;
  } catch (const IoError& e) {
    err << "taalwatch: error: io: " << one_line(e.what()) << '\n';
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "taalwatch: error: io: " << one_line(e.what()) << '\n';
    return kIoError;
  }
}

}  // namespace taalwatch::cli
