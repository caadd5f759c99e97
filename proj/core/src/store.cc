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

#include "taalwatch/store.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "taalwatch/errors.h"

namespace taalwatch {

namespace bundled {
extern const std::string_view k_events_csv;
}  // namespace bundled

namespace {

using json = nlohmann::json;

constexpr std::string_view kFormatName = "taalwatch-store";

// Keeps lines in memory; used by Store::in_memory().
class MemoryRecordLog final : public RecordLog {
 public:
  void append_line(std::string_view line) override { lines_.emplace_back(line); }
  void sync() override {}

 private:
  std::vector<std::string> lines_;
};

std::string header_line(UtcOffset offset) {
  json h;
  h["format"] = kFormatName;
  h["version"] = kStoreFormatVersion;
  h["offset"] = offset.to_string();
  return h.dump();
}

UtcOffset parse_header(std::string_view line, const std::filesystem::path& origin) {
  json h;
  try {
    h = json::parse(line);
  } catch (const json::exception&) {
    throw DataError(origin.string() + ": not a taalwatch store (unreadable header)");
  }
  if (!h.is_object() || h.value("format", "") != kFormatName) {
    throw DataError(origin.string() + ": not a taalwatch store");
  }
  const int version = h.value("version", 0);
  if (version != kStoreFormatVersion) {
    throw DataError(origin.string() + ": unsupported store version " + std::to_string(version));
  }
  return UtcOffset::parse(h.value("offset", "+00:00"));
}

std::string finalize_line(CivilDate day) {
  json j;
  j["type"] = "finalize";
  j["day"] = format_date(day);
  return j.dump();
}

}  // namespace

StoredPost make_stored_post(Micropost post, SentimentScore score, Timestamp ingested_at,
                            UtcOffset store_offset) {
  const CivilDate day = civil_date(post.ts, store_offset);
  return StoredPost{std::move(post), std::move(score), ingested_at, day};
}

std::string serialize_post(const StoredPost& p, UtcOffset offset) {
  json j;
  j["type"] = "post";
  j["id"] = p.post.id;
  j["ts"] = format_timestamp(p.post.ts, offset);
  j["lat"] = p.post.geo.lat();
  j["lon"] = p.post.geo.lon();
  j["user"] = p.post.user;
  j["text"] = p.post.text;
  j["polarity_sum"] = p.score.polarity_sum;
  j["n_tokens"] = p.score.n_tokens;
  j["n_matched"] = p.score.n_matched;
  j["polarity"] = polarity_name(p.score.polarity);
  j["cos_hits"] = p.score.cos_hits;
  j["ingested_at"] = format_timestamp(p.ingested_at, offset);
  j["day"] = format_date(p.day);
  return j.dump();
}

StoredPost deserialize_post(std::string_view line) {
  try {
    const json j = json::parse(line);
    if (j.at("type").get<std::string>() != "post") throw DataError("record is not a post");
    StoredPost p;
    p.post.id = j.at("id").get<std::string>();
    p.post.ts = parse_timestamp(j.at("ts").get<std::string>());
    p.post.geo = GeoPoint(j.at("lat").get<double>(), j.at("lon").get<double>());
    p.post.user = j.at("user").get<std::string>();
    p.post.text = j.at("text").get<std::string>();
    p.score.polarity_sum = j.at("polarity_sum").get<std::int64_t>();
    p.score.n_tokens = j.at("n_tokens").get<std::int64_t>();
    p.score.n_matched = j.at("n_matched").get<std::int64_t>();
    p.score.polarity = parse_polarity(j.at("polarity").get<std::string>());
    p.score.cos_hits = j.at("cos_hits").get<std::vector<std::string>>();
    p.ingested_at = parse_timestamp(j.at("ingested_at").get<std::string>());
    p.day = parse_date(j.at("day").get<std::string>());
    return p;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed store record: ") + e.what());
  }
}

Store::Store(UtcOffset offset, std::unique_ptr<RecordLog> log)
    : offset_(offset), log_(std::move(log)) {}

Store::Store(Store&&) noexcept = default;
Store& Store::operator=(Store&&) noexcept = default;
Store::~Store() = default;

Store Store::open(const std::filesystem::path& path, UtcOffset offset) {
  auto log = std::make_unique<FileRecordLog>(path);
  const std::vector<std::string> lines = log->existing_lines();
  if (lines.empty()) {
    log->append_line(header_line(offset));
    log->sync();
    return Store(offset, std::move(log));
  }
  Store store(parse_header(lines.front(), path), nullptr);
  store.load_lines(std::span(lines).subspan(1), path);
  store.log_ = std::move(log);
  return store;
}

Store Store::open_readonly(const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_committed_lines(path);
  if (lines.empty()) throw DataError(path.string() + ": empty store file");
  Store store(parse_header(lines.front(), path), nullptr);
  store.load_lines(std::span(lines).subspan(1), path);
  return store;
}

Store Store::in_memory(UtcOffset offset, std::unique_ptr<RecordLog> log) {
  if (!log) log = std::make_unique<MemoryRecordLog>();
  log->append_line(header_line(offset));
  return Store(offset, std::move(log));
}

void Store::load_lines(std::span<const std::string> lines, const std::filesystem::path& origin) {
  std::size_t line_no = 1;
  for (const auto& line : lines) {
    ++line_no;
    if (line.empty()) continue;
    try {
      if (line.find("\"type\":\"finalize\"") != std::string::npos) {
        const json j = json::parse(line);
        finalized_.insert(parse_date(j.at("day").get<std::string>()));
        continue;
      }
      index(deserialize_post(line));
    } catch (const Error& e) {
      throw DataError(origin.string() + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const json::exception& e) {
      throw DataError(origin.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void Store::index(StoredPost p) {
  if (by_id_.contains(p.post.id)) {
    throw DataError("duplicate id '" + p.post.id + "' in store");
  }
  by_id_.emplace(p.post.id, posts_.size());
  posts_.push_back(std::move(p));
  sorted_valid_ = false;
}

bool Store::append(const StoredPost& p) {
  if (read_only()) throw IoError("store is open read-only");
  if (contains(p.post.id)) return false;
  if (is_finalized(p.day)) {
    throw DataError("day " + format_date(p.day) + " is finalized; cannot append '" + p.post.id +
                    "'");
  }
  log_->append_line(serialize_post(p, offset_));
  index(p);
  return true;
}

bool Store::contains(std::string_view id) const { return by_id_.find(id) != by_id_.end(); }

void Store::commit() {
  if (log_) log_->sync();
}

void Store::finalize_day(CivilDate day) {
  if (read_only()) throw IoError("store is open read-only");
  if (finalized_.contains(day)) return;
  log_->append_line(finalize_line(day));
  log_->sync();
  finalized_.insert(day);
}

const std::vector<std::size_t>& Store::sorted_order() const {
  if (!sorted_valid_) {
    sorted_.resize(posts_.size());
    for (std::size_t i = 0; i < posts_.size(); ++i) sorted_[i] = i;
    std::sort(sorted_.begin(), sorted_.end(), [&](std::size_t a, std::size_t b) {
      const auto& pa = posts_[a].post;
      const auto& pb = posts_[b].post;
      if (pa.ts != pb.ts) return pa.ts < pb.ts;
      return pa.id < pb.id;
    });
    sorted_valid_ = true;
  }
  return sorted_;
}

std::vector<StoredPost> Store::query_window(Timestamp t0, Timestamp t1,
                                            std::optional<Polarity> polarity) const {
  if (t0 > t1) throw DataError("query window start is after its end");
  const auto& order = sorted_order();
  auto it = std::lower_bound(order.begin(), order.end(), t0,
                             [&](std::size_t i, Timestamp t) { return posts_[i].post.ts < t; });
  std::vector<StoredPost> out;
  for (; it != order.end() && posts_[*it].post.ts < t1; ++it) {
    const StoredPost& p = posts_[*it];
    if (polarity && p.score.polarity != *polarity) continue;
    out.push_back(p);
  }
  return out;
}

std::optional<std::pair<Timestamp, Timestamp>> Store::extent() const {
  if (posts_.empty()) return std::nullopt;
  const auto& order = sorted_order();
  return std::pair{posts_[order.front()].post.ts, posts_[order.back()].post.ts};
}

std::vector<EventRecord> load_events(std::istream& in) {
  std::vector<EventRecord> events;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    if (line == "date,label") continue;
    const auto comma = line.find(',');
    const std::string_view date_text = line.substr(0, comma);
    std::string label = comma == std::string_view::npos ? "FKE" : std::string(line.substr(comma + 1));
    EventRecord ev;
    try {
      ev.date = parse_date(date_text);
    } catch (const DataError& e) {
      throw DataError("events line " + std::to_string(line_no) + ": " + e.what());
    }
    if (label.empty()) throw DataError("events line " + std::to_string(line_no) + ": empty label");
    ev.label = std::move(label);
    if (std::find(events.begin(), events.end(), ev) != events.end()) {
      throw DataError("events line " + std::to_string(line_no) + ": duplicate event " +
                      format_date(ev.date) + "," + ev.label);
    }
    events.push_back(std::move(ev));
  }
  if (in.bad()) throw IoError("error reading events stream");
  return events;
}

const std::vector<EventRecord>& bundled_events() {
  static const std::vector<EventRecord> events = [] {
    std::istringstream in{std::string(bundled::k_events_csv)};
    return load_events(in);
  }();
  return events;
}

}  // namespace taalwatch
