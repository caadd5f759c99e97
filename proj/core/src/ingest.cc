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

#include "taalwatch/ingest.h"

#include <algorithm>
#include <fstream>

#include "json.hpp"
#include "unicode.h"

namespace taalwatch {

namespace {

using json = nlohmann::json;

Timestamp system_now() {
  return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
}

const json* field(const json& obj, const char* name) {
  const auto it = obj.find(name);
  return it == obj.end() ? nullptr : &*it;
}

}  // namespace

void validate(const SourceConfig& cfg) {
  if (cfg.poll_interval <= std::chrono::seconds::zero()) {
    throw DataError("poll interval must be positive");
  }
  if (cfg.request_timeout <= std::chrono::seconds::zero()) {
    throw DataError("request timeout must be positive");
  }
  if (cfg.max_attempts < 1) throw DataError("max_attempts must be at least 1");
  if (cfg.window && cfg.window->last < cfg.window->first) {
    throw DataError("study window ends before it starts");
  }
}

ParsedRecord parse_raw_record(std::string_view json_text) {
  ParsedRecord out;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    out.error = std::string("invalid JSON: ") + e.what();
    return out;
  }
  if (!j.is_object()) {
    out.error = "record is not a JSON object";
    return out;
  }
  const json* id = field(j, "id");
  if (id && id->is_string()) out.id = id->get<std::string>();

  const auto require_string = [&](const char* name) -> const std::string* {
    const json* f = field(j, name);
    if (!f || !f->is_string()) {
      out.error = std::string("missing or non-string field '") + name + "'";
      return nullptr;
    }
    return f->get_ptr<const std::string*>();
  };
  const auto require_number = [&](const char* name) -> std::optional<double> {
    const json* f = field(j, name);
    if (!f || !f->is_number()) {
      out.error = std::string("missing or non-numeric field '") + name + "'";
      return std::nullopt;
    }
    return f->get<double>();
  };

  const std::string* id_s = require_string("id");
  if (!id_s) return out;
  if (id_s->empty()) {
    out.error = "empty id";
    return out;
  }
  const std::string* ts_s = require_string("ts");
  if (!ts_s) return out;
  const auto lat = require_number("lat");
  if (!lat) return out;
  const auto lon = require_number("lon");
  if (!lon) return out;
  const std::string* user = require_string("user");
  if (!user) return out;
  const std::string* text = require_string("text");
  if (!text) return out;

  if (!unicode::is_valid_utf8(*text) || !unicode::is_valid_utf8(*id_s) ||
      !unicode::is_valid_utf8(*user)) {
    out.error = "invalid UTF-8";
    return out;
  }
  if (unicode::codepoint_count(*text) > kMaxTextCodepoints) {
    out.error = "text longer than " + std::to_string(kMaxTextCodepoints) + " characters";
    return out;
  }
  try {
    Micropost p;
    p.id = *id_s;
    p.ts = parse_timestamp(*ts_s);
    p.geo = GeoPoint(*lat, *lon);
    p.user = *user;
    p.text = *text;
    out.post = std::move(p);
  } catch (const DataError& e) {
    out.error = e.what();
  }
  return out;
}

std::string serialize_raw_record(const Micropost& post, UtcOffset offset) {
  json j;
  j["id"] = post.id;
  j["ts"] = format_timestamp(post.ts, offset);
  j["lat"] = post.geo.lat();
  j["lon"] = post.geo.lon();
  j["user"] = post.user;
  j["text"] = post.text;
  return j.dump();
}

std::vector<std::string> read_replay(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open replay file " + path.string());
  std::vector<std::string> records;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    records.push_back(std::move(line));
  }
  if (in.bad()) throw IoError("error reading replay file " + path.string());
  return records;
}

IngestReport ingest_batch(std::span<const std::string> records, const SourceConfig& cfg,
                          const Lexicon& lexicon, const CosPhraseList& cos, Store& store,
                          const IngestOptions& options) {
  validate(cfg);
  if (store.read_only()) throw IoError("store is open read-only");
  const auto clock = options.clock ? options.clock : system_now;
  const UtcOffset offset = store.offset();

  IngestReport report;
  for (const auto& raw : records) {
    ParsedRecord parsed = parse_raw_record(raw);
    if (parsed.id) report.last_seen_id = parsed.id;
    if (!parsed.post) {
      ++report.rejected_malformed;
      continue;
    }
    Micropost& post = *parsed.post;
    if (store.contains(post.id)) {
      ++report.duplicates;
      continue;
    }
    const CivilDate day = civil_date(post.ts, offset);
    if (cfg.window && !cfg.window->contains(day)) {
      ++report.rejected_malformed;
      continue;
    }
    if (!in_fence(post.geo, cfg.fence)) {
      ++report.rejected_out_of_fence;
      continue;
    }
    if (store.is_finalized(day)) {
      ++report.rejected_malformed;
      continue;
    }
    SentimentScore s = score(lexicon, cos, post.text, options.scoring);
    const Timestamp ts = post.ts;
    try {
      store.append(make_stored_post(std::move(post), std::move(s), clock(), offset));
    } catch (const IoError& e) {
      try {
        store.commit();
      } catch (const IoError&) {
        // Nothing more can be done; the caller sees the original failure.
      }
      throw IngestError(std::string("store write failed after ") +
                            std::to_string(report.accepted) + " committed records: " + e.what(),
                        report);
    }
    ++report.accepted;
    if (!report.window) {
      report.window = std::pair{ts, ts};
    } else {
      report.window->first = std::min(report.window->first, ts);
      report.window->second = std::max(report.window->second, ts);
    }
  }
  try {
    store.commit();
  } catch (const IoError& e) {
    throw IngestError(std::string("store commit failed: ") + e.what(), report);
  }
  return report;
}

}  // namespace taalwatch
