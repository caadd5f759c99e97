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

#ifndef TAALWATCH_INGEST_H_
#define TAALWATCH_INGEST_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taalwatch/classifier.h"
#include "taalwatch/errors.h"
#include "taalwatch/geo.h"
#include "taalwatch/lexicon.h"
#include "taalwatch/micropost.h"
#include "taalwatch/store.h"
#include "taalwatch/time.h"

namespace taalwatch {

enum class SourceKind { kReplayFile, kHttpJson };

// Civil dates (store offset), both inclusive. Posts up to backfill_days
// before `first` are still accepted, mirroring a search API that returns
// roughly a week of history on the first request.
struct StudyWindow {
  CivilDate first;
  CivilDate last;
  int backfill_days = 7;

  bool contains(CivilDate d) const {
    return d >= first - std::chrono::days(backfill_days) && d <= last;
  }
};

struct SourceConfig {
  SourceKind kind = SourceKind::kReplayFile;
  std::string location;  // path or URL
  std::chrono::seconds poll_interval{15 * 60};
  std::chrono::seconds request_timeout{30};
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{500};
  std::size_t limit = 1000;
  GeoFence fence = GeoFence::taal_default();
  std::optional<StudyWindow> window;
};

// Throws DataError when poll_interval or the retry settings are not positive.
void validate(const SourceConfig& cfg);

struct IngestReport {
  std::size_t accepted = 0;
  std::size_t rejected_out_of_fence = 0;
  std::size_t rejected_malformed = 0;
  std::size_t duplicates = 0;
  // Earliest and latest ts among accepted posts.
  std::optional<std::pair<Timestamp, Timestamp>> window;
  // Id of the last presented record that carried a readable id.
  std::optional<std::string> last_seen_id;

  std::size_t presented() const {
    return accepted + rejected_out_of_fence + rejected_malformed + duplicates;
  }
};

// Raised when the store fails mid-batch. `report` covers the records
// processed before the failure; report.accepted posts were committed.
class IngestError : public IoError {
 public:
  IngestError(const std::string& what, IngestReport report)
      : IoError(what), report_(std::move(report)) {}
  const IngestReport& report() const { return report_; }

 private:
  IngestReport report_;
};

// Raw wire record: {"id","ts","lat","lon","user","text"}. Returns the post or
// a reason string when the record is malformed (bad JSON, missing or
// mistyped field, invalid coordinate or timestamp, empty id, invalid UTF-8,
// text longer than kMaxTextCodepoints).
struct ParsedRecord {
  std::optional<Micropost> post;
  std::string error;
  std::optional<std::string> id;  // when readable even if the record is not
};
ParsedRecord parse_raw_record(std::string_view json_text);

// Single-line JSON form of a post; ts is rendered in `offset`.
std::string serialize_raw_record(const Micropost& post, UtcOffset offset);

// Whole replay file as one record per non-empty line. Throws IoError if the
// file cannot be read.
std::vector<std::string> read_replay(const std::filesystem::path& path);

struct IngestOptions {
  ScoringOptions scoring;
  // Source of ingested_at; defaults to the system clock.
  std::function<Timestamp()> clock;
};

// Validates, fence-filters, deduplicates, scores and appends each record in
// order, then commits. Posts on finalized days and outside cfg.window count
// as malformed.
IngestReport ingest_batch(std::span<const std::string> records, const SourceConfig& cfg,
                          const Lexicon& lexicon, const CosPhraseList& cos, Store& store,
                          const IngestOptions& options = {});

// GET <location>?since_id=..&limit=.. expecting a JSON array of raw records.
// Transport failures and 5xx/429 responses are retried with exponential
// backoff up to cfg.max_attempts. Throws IoError on final failure and
// DataError when the body is not a JSON array. Elements are returned
// unvalidated, one serialized record each.
std::vector<std::string> poll_http(const SourceConfig& cfg,
                                   const std::optional<std::string>& since_id);

}  // namespace taalwatch

#endif  // TAALWATCH_INGEST_H_
