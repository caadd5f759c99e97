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

#ifndef TAALWATCH_STORE_H_
#define TAALWATCH_STORE_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "taalwatch/classifier.h"
#include "taalwatch/micropost.h"
#include "taalwatch/record_log.h"
#include "taalwatch/time.h"

namespace taalwatch {

// The archived (t, g, O) triple plus author and bookkeeping.
struct StoredPost {
  Micropost post;
  SentimentScore score;
  Timestamp ingested_at;
  CivilDate day;  // civil date of post.ts in the store offset

  friend bool operator==(const StoredPost&, const StoredPost&) = default;
};

StoredPost make_stored_post(Micropost post, SentimentScore score, Timestamp ingested_at,
                            UtcOffset store_offset);

// Store record line format (JSON object per line). Exposed for audit
// tooling and tests.
std::string serialize_post(const StoredPost& p, UtcOffset offset);
StoredPost deserialize_post(std::string_view line);

inline constexpr int kStoreFormatVersion = 1;

// Append-only archive of scored posts: a header line naming the format
// version and offset, then one JSON record per line. The id index and the
// set of finalized days are rebuilt on open.
//
// Single writer. Readers open their own read-only handle and see the
// committed prefix at open time.
class Store {
 public:
  // Opens or creates a store file for writing. A new file gets a header with
  // `offset`; an existing file keeps its own offset (the argument is
  // ignored). A torn trailing line is discarded.
  static Store open(const std::filesystem::path& path, UtcOffset offset = UtcOffset::manila());
  // Loads committed records without taking write ownership.
  static Store open_readonly(const std::filesystem::path& path);
  // In-memory store over an arbitrary log, for tests and fault injection.
  static Store in_memory(UtcOffset offset, std::unique_ptr<RecordLog> log = nullptr);

  Store(Store&&) noexcept;
  Store& operator=(Store&&) noexcept;
  ~Store();

  UtcOffset offset() const { return offset_; }
  bool read_only() const { return log_ == nullptr; }

  // false if the id is already present (the store is unchanged). Throws
  // DataError when the post's day is finalized, IoError on write failure.
  bool append(const StoredPost& p);
  bool contains(std::string_view id) const;
  // Flushes and syncs pending appends.
  void commit();

  // Marks a civil day closed: later appends on that day are refused.
  void finalize_day(CivilDate day);
  bool is_finalized(CivilDate day) const { return finalized_.contains(day); }
  const std::set<CivilDate>& finalized_days() const { return finalized_; }

  std::size_t size() const { return posts_.size(); }
  // Insertion order.
  std::span<const StoredPost> posts() const { return posts_; }

  // Posts with t0 <= ts < t1, optionally restricted to one class, sorted by
  // (ts, id). Throws DataError when t0 > t1.
  std::vector<StoredPost> query_window(Timestamp t0, Timestamp t1,
                                       std::optional<Polarity> polarity = std::nullopt) const;

  // Earliest and latest ts, if any posts are stored.
  std::optional<std::pair<Timestamp, Timestamp>> extent() const;

 private:
  Store(UtcOffset offset, std::unique_ptr<RecordLog> log);
  void load_lines(std::span<const std::string> lines, const std::filesystem::path& origin);
  void index(StoredPost p);
  const std::vector<std::size_t>& sorted_order() const;

  UtcOffset offset_;
  std::unique_ptr<RecordLog> log_;
  std::vector<StoredPost> posts_;
  std::unordered_map<std::string, std::size_t, internal::StringHash, std::equal_to<>> by_id_;
  std::set<CivilDate> finalized_;
  mutable std::vector<std::size_t> sorted_;
  mutable bool sorted_valid_ = false;
};

// Ground-truth event, e.g. a fish kill.
struct EventRecord {
  CivilDate date;
  std::string label;

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

// "date,label" lines (ISO dates). Blank and '#' lines are skipped, as is a
// leading "date,label" header. Duplicate (date, label) pairs throw DataError;
// malformed dates throw DataError naming the line.
std::vector<EventRecord> load_events(std::istream& in);
// 2013-02-02 and 2014-01-16, both labelled FKE.
const std::vector<EventRecord>& bundled_events();

}  // namespace taalwatch

#endif  // TAALWATCH_STORE_H_
