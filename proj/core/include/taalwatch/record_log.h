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

#ifndef TAALWATCH_RECORD_LOG_H_
#define TAALWATCH_RECORD_LOG_H_

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace taalwatch {

// Sink for newline-terminated records. append_line() may buffer; sync()
// makes every appended line durable.
class RecordLog {
 public:
  virtual ~RecordLog() = default;
  virtual void append_line(std::string_view line) = 0;
  virtual void sync() = 0;
};

// Append-only text file. Opening scans the existing file; a trailing
// fragment without a newline (a torn write) is truncated away.
class FileRecordLog final : public RecordLog {
 public:
  explicit FileRecordLog(std::filesystem::path path);
  ~FileRecordLog() override;

  FileRecordLog(const FileRecordLog&) = delete;
  FileRecordLog& operator=(const FileRecordLog&) = delete;

  // Complete lines present when the file was opened, without newlines.
  const std::vector<std::string>& existing_lines() const { return existing_; }
  std::uint64_t truncated_bytes() const { return truncated_bytes_; }

  void append_line(std::string_view line) override;
  void sync() override;

 private:
  std::filesystem::path path_;
  std::FILE* file_ = nullptr;
  std::vector<std::string> existing_;
  std::uint64_t truncated_bytes_ = 0;
};

// Reads complete lines only, ignoring a torn tail. Does not modify the file.
std::vector<std::string> read_committed_lines(const std::filesystem::path& path);

}  // namespace taalwatch

#endif  // TAALWATCH_RECORD_LOG_H_
