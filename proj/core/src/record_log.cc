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

#include "taalwatch/record_log.h"

#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <system_error>

#include "taalwatch/errors.h"

namespace taalwatch {

namespace {

std::string errno_text() { return std::strerror(errno); }

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());
  return data;
}

std::vector<std::string> split_complete_lines(std::string_view data) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (true) {
    const auto nl = data.find('\n', start);
    if (nl == std::string_view::npos) break;
    lines.emplace_back(data.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace

FileRecordLog::FileRecordLog(std::filesystem::path path) : path_(std::move(path)) {
  std::error_code ec;
  if (std::filesystem::exists(path_, ec)) {
    const std::string data = read_all(path_);
    const auto last_nl = data.rfind('\n');
    const std::size_t committed = last_nl == std::string::npos ? 0 : last_nl + 1;
    if (committed < data.size()) {
      truncated_bytes_ = data.size() - committed;
      std::filesystem::resize_file(path_, committed, ec);
      if (ec) throw IoError("cannot truncate torn tail of " + path_.string() + ": " + ec.message());
    }
    existing_ = split_complete_lines(std::string_view(data).substr(0, committed));
  }
  file_ = std::fopen(path_.c_str(), "ab");
  if (!file_) throw IoError("cannot open " + path_.string() + " for appending: " + errno_text());
  std::setvbuf(file_, nullptr, _IOFBF, 1 << 20);
}

FileRecordLog::~FileRecordLog() {
  if (file_) std::fclose(file_);
}

void FileRecordLog::append_line(std::string_view line) {
  if (std::fwrite(line.data(), 1, line.size(), file_) != line.size() ||
      std::fputc('\n', file_) == EOF) {
    throw IoError("write to " + path_.string() + " failed: " + errno_text());
  }
}

void FileRecordLog::sync() {
  if (std::fflush(file_) != 0) {
    throw IoError("flush of " + path_.string() + " failed: " + errno_text());
  }
  if (::fsync(::fileno(file_)) != 0) {
    throw IoError("fsync of " + path_.string() + " failed: " + errno_text());
  }
}

std::vector<std::string> read_committed_lines(const std::filesystem::path& path) {
  return split_complete_lines(read_all(path));
}

}  // namespace taalwatch
